#include "cryassess/cohort.hpp"

#include <algorithm>
#include <set>

namespace cry {

CohortBuildResult build_cohort(std::vector<AssessmentRecord> records) {
    CohortBuildResult result;

    // First occurrence wins; stable_sort keeps input order within a key so
    // the winner is deterministic.
    std::stable_sort(records.begin(), records.end(),
                     [](const AssessmentRecord& a, const AssessmentRecord& b) {
                         return std::tie(a.child_id, a.quarter) < std::tie(b.child_id, b.quarter);
                     });

    Cohort& cohort = result.cohort;
    cohort.records_.reserve(records.size());
    for (auto& r : records) {
        if (!cohort.records_.empty()) {
            const auto& prev = cohort.records_.back();
            if (prev.child_id == r.child_id && prev.quarter == r.quarter) {
                result.duplicates.push_back({r.child_id, r.quarter});
                continue;
            }
        }
        cohort.state_counts_[r.state]++;
        cohort.sex_counts_[r.sex]++;
        cohort.records_.push_back(std::move(r));
    }
    return result;
}

const AssessmentRecord* Cohort::find(const std::string& child_id, int quarter) const {
    auto it = std::lower_bound(records_.begin(), records_.end(), std::tie(child_id, quarter),
                               [](const AssessmentRecord& r, const auto& key) {
                                   return std::tie(r.child_id, r.quarter) < key;
                               });
    if (it != records_.end() && it->child_id == child_id && it->quarter == quarter)
        return &*it;
    return nullptr;
}

std::vector<const AssessmentRecord*> Cohort::quarter(int q) const {
    std::vector<const AssessmentRecord*> out;
    for (const auto& r : records_)
        if (r.quarter == q) out.push_back(&r);
    return out;
}

std::vector<int> Cohort::quarters() const {
    std::set<int> qs;
    for (const auto& r : records_) qs.insert(r.quarter);
    return {qs.begin(), qs.end()};
}

std::vector<std::string> Cohort::missing_in(int from_q, int to_q) const {
    std::vector<std::string> missing;
    for (const auto& r : records_)
        if (r.quarter == from_q && find(r.child_id, to_q) == nullptr)
            missing.push_back(r.child_id);
    return missing;
}

}  // namespace cry
