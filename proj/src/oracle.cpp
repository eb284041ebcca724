#include "cryassess/oracle.hpp"

#include <algorithm>
#include <vector>

namespace cry::oracle {

std::map<int, std::map<int, double>> lag_scores(const Cohort& cohort, int quarter,
                                                bool include_positive_lags) {
    // Empirical CDF per lag group, read off sorted raw levels.
    std::map<int, std::vector<int>> levels_by_lag;
    for (const auto& r : cohort.records()) {
        if (r.quarter != quarter) continue;
        int lag = r.compatible_class - r.age_appropriate_class;
        if (lag > 0 && !include_positive_lags) continue;
        int level = 0;
        for (int bit : r.improvements.bits) level += bit;
        levels_by_lag[lag].push_back(level);
    }

    std::map<int, std::map<int, double>> out;
    for (auto& [lag, levels] : levels_by_lag) {
        std::sort(levels.begin(), levels.end());
        for (int k = 0; k <= 4; ++k) {
            if (k == 0) {
                out[lag][k] = 0.0;
            } else if (k == 4) {
                out[lag][k] = 1.0;
            } else {
                auto at_most_k = std::upper_bound(levels.begin(), levels.end(), k) -
                                 levels.begin();
                out[lag][k] = static_cast<double>(at_most_k) /
                              static_cast<double>(levels.size());
            }
        }
    }
    return out;
}

Progression progression(const Cohort& cohort, int from_q, int to_q) {
    // Mean per-child displacement within each starting level, summed.
    std::map<int, std::vector<int>> displacement_by_level;
    for (const auto& r : cohort.records()) {
        if (r.quarter != from_q) continue;
        const AssessmentRecord* later = nullptr;
        for (const auto& s : cohort.records())
            if (s.child_id == r.child_id && s.quarter == to_q) later = &s;
        if (later == nullptr) continue;
        int from_level = 0, to_level = 0;
        for (int bit : r.improvements.bits) from_level += bit;
        for (int bit : later->improvements.bits) to_level += bit;
        displacement_by_level[from_level].push_back(to_level - from_level);
    }

    Progression result;
    for (const auto& [level, displacements] : displacement_by_level) {
        double sum = 0.0;
        for (int d : displacements) sum += d;
        result.s += sum / static_cast<double>(displacements.size());
    }
    result.s_star = result.s / 30.0;
    return result;
}

}  // namespace cry::oracle
