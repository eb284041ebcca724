#include "cryassess/grading.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace cry {

const char* to_string(Grade g) {
    switch (g) {
        case Grade::A: return "A";
        case Grade::B: return "B";
        case Grade::C: return "C";
        case Grade::D: return "D";
        case Grade::E: return "E";
    }
    return "?";
}

Grade grade_of(int level, const GradeScheme& scheme) {
    if (level < 0 || level > 4)
        throw std::out_of_range(fmt::format("improvement level {} outside 0..4", level));
    return scheme.by_level[static_cast<std::size_t>(level)];
}

namespace {

std::string group_label(const AssessmentRecord& r, GroupBy group_by) {
    switch (group_by) {
        case GroupBy::None: return "overall";
        case GroupBy::BySex: return to_string(r.sex);
        case GroupBy::ByState: return to_string(r.state);
    }
    return "overall";
}

}  // namespace

std::vector<GradeDistribution> grade_distribution(const Cohort& cohort, int quarter,
                                                  GroupBy group_by) {
    auto records = cohort.quarter(quarter);
    if (records.empty())
        throw std::invalid_argument(fmt::format("no records for quarter {}", quarter));

    std::map<std::string, std::array<long long, 5>> counts;
    for (const auto* r : records)
        counts[group_label(*r, group_by)][static_cast<std::size_t>(improvement_level(*r))]++;

    std::vector<GradeDistribution> out;
    for (const auto& [label, levels] : counts) {
        GradeDistribution d;
        d.quarter = quarter;
        d.group = label;
        d.population = levels[0] + levels[1] + levels[2] + levels[3] + levels[4];
        for (std::size_t k = 0; k < 5; ++k)
            d.proportions[k] =
                static_cast<double>(levels[k]) / static_cast<double>(d.population);
        out.push_back(d);
    }
    return out;  // map iteration keeps groups sorted by label
}

std::map<std::string, ProgressionScore> grouped_progression(
    const Cohort& cohort, int from_q, int to_q, GroupBy group_by,
    const ProgressionOptions& options) {
    std::map<std::string, ProgressionScore> out;

    std::vector<std::string> labels;
    for (const auto* r : cohort.quarter(from_q)) {
        auto label = group_label(*r, group_by);
        if (std::find(labels.begin(), labels.end(), label) == labels.end())
            labels.push_back(label);
    }
    std::sort(labels.begin(), labels.end());

    for (const auto& label : labels) {
        RecordPredicate in_group = [&](const AssessmentRecord& r) {
            return group_label(r, group_by) == label;
        };
        try {
            auto matrix = progression_matrix(cohort, from_q, to_q, in_group);
            out[label] = progression_score(matrix, options);
        } catch (const std::invalid_argument&) {
            // group has no paired children; omitted
        }
    }
    return out;
}

}  // namespace cry
