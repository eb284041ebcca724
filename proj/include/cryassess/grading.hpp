#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "cryassess/cohort.hpp"
#include "cryassess/progression.hpp"

namespace cry {

enum class Grade { A, B, C, D, E };

const char* to_string(Grade g);

// Order-preserving bijection between improvement levels and letters,
// level 4 mapping to the best letter. The default is A..E for 4..0;
// alternative letter sets stay configurable because the source data's
// grading figure only pins the two endpoints.
struct GradeScheme {
    std::array<Grade, 5> by_level{Grade::E, Grade::D, Grade::C, Grade::B, Grade::A};
};

// Throws std::out_of_range for levels outside 0..4.
Grade grade_of(int level, const GradeScheme& scheme = {});

enum class GroupBy { None, BySex, ByState };

struct GradeDistribution {
    int quarter = 0;
    std::string group;  // "overall", sex or state label
    std::array<double, 5> proportions{};  // indexed by improvement level 0..4
    long long population = 0;
};

// Per-grade proportions among students with a record in the quarter,
// overall or split by sex/state. Groups are emitted sorted by label;
// empty groups are omitted.
std::vector<GradeDistribution> grade_distribution(const Cohort& cohort, int quarter,
                                                  GroupBy group_by = GroupBy::None);

// Progression scores per sex or state group. Groups with no paired
// children are omitted.
std::map<std::string, ProgressionScore> grouped_progression(
    const Cohort& cohort, int from_q, int to_q, GroupBy group_by,
    const ProgressionOptions& options = {});

}  // namespace cry
