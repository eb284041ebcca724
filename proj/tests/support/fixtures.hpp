#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "cryassess/cohort.hpp"

namespace fixtures {

// Published quarter-1 lag x improvement-level counts (lags -7..0).
extern const std::map<int, std::array<long long, 5>> kQ1LagCounts;

// Published quarter-1 score table at two decimals, same axes.
extern const std::map<int, std::array<double, 5>> kQ1LagScores;

// Children with positive class lag, excluded from the lag tables but part
// of the 4000-child panel; improvement-level counts at lag +1.
extern const std::array<long long, 5> kPositiveLagLevelCounts;

// Transition counts between consecutive quarters, by starting level.
// Quarter 1 -> 2 has rows 0..4; quarter 2 -> 3 has rows 1..4 (nobody is
// at level 0 in quarter 2). Columns are levels 1..4 in both.
extern const std::map<int, std::array<long long, 4>> kQ1Q2Transitions;
extern const std::map<int, std::array<long long, 4>> kQ2Q3Transitions;

// Published rate matrices at two-decimal percent, same axes as above.
extern const std::map<int, std::array<double, 4>> kQ1Q2RatesPercent;
extern const std::map<int, std::array<double, 4>> kQ2Q3RatesPercent;
extern const std::array<double, 4> kQ1Q2ColumnSumsPercent;
extern const std::array<double, 4> kQ2Q3ColumnSumsPercent;

// Full three-quarter panel of 4000 children reconstructed from the tables
// above: quarter-1 levels per lag row, then transitions dealt out in child
// order. Demographics: 2119 female / 1881 male; state populations 565 /
// 700 / 1001 / 1734 (J&K, Jharkhand, Manipur, West Bengal).
cry::Cohort paper_cohort();

// Same cohort as loose records (pre-dedup), for ingest-level tests.
std::vector<cry::AssessmentRecord> paper_records();

// Synthetic one-group panel hitting the given progression-score targets:
// five quarter-1 level rows of `row_population` children each; between
// quarters a computed share of each row below level 4 jumps to level 4.
// s_star(q1->q2) lands on target1 exactly, s_star(q2->q3) within 1/(30*row)
// of target2.
std::vector<cry::AssessmentRecord> group_panel(const std::string& id_prefix,
                                               cry::Sex sex, cry::State state,
                                               double target1, double target2,
                                               int row_population = 1000);

// Two-group cohort reproducing the published by-sex scores.
cry::Cohort sex_groups_cohort();
// Four-group cohort reproducing the published by-state scores.
cry::Cohort state_groups_cohort();

}  // namespace fixtures
