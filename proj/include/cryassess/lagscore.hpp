#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cryassess/cohort.hpp"
#include "cryassess/table.hpp"

namespace cry {

// Per-quarter cumulative improvement scores conditioned on class lag.
// score[lag][k] is the cumulative proportion of same-lag students at
// improvement level <= k, with column 0 pinned to 0 and column 4 to 1.
struct LagScoreTable {
    int quarter = 0;
    std::vector<int> lags;  // ascending, rows with at least one student
    std::vector<std::array<double, 5>> scores;
    std::vector<long long> row_counts;
    long long excluded_positive_lag = 0;

    std::optional<double> score(int lag, int level) const;
};

struct LagScoreOptions {
    // Laggards only by default; positive-lag rows can be kept for
    // exploratory runs.
    bool include_positive_lags = false;
};

// Builds the score table for one quarter. Throws std::invalid_argument
// if the quarter has no records.
LagScoreTable lag_score_table(const Cohort& cohort, int quarter,
                              const LagScoreOptions& options = {});

// Looks up a student's score in a table built for the same quarter.
// Returns nullopt when the student's lag has no row (e.g. positive lag);
// throws std::invalid_argument on a cross-quarter lookup.
std::optional<double> score_student(const LagScoreTable& table,
                                    const AssessmentRecord& record);

}  // namespace cry
