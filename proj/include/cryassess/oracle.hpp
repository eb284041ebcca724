#pragma once

#include <map>
#include <string>

#include "cryassess/cohort.hpp"

namespace cry::oracle {

// Naive per-record re-implementations used for equivalence testing.
// These deliberately share no code with the main scoring modules:
// lag scores come from sorting raw records per lag and reading the
// empirical CDF, progression from per-child displacement averages.

// (lag, level) -> score for the given quarter.
std::map<int, std::map<int, double>> lag_scores(const Cohort& cohort, int quarter,
                                                bool include_positive_lags = false);

struct Progression {
    double s = 0.0;
    double s_star = 0.0;
};

Progression progression(const Cohort& cohort, int from_q, int to_q);

}  // namespace cry::oracle
