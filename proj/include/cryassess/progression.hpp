#pragma once

#include <vector>

#include "cryassess/cohort.hpp"
#include "cryassess/table.hpp"

namespace cry {

// Row-stochastic matrix of improvement-level transitions between two
// quarters. Only children with a record in both quarters contribute;
// all-zero rows and columns are dropped and recorded.
struct ProgressionRateMatrix {
    int from_quarter = 0;
    int to_quarter = 0;
    std::vector<int> row_levels;
    std::vector<int> col_levels;
    std::vector<std::vector<long long>> counts;
    std::vector<long long> row_sums;
    std::vector<std::vector<double>> rates;
    std::vector<double> column_sums;  // unweighted sums of rates per column
    std::vector<int> dropped_rows;
    std::vector<int> dropped_cols;
    long long paired_children = 0;
    long long unpaired_children = 0;
};

struct ProgressionScore {
    double s = 0.0;       // sum over rows of expected level displacement
    double s_star = 0.0;  // s / 30
    int row_index_sum = 0;
};

ProgressionRateMatrix progression_matrix(const Cohort& cohort, int from_q, int to_q,
                                         const RecordPredicate& filter = nullptr);

struct ProgressionOptions {
    // Weight rows by their populations instead of summing them equally.
    // The unweighted form is the published arithmetic; this variant is
    // an extension for sensitivity checks.
    bool weighted = false;
};

// S by the direct double sum sum_ij p_ij (j - i), cross-checked against
// the simplified form sum_j j*p_.j - sum_i i (must agree within 1e-9).
ProgressionScore progression_score(const ProgressionRateMatrix& matrix,
                                   const ProgressionOptions& options = {});

}  // namespace cry
