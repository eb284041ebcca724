#include "cryassess/progression.hpp"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace cry {

ProgressionRateMatrix progression_matrix(const Cohort& cohort, int from_q, int to_q,
                                         const RecordPredicate& filter) {
    std::vector<std::pair<int, int>> transitions;
    long long unpaired = 0;
    for (const auto* from : cohort.quarter(from_q)) {
        if (filter && !filter(*from)) continue;
        const auto* to = cohort.find(from->child_id, to_q);
        if (to == nullptr) {
            unpaired++;
            continue;
        }
        transitions.emplace_back(improvement_level(*from), improvement_level(*to));
    }
    if (transitions.empty())
        throw std::invalid_argument(
            fmt::format("no children present in both quarter {} and quarter {}", from_q, to_q));

    // Full 0..4 axes first, so dropped levels are recorded explicitly.
    auto counts = ContingencyTable::from_pairs(transitions).with_labels({0, 1, 2, 3, 4},
                                                                        {0, 1, 2, 3, 4});

    ProgressionRateMatrix m;
    m.from_quarter = from_q;
    m.to_quarter = to_q;
    m.paired_children = counts.total;
    m.unpaired_children = unpaired;

    std::vector<std::size_t> kept_rows, kept_cols;
    for (std::size_t i = 0; i < counts.row_labels.size(); ++i) {
        if (counts.row_sums[i] == 0)
            m.dropped_rows.push_back(counts.row_labels[i]);
        else
            kept_rows.push_back(i);
    }
    for (std::size_t j = 0; j < counts.col_labels.size(); ++j) {
        if (counts.col_sums[j] == 0)
            m.dropped_cols.push_back(counts.col_labels[j]);
        else
            kept_cols.push_back(j);
    }

    m.column_sums.assign(kept_cols.size(), 0.0);
    for (std::size_t i : kept_rows) {
        m.row_levels.push_back(counts.row_labels[i]);
        m.row_sums.push_back(counts.row_sums[i]);
        std::vector<long long> row_counts;
        std::vector<double> row_rates;
        for (std::size_t k = 0; k < kept_cols.size(); ++k) {
            long long n = counts.counts[i][kept_cols[k]];
            double rate = static_cast<double>(n) / static_cast<double>(counts.row_sums[i]);
            row_counts.push_back(n);
            row_rates.push_back(rate);
            m.column_sums[k] += rate;
        }
        m.counts.push_back(std::move(row_counts));
        m.rates.push_back(std::move(row_rates));
    }
    for (std::size_t j : kept_cols) m.col_levels.push_back(counts.col_labels[j]);
    return m;
}

ProgressionScore progression_score(const ProgressionRateMatrix& matrix,
                                   const ProgressionOptions& options) {
    ProgressionScore score;
    for (int level : matrix.row_levels) score.row_index_sum += level;

    long long population = 0;
    for (long long n : matrix.row_sums) population += n;

    double direct = 0.0;
    for (std::size_t i = 0; i < matrix.row_levels.size(); ++i) {
        double row_weight = options.weighted
                                ? static_cast<double>(matrix.row_sums[i]) /
                                      static_cast<double>(population)
                                : 1.0;
        for (std::size_t j = 0; j < matrix.col_levels.size(); ++j)
            direct += row_weight * matrix.rates[i][j] *
                      (matrix.col_levels[j] - matrix.row_levels[i]);
    }

    if (!options.weighted) {
        // Cross-check against the simplified form sum_j j*p_.j - sum_i i.
        double simplified = -static_cast<double>(score.row_index_sum);
        for (std::size_t j = 0; j < matrix.col_levels.size(); ++j)
            simplified += matrix.col_levels[j] * matrix.column_sums[j];
        if (std::abs(direct - simplified) > 1e-9)
            throw std::logic_error(
                fmt::format("progression score identity violated: {} vs {}", direct,
                            simplified));
    }

    score.s = direct;
    score.s_star = direct / 30.0;
    return score;
}

}  // namespace cry
