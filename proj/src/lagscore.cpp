#include "cryassess/lagscore.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace cry {

LagScoreTable lag_score_table(const Cohort& cohort, int quarter,
                              const LagScoreOptions& options) {
    auto records = cohort.quarter(quarter);
    if (records.empty())
        throw std::invalid_argument(fmt::format("no records for quarter {}", quarter));

    LagScoreTable table;
    table.quarter = quarter;
    for (const auto* r : records)
        if (class_lag(*r) > 0 && !options.include_positive_lags)
            table.excluded_positive_lag++;

    RecordPredicate filter = nullptr;
    if (!options.include_positive_lags)
        filter = [](const AssessmentRecord& r) { return class_lag(r) <= 0; };

    auto counts = crosstab(cohort, quarter, class_lag, improvement_level, filter)
                      .with_labels({}, {0, 1, 2, 3, 4});

    for (std::size_t i = 0; i < counts.row_labels.size(); ++i) {
        if (counts.row_sums[i] == 0) continue;  // no students at this lag
        table.lags.push_back(counts.row_labels[i]);
        table.row_counts.push_back(counts.row_sums[i]);

        std::array<double, 5> row{};
        double cumulative = 0.0;
        for (int level = 0; level <= 4; ++level) {
            cumulative += static_cast<double>(counts.counts[i][static_cast<std::size_t>(level)]) /
                          static_cast<double>(counts.row_sums[i]);
            row[static_cast<std::size_t>(level)] = cumulative;
        }
        // Level 0 is assigned 0 outright; level 4 is the full mass.
        row[0] = 0.0;
        row[4] = 1.0;
        table.scores.push_back(row);
    }
    return table;
}

std::optional<double> LagScoreTable::score(int lag, int level) const {
    if (level < 0 || level > 4) return std::nullopt;
    auto it = std::find(lags.begin(), lags.end(), lag);
    if (it == lags.end()) return std::nullopt;
    return scores[static_cast<std::size_t>(it - lags.begin())][static_cast<std::size_t>(level)];
}

std::optional<double> score_student(const LagScoreTable& table,
                                    const AssessmentRecord& record) {
    if (record.quarter != table.quarter)
        throw std::invalid_argument(
            fmt::format("score table is for quarter {}, record is from quarter {}",
                        table.quarter, record.quarter));
    return table.score(class_lag(record), improvement_level(record));
}

}  // namespace cry
