#include "cryassess/table.hpp"

#include <algorithm>
#include <map>

namespace cry {

namespace {

ContingencyTable from_counts(const std::map<int, std::map<int, long long>>& cells) {
    ContingencyTable t;
    std::map<int, long long> col_totals;
    for (const auto& [row, cols] : cells) {
        t.row_labels.push_back(row);
        for (const auto& [col, n] : cols) col_totals[col] += n;
    }
    for (const auto& [col, n] : col_totals) t.col_labels.push_back(col);

    t.counts.assign(t.row_labels.size(),
                    std::vector<long long>(t.col_labels.size(), 0));
    t.row_sums.assign(t.row_labels.size(), 0);
    t.col_sums.assign(t.col_labels.size(), 0);
    for (std::size_t i = 0; i < t.row_labels.size(); ++i) {
        const auto& cols = cells.at(t.row_labels[i]);
        for (std::size_t j = 0; j < t.col_labels.size(); ++j) {
            auto it = cols.find(t.col_labels[j]);
            long long n = it == cols.end() ? 0 : it->second;
            t.counts[i][j] = n;
            t.row_sums[i] += n;
            t.col_sums[j] += n;
            t.total += n;
        }
    }
    return t;
}

}  // namespace

ContingencyTable ContingencyTable::from_pairs(
    const std::vector<std::pair<int, int>>& pairs) {
    std::map<int, std::map<int, long long>> cells;
    for (const auto& [r, c] : pairs) cells[r][c]++;
    return from_counts(cells);
}

ContingencyTable ContingencyTable::with_labels(std::vector<int> rows,
                                               std::vector<int> cols) const {
    std::map<int, std::map<int, long long>> cells;
    for (int r : rows) cells[r];  // ensure rows exist even when empty
    for (std::size_t i = 0; i < row_labels.size(); ++i)
        for (std::size_t j = 0; j < col_labels.size(); ++j)
            cells[row_labels[i]][col_labels[j]] = counts[i][j];
    auto t = from_counts(cells);

    // Zero-pad requested columns.
    std::sort(cols.begin(), cols.end());
    std::map<int, std::map<int, long long>> padded;
    for (std::size_t i = 0; i < t.row_labels.size(); ++i) {
        auto& row = padded[t.row_labels[i]];
        for (int c : cols) row[c] = 0;
        for (std::size_t j = 0; j < t.col_labels.size(); ++j)
            row[t.col_labels[j]] = t.counts[i][j];
    }
    return from_counts(padded);
}

ContingencyTable crosstab(const Cohort& cohort, int quarter, const RecordKey& row_key,
                          const RecordKey& col_key, const RecordPredicate& filter) {
    std::vector<std::pair<int, int>> pairs;
    for (const auto* r : cohort.quarter(quarter)) {
        if (filter && !filter(*r)) continue;
        pairs.emplace_back(row_key(*r), col_key(*r));
    }
    return ContingencyTable::from_pairs(pairs);
}

RowProportionTable row_normalize(const ContingencyTable& table) {
    RowProportionTable out;
    out.col_labels = table.col_labels;
    for (std::size_t i = 0; i < table.row_labels.size(); ++i) {
        if (table.row_sums[i] == 0) {
            out.excluded_rows.push_back(table.row_labels[i]);
            continue;
        }
        out.row_labels.push_back(table.row_labels[i]);
        out.row_sums.push_back(table.row_sums[i]);
        std::vector<double> props(table.col_labels.size());
        for (std::size_t j = 0; j < props.size(); ++j)
            props[j] = static_cast<double>(table.counts[i][j]) /
                       static_cast<double>(table.row_sums[i]);
        out.proportions.push_back(std::move(props));
    }
    return out;
}

}  // namespace cry
