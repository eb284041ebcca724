#pragma once

#include <functional>
#include <vector>

#include "cryassess/cohort.hpp"

namespace cry {

// Counts over two ordered integer axes, with marginals.
struct ContingencyTable {
    std::vector<int> row_labels;  // ascending
    std::vector<int> col_labels;  // ascending
    std::vector<std::vector<long long>> counts;
    std::vector<long long> row_sums;
    std::vector<long long> col_sums;
    long long total = 0;

    bool empty() const { return total == 0; }

    static ContingencyTable from_pairs(const std::vector<std::pair<int, int>>& pairs);

    // Zero-pads the axes so they cover exactly these labels.
    ContingencyTable with_labels(std::vector<int> rows, std::vector<int> cols) const;
};

// Row-normalized view of a ContingencyTable. Rows with a zero sum are
// excluded, never divided; their labels are kept in `excluded_rows`.
struct RowProportionTable {
    std::vector<int> row_labels;  // included rows only
    std::vector<int> col_labels;
    std::vector<std::vector<double>> proportions;
    std::vector<long long> row_sums;  // per included row
    std::vector<int> excluded_rows;
};

using RecordKey = std::function<int(const AssessmentRecord&)>;
using RecordPredicate = std::function<bool(const AssessmentRecord&)>;

// Cross-tabulation of one quarter of a cohort. An empty filtered set
// yields a valid empty table.
ContingencyTable crosstab(const Cohort& cohort, int quarter, const RecordKey& row_key,
                          const RecordKey& col_key, const RecordPredicate& filter = nullptr);

RowProportionTable row_normalize(const ContingencyTable& table);

}  // namespace cry
