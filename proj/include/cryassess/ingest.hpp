#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "cryassess/record.hpp"

namespace cry {

// Fatal ingest failure: missing file, missing or unknown column.
class SchemaError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

struct RowRejection {
    std::size_t row;  // 1-based data row number (header is row 0)
    std::string reason;
};

struct LoadResult {
    std::vector<AssessmentRecord> records;
    std::vector<RowRejection> rejections;
};

struct IngestOptions {
    int min_class = 0;
    int max_class = 12;

    // Case-insensitive alias -> canonical value. Defaults cover the
    // spellings seen in the field data ("J&K", "Jammu & Kashmir", ...).
    std::map<std::string, State> state_aliases = default_state_aliases();
    std::map<std::string, Sex> sex_aliases = default_sex_aliases();

    static std::map<std::string, State> default_state_aliases();
    static std::map<std::string, Sex> default_sex_aliases();
};

// Expected header for per-quarter files; combined files append "quarter".
extern const std::vector<std::string> kCsvColumns;

// Loads one quarter's file. Schema problems throw SchemaError; bad rows
// are rejected individually and reported, never silently dropped.
LoadResult load_quarter(const std::filesystem::path& path, int quarter,
                        const IngestOptions& options = {});

// Loads a combined file carrying its own `quarter` column.
LoadResult load_combined(const std::filesystem::path& path,
                         const IngestOptions& options = {});

// Inverse of parsing: emits a record as a CSV row in the declared column
// order (plus `quarter` when `with_quarter` is set).
std::vector<std::string> to_csv_row(const AssessmentRecord& record, bool with_quarter);

}  // namespace cry
