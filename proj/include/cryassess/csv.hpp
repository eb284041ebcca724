#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace cry::csv {

// Splits one CSV line. Double-quoted fields may contain commas and
// doubled quotes; everything else is taken verbatim.
std::vector<std::string> split_line(const std::string& line);

// Quotes a field only when it needs it.
std::string escape_field(const std::string& field);

std::string join_row(const std::vector<std::string>& fields);

struct Document {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

// Reads a whole file; throws std::runtime_error if it cannot be opened
// or has no header row. Skips blank lines, strips a UTF-8 BOM and CR.
Document read_file(const std::filesystem::path& path);

void write_rows(std::ostream& out, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows);

}  // namespace cry::csv
