#include "cryassess/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>

#include <fmt/format.h>

#include "cryassess/csv.hpp"

namespace cry {

const std::vector<std::string> kCsvColumns = {
    "child_id",        "center",           "state",      "sex",
    "age_appropriate_class", "compatible_class", "attendance", "imp_lang1",
    "imp_lang2",       "imp_math",         "imp_writing"};

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::optional<int> parse_int(const std::string& s) {
    int value = 0;
    auto t = trim(s);
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc{} || ptr != t.data() + t.size()) return std::nullopt;
    return value;
}

bool valid_attendance(const std::string& s) {
    // Non-negative integer or decimal fraction, optional trailing '%'.
    auto t = trim(s);
    if (!t.empty() && t.back() == '%') t.pop_back();
    if (t.empty()) return false;
    bool dot = false;
    for (char c : t) {
        if (c == '.') {
            if (dot) return false;
            dot = true;
        } else if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

struct ColumnIndex {
    std::vector<std::size_t> positions;  // per kCsvColumns entry
    std::optional<std::size_t> quarter;
};

ColumnIndex index_columns(const std::vector<std::string>& header, bool allow_quarter) {
    ColumnIndex idx;
    std::vector<std::string> names;
    names.reserve(header.size());
    for (const auto& h : header) names.push_back(lower(trim(h)));

    for (const auto& want : kCsvColumns) {
        auto it = std::find(names.begin(), names.end(), want);
        if (it == names.end())
            throw SchemaError(fmt::format("missing column '{}'", want));
        idx.positions.push_back(static_cast<std::size_t>(it - names.begin()));
    }
    auto qit = std::find(names.begin(), names.end(), "quarter");
    if (qit != names.end()) {
        if (!allow_quarter)
            throw SchemaError("unexpected 'quarter' column in a per-quarter file");
        idx.quarter = static_cast<std::size_t>(qit - names.begin());
    } else if (allow_quarter) {
        throw SchemaError("missing column 'quarter'");
    }

    for (const auto& name : names) {
        if (name != "quarter" &&
            std::find(kCsvColumns.begin(), kCsvColumns.end(), name) == kCsvColumns.end())
            throw SchemaError(fmt::format("unknown column '{}'", name));
    }
    return idx;
}

// Parses one data row; on failure returns the rejection reason.
std::optional<std::string> parse_row(const std::vector<std::string>& fields,
                                     const ColumnIndex& idx, int quarter,
                                     const IngestOptions& opt, AssessmentRecord& out) {
    std::size_t needed = idx.positions.back() + 1;
    if (idx.quarter) needed = std::max(needed, *idx.quarter + 1);
    if (fields.size() < needed) return "too few fields";

    auto field = [&](std::size_t col) -> const std::string& {
        return fields[idx.positions[col]];
    };

    out.child_id = trim(field(0));
    if (out.child_id.empty()) return "empty child_id";
    out.center = trim(field(1));

    auto state_it = opt.state_aliases.find(lower(trim(field(2))));
    if (state_it == opt.state_aliases.end())
        return fmt::format("unknown state '{}'", trim(field(2)));
    out.state = state_it->second;

    auto sex_it = opt.sex_aliases.find(lower(trim(field(3))));
    if (sex_it == opt.sex_aliases.end())
        return fmt::format("unknown sex '{}'", trim(field(3)));
    out.sex = sex_it->second;

    auto age_class = parse_int(field(4));
    auto comp_class = parse_int(field(5));
    if (!age_class || *age_class < opt.min_class || *age_class > opt.max_class)
        return fmt::format("age_appropriate_class out of range {}..{}", opt.min_class,
                           opt.max_class);
    if (!comp_class || *comp_class < opt.min_class || *comp_class > opt.max_class)
        return fmt::format("compatible_class out of range {}..{}", opt.min_class,
                           opt.max_class);
    out.age_appropriate_class = *age_class;
    out.compatible_class = *comp_class;

    out.attendance = trim(field(6));
    if (!valid_attendance(out.attendance)) return "invalid attendance";

    for (int i = 0; i < 4; ++i) {
        auto flag = parse_int(field(static_cast<std::size_t>(7 + i)));
        if (!flag || (*flag != 0 && *flag != 1)) return "non-binary improvement flag";
        out.improvements.bits[static_cast<std::size_t>(i)] = *flag;
    }

    if (idx.quarter) {
        auto q = parse_int(fields[*idx.quarter]);
        if (!q || *q < 1 || *q > 3) return "quarter out of range 1..3";
        out.quarter = *q;
    } else {
        out.quarter = quarter;
    }
    return std::nullopt;
}

LoadResult load_file(const std::filesystem::path& path, int quarter, bool combined,
                     const IngestOptions& options) {
    auto doc = csv::read_file(path);
    auto idx = index_columns(doc.header, combined);

    LoadResult result;
    result.records.reserve(doc.rows.size());
    for (std::size_t i = 0; i < doc.rows.size(); ++i) {
        AssessmentRecord record;
        if (auto reason = parse_row(doc.rows[i], idx, quarter, options, record)) {
            result.rejections.push_back({i + 1, *reason});
        } else {
            result.records.push_back(std::move(record));
        }
    }
    return result;
}

}  // namespace

std::map<std::string, State> IngestOptions::default_state_aliases() {
    return {
        {"jammu & kashmir", State::JammuKashmir},
        {"jammu and kashmir", State::JammuKashmir},
        {"jammukashmir", State::JammuKashmir},
        {"j&k", State::JammuKashmir},
        {"jharkhand", State::Jharkhand},
        {"manipur", State::Manipur},
        {"west bengal", State::WestBengal},
        {"westbengal", State::WestBengal},
        {"wb", State::WestBengal},
    };
}

std::map<std::string, Sex> IngestOptions::default_sex_aliases() {
    return {
        {"male", Sex::Male},     {"m", Sex::Male},
        {"female", Sex::Female}, {"f", Sex::Female},
    };
}

LoadResult load_quarter(const std::filesystem::path& path, int quarter,
                        const IngestOptions& options) {
    if (quarter < 1 || quarter > 3)
        throw std::invalid_argument("quarter must be in 1..3");
    return load_file(path, quarter, /*combined=*/false, options);
}

LoadResult load_combined(const std::filesystem::path& path, const IngestOptions& options) {
    return load_file(path, 0, /*combined=*/true, options);
}

std::vector<std::string> to_csv_row(const AssessmentRecord& r, bool with_quarter) {
    std::vector<std::string> row = {
        r.child_id,
        r.center,
        to_string(r.state),
        to_string(r.sex),
        std::to_string(r.age_appropriate_class),
        std::to_string(r.compatible_class),
        r.attendance,
        std::to_string(r.improvements.bits[0]),
        std::to_string(r.improvements.bits[1]),
        std::to_string(r.improvements.bits[2]),
        std::to_string(r.improvements.bits[3]),
    };
    if (with_quarter) row.push_back(std::to_string(r.quarter));
    return row;
}

}  // namespace cry
