#include "cryassess/report.hpp"

#include <algorithm>
#include <cstdint>
#include <cstring>
#include <fstream>

#include <fmt/format.h>
#include <json.hpp>

#include "cryassess/format.hpp"

namespace cry {

namespace {

std::string markdown_table(const std::vector<std::string>& header,
                           const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths(header.size());
    for (std::size_t j = 0; j < header.size(); ++j) widths[j] = header[j].size();
    for (const auto& row : rows)
        for (std::size_t j = 0; j < row.size() && j < widths.size(); ++j)
            widths[j] = std::max(widths[j], row[j].size());

    auto emit = [&](const std::vector<std::string>& cells) {
        std::string line = "|";
        for (std::size_t j = 0; j < widths.size(); ++j) {
            const std::string& cell = j < cells.size() ? cells[j] : std::string();
            line += fmt::format(" {:>{}} |", cell, widths[j]);
        }
        return line + "\n";
    };

    std::string out = emit(header);
    out += "|";
    for (std::size_t j = 0; j < widths.size(); ++j)
        out += fmt::format("{:->{}}:|", "", widths[j] + 1);
    out += "\n";
    for (const auto& row : rows) out += emit(row);
    return out;
}

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    auto join = [](const std::vector<std::string>& cells) {
        std::string line;
        for (std::size_t j = 0; j < cells.size(); ++j) {
            if (j) line += ',';
            line += cells[j];
        }
        return line + "\n";
    };
    out += join(header);
    for (const auto& row : rows) out += join(row);
    return out;
}

std::vector<std::string> level_header(const std::string& corner,
                                      const std::vector<int>& levels) {
    std::vector<std::string> h = {corner};
    for (int l : levels) h.push_back(std::to_string(l));
    return h;
}

const char* extension(SectionFormat f) {
    switch (f) {
        case SectionFormat::Markdown: return "md";
        case SectionFormat::Csv: return "csv";
        case SectionFormat::Svg: return "svg";
    }
    return "txt";
}

}  // namespace

std::string to_markdown(const LagScoreTable& table) {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < table.lags.size(); ++i) {
        std::vector<std::string> row = {std::to_string(table.lags[i])};
        for (double s : table.scores[i]) row.push_back(fmtutil::proportion(s));
        rows.push_back(std::move(row));
    }
    return markdown_table(level_header("Class lag \\ Improvement", {0, 1, 2, 3, 4}), rows);
}

std::string to_csv(const LagScoreTable& table) {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < table.lags.size(); ++i) {
        std::vector<std::string> row = {std::to_string(table.lags[i])};
        for (double s : table.scores[i]) row.push_back(fmtutil::proportion(s));
        rows.push_back(std::move(row));
    }
    return csv_table(level_header("class_lag", {0, 1, 2, 3, 4}), rows);
}

std::string to_markdown(const ProgressionRateMatrix& m) {
    auto corner = fmt::format("Q{} \\ Q{}", m.from_quarter, m.to_quarter);
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < m.row_levels.size(); ++i) {
        std::vector<std::string> row = {std::to_string(m.row_levels[i])};
        for (double r : m.rates[i]) row.push_back(fmtutil::percent(r));
        rows.push_back(std::move(row));
    }
    std::vector<std::string> footer = {"Column sum"};
    for (double c : m.column_sums) footer.push_back(fmtutil::percent(c));
    rows.push_back(std::move(footer));
    return markdown_table(level_header(corner, m.col_levels), rows);
}

std::string to_csv(const ProgressionRateMatrix& m) {
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < m.row_levels.size(); ++i) {
        std::vector<std::string> row = {std::to_string(m.row_levels[i])};
        for (double r : m.rates[i]) row.push_back(fmt::format("{:.6f}", r));
        rows.push_back(std::move(row));
    }
    return csv_table(level_header("from_level", m.col_levels), rows);
}

std::string progression_steps_markdown(const ProgressionRateMatrix& m,
                                       const ProgressionScore& score) {
    std::string out;
    auto corner = fmt::format("Q{} \\ Q{}", m.from_quarter, m.to_quarter);

    out += fmt::format("**Step 1: cross tabulation (quarter {} to quarter {})**\n\n",
                       m.from_quarter, m.to_quarter);
    std::vector<std::vector<std::string>> counts;
    for (std::size_t i = 0; i < m.row_levels.size(); ++i) {
        std::vector<std::string> row = {std::to_string(m.row_levels[i])};
        for (long long n : m.counts[i]) row.push_back(std::to_string(n));
        counts.push_back(std::move(row));
    }
    out += markdown_table(level_header(corner, m.col_levels), counts);

    out += "\n**Step 2: row totals**\n\n";
    std::vector<std::vector<std::string>> with_sums = counts;
    for (std::size_t i = 0; i < with_sums.size(); ++i)
        with_sums[i].push_back(std::to_string(m.row_sums[i]));
    auto header = level_header(corner, m.col_levels);
    header.push_back("Row sum");
    out += markdown_table(header, with_sums);

    out += "\n**Step 3: progression rate matrix**\n\n";
    out += to_markdown(m);

    out += fmt::format("\nS = {:.2f}, S* = {}\n", score.s, fmtutil::score(score.s_star));
    if (!m.dropped_rows.empty() || !m.dropped_cols.empty()) {
        out += "\nDropped empty levels:";
        for (int r : m.dropped_rows) out += fmt::format(" row {}", r);
        for (int c : m.dropped_cols) out += fmt::format(" column {}", c);
        out += "\n";
    }
    return out;
}

std::string to_markdown(const std::vector<GradeDistribution>& dists) {
    std::vector<std::string> header = {"Quarter", "Group", "A", "B", "C", "D", "E",
                                       "Population"};
    std::vector<std::vector<std::string>> rows;
    for (const auto& d : dists) {
        std::vector<std::string> row = {std::to_string(d.quarter), d.group};
        for (int level = 4; level >= 0; --level)
            row.push_back(fmtutil::percent(d.proportions[static_cast<std::size_t>(level)]));
        row.push_back(std::to_string(d.population));
        rows.push_back(std::move(row));
    }
    return markdown_table(header, rows);
}

std::string to_csv(const std::vector<GradeDistribution>& dists) {
    std::vector<std::string> header = {"quarter", "group", "grade_a", "grade_b",
                                       "grade_c", "grade_d", "grade_e", "population"};
    std::vector<std::vector<std::string>> rows;
    for (const auto& d : dists) {
        std::vector<std::string> row = {std::to_string(d.quarter), d.group};
        for (int level = 4; level >= 0; --level)
            row.push_back(
                fmt::format("{:.6f}", d.proportions[static_cast<std::size_t>(level)]));
        row.push_back(std::to_string(d.population));
        rows.push_back(std::move(row));
    }
    return csv_table(header, rows);
}

std::string grouped_scores_markdown(
    const std::string& group_axis,
    const std::map<std::string, ProgressionScore>& q1q2,
    const std::map<std::string, ProgressionScore>& q2q3) {
    std::vector<std::string> header = {group_axis, "Quarter1 to Quarter2",
                                       "Quarter2 to Quarter3"};
    std::vector<std::vector<std::string>> rows;
    for (const auto& [group, score] : q1q2) {
        std::vector<std::string> row = {group, fmtutil::score(score.s_star)};
        auto it = q2q3.find(group);
        row.push_back(it == q2q3.end() ? "-" : fmtutil::score(it->second.s_star));
        rows.push_back(std::move(row));
    }
    return markdown_table(header, rows);
}

std::string grade_chart_svg(const std::vector<GradeDistribution>& dists,
                            const std::string& title) {
    const int bar_w = 26, gap = 8, group_gap = 34, chart_h = 260, base_y = 300;
    const int group_w = 5 * bar_w + 4 * gap;
    const int width = 60 + static_cast<int>(dists.size()) * (group_w + group_gap);
    static const char* palette[5] = {"#2c7fb8", "#41b6c4", "#a1dab4", "#fed98e",
                                     "#d95f0e"};

    std::string svg = fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"360\" "
        "font-family=\"sans-serif\" font-size=\"12\">\n",
        width);
    svg += fmt::format("  <text x=\"20\" y=\"24\" font-size=\"16\">{}</text>\n", title);
    svg += fmt::format(
        "  <line x1=\"40\" y1=\"{0}\" x2=\"{1}\" y2=\"{0}\" stroke=\"#333\"/>\n", base_y,
        width - 10);

    int x = 50;
    for (const auto& d : dists) {
        for (int level = 4; level >= 0; --level) {
            double p = d.proportions[static_cast<std::size_t>(level)];
            int h = static_cast<int>(p * chart_h + 0.5);
            int grade_index = 4 - level;  // A..E left to right
            svg += fmt::format(
                "  <rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\"/>\n",
                x + grade_index * (bar_w + gap), base_y - h, bar_w, h,
                palette[grade_index]);
            svg += fmt::format(
                "  <text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n",
                x + grade_index * (bar_w + gap) + bar_w / 2, base_y + 14,
                "ABCDE"[grade_index]);
        }
        svg += fmt::format(
            "  <text x=\"{}\" y=\"{}\" text-anchor=\"middle\">Q{} {}</text>\n",
            x + group_w / 2, base_y + 32, d.quarter, d.group);
        x += group_w + group_gap;
    }
    svg += "</svg>\n";
    return svg;
}

void ReportBundle::add(std::string section, std::string name, SectionFormat format,
                       std::string content) {
    sections.push_back({std::move(section), std::move(name), format, std::move(content)});
}

// ---------------------------------------------------------------------------
// SHA-256 (FIPS 180-4), enough for manifest hashing.

namespace {

struct Sha256 {
    std::uint32_t h[8] = {0x6a09e667, 0xbb67ae85, 0x3c6ef372, 0xa54ff53a,
                          0x510e527f, 0x9b05688c, 0x1f83d9ab, 0x5be0cd19};
    std::uint64_t length = 0;
    std::uint8_t buffer[64];
    std::size_t buffered = 0;

    static std::uint32_t rotr(std::uint32_t x, int n) {
        return (x >> n) | (x << (32 - n));
    }

    void process(const std::uint8_t* p) {
        static const std::uint32_t k[64] = {
            0x428a2f98, 0x71374491, 0xb5c0fbcf, 0xe9b5dba5, 0x3956c25b, 0x59f111f1,
            0x923f82a4, 0xab1c5ed5, 0xd807aa98, 0x12835b01, 0x243185be, 0x550c7dc3,
            0x72be5d74, 0x80deb1fe, 0x9bdc06a7, 0xc19bf174, 0xe49b69c1, 0xefbe4786,
            0x0fc19dc6, 0x240ca1cc, 0x2de92c6f, 0x4a7484aa, 0x5cb0a9dc, 0x76f988da,
            0x983e5152, 0xa831c66d, 0xb00327c8, 0xbf597fc7, 0xc6e00bf3, 0xd5a79147,
            0x06ca6351, 0x14292967, 0x27b70a85, 0x2e1b2138, 0x4d2c6dfc, 0x53380d13,
            0x650a7354, 0x766a0abb, 0x81c2c92e, 0x92722c85, 0xa2bfe8a1, 0xa81a664b,
            0xc24b8b70, 0xc76c51a3, 0xd192e819, 0xd6990624, 0xf40e3585, 0x106aa070,
            0x19a4c116, 0x1e376c08, 0x2748774c, 0x34b0bcb5, 0x391c0cb3, 0x4ed8aa4a,
            0x5b9cca4f, 0x682e6ff3, 0x748f82ee, 0x78a5636f, 0x84c87814, 0x8cc70208,
            0x90befffa, 0xa4506ceb, 0xbef9a3f7, 0xc67178f2};
        std::uint32_t w[64];
        for (int i = 0; i < 16; ++i)
            w[i] = (std::uint32_t(p[4 * i]) << 24) | (std::uint32_t(p[4 * i + 1]) << 16) |
                   (std::uint32_t(p[4 * i + 2]) << 8) | std::uint32_t(p[4 * i + 3]);
        for (int i = 16; i < 64; ++i) {
            std::uint32_t s0 = rotr(w[i - 15], 7) ^ rotr(w[i - 15], 18) ^ (w[i - 15] >> 3);
            std::uint32_t s1 = rotr(w[i - 2], 17) ^ rotr(w[i - 2], 19) ^ (w[i - 2] >> 10);
            w[i] = w[i - 16] + s0 + w[i - 7] + s1;
        }
        std::uint32_t a = h[0], b = h[1], c = h[2], d = h[3], e = h[4], f = h[5],
                      g = h[6], hh = h[7];
        for (int i = 0; i < 64; ++i) {
            std::uint32_t s1 = rotr(e, 6) ^ rotr(e, 11) ^ rotr(e, 25);
            std::uint32_t ch = (e & f) ^ (~e & g);
            std::uint32_t t1 = hh + s1 + ch + k[i] + w[i];
            std::uint32_t s0 = rotr(a, 2) ^ rotr(a, 13) ^ rotr(a, 22);
            std::uint32_t maj = (a & b) ^ (a & c) ^ (b & c);
            std::uint32_t t2 = s0 + maj;
            hh = g; g = f; f = e; e = d + t1;
            d = c; c = b; b = a; a = t1 + t2;
        }
        h[0] += a; h[1] += b; h[2] += c; h[3] += d;
        h[4] += e; h[5] += f; h[6] += g; h[7] += hh;
    }

    void update(const void* data, std::size_t n) {
        const auto* p = static_cast<const std::uint8_t*>(data);
        length += n;
        while (n > 0) {
            std::size_t take = std::min(n, sizeof(buffer) - buffered);
            std::memcpy(buffer + buffered, p, take);
            buffered += take;
            p += take;
            n -= take;
            if (buffered == sizeof(buffer)) {
                process(buffer);
                buffered = 0;
            }
        }
    }

    std::string hex_digest() {
        std::uint64_t bits = length * 8;
        std::uint8_t pad = 0x80;
        update(&pad, 1);
        std::uint8_t zero = 0;
        while (buffered != 56) update(&zero, 1);
        std::uint8_t len[8];
        for (int i = 0; i < 8; ++i) len[i] = std::uint8_t(bits >> (56 - 8 * i));
        update(len, 8);

        std::string out;
        for (std::uint32_t v : h) out += fmt::format("{:08x}", v);
        return out;
    }
};

}  // namespace

std::string sha256_hex(const std::string& bytes) {
    Sha256 hasher;
    hasher.update(bytes.data(), bytes.size());
    return hasher.hex_digest();
}

std::vector<ManifestEntry> render(const ReportBundle& bundle,
                                  const std::filesystem::path& out_dir) {
    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec || !std::filesystem::is_directory(out_dir))
        throw std::runtime_error("cannot create output directory: " + out_dir.string());

    std::vector<ManifestEntry> manifest;
    for (const auto& s : bundle.sections) {
        auto dir = out_dir / s.section;
        std::filesystem::create_directories(dir);
        auto rel = fmt::format("{}/{}.{}", s.section, s.name, extension(s.format));
        std::ofstream out(out_dir / rel, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write report file: " + rel);
        out << s.content;
        manifest.push_back({rel, sha256_hex(s.content)});
    }
    std::sort(manifest.begin(), manifest.end(),
              [](const ManifestEntry& a, const ManifestEntry& b) { return a.path < b.path; });

    nlohmann::ordered_json j;
    for (const auto& entry : manifest) j[entry.path] = entry.sha256;
    std::ofstream out(out_dir / "manifest.json", std::ios::binary);
    if (!out) throw std::runtime_error("cannot write manifest.json");
    out << j.dump(2) << "\n";
    return manifest;
}

}  // namespace cry
