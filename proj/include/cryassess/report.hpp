#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "cryassess/grading.hpp"
#include "cryassess/lagscore.hpp"
#include "cryassess/progression.hpp"

namespace cry {

// Text rendering of computed artifacts. Rendering never recomputes;
// every cell comes from the value it is handed.
std::string to_markdown(const LagScoreTable& table);
std::string to_csv(const LagScoreTable& table);
std::string to_markdown(const ProgressionRateMatrix& m);
std::string to_csv(const ProgressionRateMatrix& m);
// The three step artifacts (cross-tab, row sums, rate matrix with a
// column-sum footer) followed by the score line.
std::string progression_steps_markdown(const ProgressionRateMatrix& m,
                                       const ProgressionScore& score);
std::string to_markdown(const std::vector<GradeDistribution>& dists);
std::string to_csv(const std::vector<GradeDistribution>& dists);
std::string grouped_scores_markdown(
    const std::string& group_axis,
    const std::map<std::string, ProgressionScore>& q1q2,
    const std::map<std::string, ProgressionScore>& q2q3);

// Static grouped-bar chart of grade proportions, one group of bars per
// distribution row.
std::string grade_chart_svg(const std::vector<GradeDistribution>& dists,
                            const std::string& title);

enum class SectionFormat { Markdown, Csv, Svg };

struct ReportSection {
    std::string section;  // directory under the output root
    std::string name;     // file stem
    SectionFormat format = SectionFormat::Markdown;
    std::string content;
};

struct ReportBundle {
    std::vector<ReportSection> sections;

    void add(std::string section, std::string name, SectionFormat format,
             std::string content);
};

struct ManifestEntry {
    std::string path;    // relative to the output directory
    std::string sha256;  // lowercase hex
};

// Writes report/<section>/<name>.{md,csv,svg} plus manifest.json.
// Deterministic: the same bundle always produces identical bytes.
std::vector<ManifestEntry> render(const ReportBundle& bundle,
                                  const std::filesystem::path& out_dir);

// SHA-256 of a byte string, lowercase hex.
std::string sha256_hex(const std::string& bytes);

}  // namespace cry
