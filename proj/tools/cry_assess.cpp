// cry-assess: learning-assessment analytics over per-child quarterly
// CSV records. Subcommands: validate, lag-scores, progression, grades,
// report, synth. Exit codes: 0 success, 1 data error, 2 usage error.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "cryassess/cohort.hpp"
#include "cryassess/cohortgen.hpp"
#include "cryassess/csv.hpp"
#include "cryassess/format.hpp"
#include "cryassess/grading.hpp"
#include "cryassess/ingest.hpp"
#include "cryassess/lagscore.hpp"
#include "cryassess/progression.hpp"
#include "cryassess/report.hpp"

namespace fs = std::filesystem;
using namespace cry;

namespace {

struct DataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputArgs {
    std::string combined;
    std::string q1, q2, q3;
    int min_class = 0;
    int max_class = 12;
};

void add_input_flags(CLI::App* cmd, InputArgs& args) {
    cmd->add_option("--input", args.combined, "combined CSV with a quarter column");
    cmd->add_option("--q1", args.q1, "quarter 1 CSV");
    cmd->add_option("--q2", args.q2, "quarter 2 CSV");
    cmd->add_option("--q3", args.q3, "quarter 3 CSV");
    cmd->add_option("--min-class", args.min_class, "lowest accepted grade level");
    cmd->add_option("--max-class", args.max_class, "highest accepted grade level");
}

fs::path resolve(const std::string& path) {
    fs::path p(path);
    if (p.is_relative()) {
        if (const char* root = std::getenv("CRY_DATA_DIR")) return fs::path(root) / p;
    }
    return p;
}

struct Loaded {
    Cohort cohort;
    std::vector<RowRejection> rejections;
    std::vector<DuplicateNote> duplicates;
};

Loaded load_inputs(const InputArgs& args) {
    IngestOptions options;
    options.min_class = args.min_class;
    options.max_class = args.max_class;

    std::vector<AssessmentRecord> records;
    std::vector<RowRejection> rejections;
    auto absorb = [&](LoadResult&& result) {
        for (auto& r : result.records) records.push_back(std::move(r));
        for (auto& r : result.rejections) rejections.push_back(std::move(r));
    };

    if (!args.combined.empty()) {
        absorb(load_combined(resolve(args.combined), options));
    } else {
        const std::pair<const std::string*, int> per_quarter[] = {
            {&args.q1, 1}, {&args.q2, 2}, {&args.q3, 3}};
        bool any = false;
        for (const auto& [path, q] : per_quarter) {
            if (path->empty()) continue;
            any = true;
            absorb(load_quarter(resolve(*path), q, options));
        }
        if (!any)
            throw CLI::ValidationError("inputs", "no input files given (--input or --qN)");
    }

    auto built = build_cohort(std::move(records));
    return {std::move(built.cohort), std::move(rejections), std::move(built.duplicates)};
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw DataError("cannot write output file: " + out_path);
    out << text;
}

GroupBy parse_group_by(const std::string& by) {
    if (by.empty()) return GroupBy::None;
    if (by == "sex") return GroupBy::BySex;
    if (by == "state") return GroupBy::ByState;
    throw CLI::ValidationError("--by", "expected 'sex' or 'state'");
}

int run_validate(const InputArgs& input) {
    auto loaded = load_inputs(input);

    for (const auto& r : loaded.rejections)
        std::cerr << fmt::format("row {}: {}\n", r.row, r.reason);
    for (const auto& d : loaded.duplicates)
        std::cerr << fmt::format("duplicate record: child {} quarter {}\n", d.child_id,
                                 d.quarter);

    std::string out;
    out += fmt::format("records accepted: {}\n", loaded.cohort.size());
    out += fmt::format("rows rejected:    {}\n", loaded.rejections.size());
    out += fmt::format("duplicates:       {}\n", loaded.duplicates.size());
    out += "\nstate counts:\n";
    for (const auto& [state, n] : loaded.cohort.state_counts())
        out += fmt::format("  {:<16} {}\n", to_string(state), n);
    out += "sex counts:\n";
    for (const auto& [sex, n] : loaded.cohort.sex_counts())
        out += fmt::format("  {:<16} {}\n", to_string(sex), n);

    auto quarters = loaded.cohort.quarters();
    out += "\nquarter coverage:\n";
    for (int q : quarters)
        out += fmt::format("  quarter {}: {} records\n", q, loaded.cohort.quarter(q).size());
    for (std::size_t i = 0; i + 1 < quarters.size(); ++i) {
        auto missing = loaded.cohort.missing_in(quarters[i], quarters[i + 1]);
        out += fmt::format("  present in quarter {} but missing in quarter {}: {}\n",
                           quarters[i], quarters[i + 1], missing.size());
    }
    std::cout << out;
    return loaded.rejections.empty() && loaded.duplicates.empty() ? 0 : 1;
}

int run_lag_scores(const InputArgs& input, int quarter, bool include_positive,
                   const std::string& out_path) {
    auto loaded = load_inputs(input);
    LagScoreOptions options;
    options.include_positive_lags = include_positive;
    auto table = lag_score_table(loaded.cohort, quarter, options);

    std::string text = to_markdown(table);
    if (table.excluded_positive_lag > 0)
        text += fmt::format("\nexcluded {} records with positive class lag\n",
                            table.excluded_positive_lag);
    emit(text, out_path);
    return 0;
}

int run_progression(const InputArgs& input, int from_q, int to_q, const std::string& by,
                    bool weighted, const std::string& out_path) {
    auto loaded = load_inputs(input);
    ProgressionOptions options;
    options.weighted = weighted;
    auto group_by = parse_group_by(by);

    std::string text;
    if (group_by == GroupBy::None) {
        auto matrix = progression_matrix(loaded.cohort, from_q, to_q);
        auto score = progression_score(matrix, options);
        text = progression_steps_markdown(matrix, score);
    } else {
        auto scores = grouped_progression(loaded.cohort, from_q, to_q, group_by, options);
        for (const auto& [group, score] : scores)
            text += fmt::format("{}: S = {:.2f}, S* = {}\n", group, score.s,
                                fmtutil::score(score.s_star));
    }
    emit(text, out_path);
    return 0;
}

int run_grades(const InputArgs& input, int quarter, const std::string& by,
               const std::string& out_path) {
    auto loaded = load_inputs(input);
    auto dists = grade_distribution(loaded.cohort, quarter, parse_group_by(by));
    emit(to_markdown(dists), out_path);
    return 0;
}

int run_report(const InputArgs& input, const std::string& out_dir) {
    auto loaded = load_inputs(input);
    const Cohort& cohort = loaded.cohort;
    auto quarters = cohort.quarters();

    ReportBundle bundle;
    for (int q : quarters) {
        auto table = lag_score_table(cohort, q);
        bundle.add("lag_scores", fmt::format("q{}", q), SectionFormat::Markdown,
                   to_markdown(table));
        bundle.add("lag_scores", fmt::format("q{}", q), SectionFormat::Csv, to_csv(table));
    }
    for (std::size_t i = 0; i + 1 < quarters.size(); ++i) {
        int from_q = quarters[i], to_q = quarters[i + 1];
        auto matrix = progression_matrix(cohort, from_q, to_q);
        auto score = progression_score(matrix);
        bundle.add("progression", fmt::format("q{}_to_q{}", from_q, to_q),
                   SectionFormat::Markdown, progression_steps_markdown(matrix, score));
        bundle.add("progression", fmt::format("q{}_to_q{}", from_q, to_q),
                   SectionFormat::Csv, to_csv(matrix));
    }
    for (int q : quarters) {
        auto overall = grade_distribution(cohort, q, GroupBy::None);
        bundle.add("grades", fmt::format("q{}_overall", q), SectionFormat::Markdown,
                   to_markdown(overall));
        bundle.add("grades", fmt::format("q{}_overall", q), SectionFormat::Csv,
                   to_csv(overall));
        bundle.add("grades", fmt::format("q{}_overall", q), SectionFormat::Svg,
                   grade_chart_svg(overall, fmt::format("Grades, quarter {}", q)));
        auto by_sex = grade_distribution(cohort, q, GroupBy::BySex);
        bundle.add("grades", fmt::format("q{}_by_sex", q), SectionFormat::Markdown,
                   to_markdown(by_sex));
        bundle.add("grades", fmt::format("q{}_by_sex", q), SectionFormat::Svg,
                   grade_chart_svg(by_sex, fmt::format("Grades by sex, quarter {}", q)));
        auto by_state = grade_distribution(cohort, q, GroupBy::ByState);
        bundle.add("grades", fmt::format("q{}_by_state", q), SectionFormat::Markdown,
                   to_markdown(by_state));
        bundle.add("grades", fmt::format("q{}_by_state", q), SectionFormat::Svg,
                   grade_chart_svg(by_state, fmt::format("Grades by state, quarter {}", q)));
    }
    if (quarters.size() >= 2) {
        for (auto [axis, group_by] :
             {std::pair{std::string("Gender"), GroupBy::BySex},
              std::pair{std::string("States"), GroupBy::ByState}}) {
            std::map<std::string, ProgressionScore> q1q2, q2q3;
            q1q2 = grouped_progression(cohort, quarters[0], quarters[1], group_by);
            if (quarters.size() >= 3)
                q2q3 = grouped_progression(cohort, quarters[1], quarters[2], group_by);
            bundle.add("grouped_scores", axis == "Gender" ? "by_sex" : "by_state",
                       SectionFormat::Markdown,
                       grouped_scores_markdown(axis, q1q2, q2q3));
        }
    }
    std::string demography = "| Group | Records |\n|---|---:|\n";
    for (const auto& [state, n] : cohort.state_counts())
        demography += fmt::format("| {} | {} |\n", to_string(state), n);
    for (const auto& [sex, n] : cohort.sex_counts())
        demography += fmt::format("| {} | {} |\n", to_string(sex), n);
    bundle.add("demography", "summary", SectionFormat::Markdown, demography);

    auto manifest = render(bundle, out_dir);
    std::cout << fmt::format("wrote {} files under {}\n", manifest.size() + 1, out_dir);
    return 0;
}

int run_synth(std::optional<std::uint64_t> seed, const std::string& spec_path,
              const std::string& out_path) {
    GenSpec spec;
    if (!spec_path.empty()) spec = load_gen_spec(resolve(spec_path));
    if (seed) spec.seed = *seed;  // flag wins over the spec file
    auto cohort = generate(spec);
    if (out_path.empty()) {
        auto header = kCsvColumns;
        header.push_back("quarter");
        std::vector<std::vector<std::string>> rows;
        for (const auto& r : cohort.records()) rows.push_back(to_csv_row(r, true));
        csv::write_rows(std::cout, header, rows);
    } else {
        write_cohort_csv(cohort, out_path);
        std::cerr << fmt::format("wrote {} records to {}\n", cohort.size(), out_path);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"post-COVID learning-assessment analytics"};
    app.require_subcommand(1);

    InputArgs input;
    int quarter = 1, from_q = 1, to_q = 2;
    bool include_positive = false, weighted = false, report_all = false;
    std::string by, out_path, out_dir = "report", spec_path;
    std::optional<std::uint64_t> seed;

    auto* validate = app.add_subcommand("validate", "parse and validate input files");
    add_input_flags(validate, input);

    auto* lag_scores = app.add_subcommand("lag-scores",
                                          "class-lag-conditioned improvement scores");
    add_input_flags(lag_scores, input);
    lag_scores->add_option("--quarter", quarter, "quarter to score")->required();
    lag_scores->add_flag("--include-positive-lags", include_positive,
                         "keep rows for students above their age class");
    lag_scores->add_option("--out", out_path, "write to a file instead of stdout");

    auto* progression = app.add_subcommand("progression",
                                           "inter-quarter progression rate matrix and score");
    add_input_flags(progression, input);
    progression->add_option("--from", from_q, "starting quarter")->required();
    progression->add_option("--to", to_q, "ending quarter")->required();
    progression->add_option("--by", by, "group by 'sex' or 'state'");
    progression->add_flag("--weighted", weighted,
                          "weight rows by population (non-standard variant)");
    progression->add_option("--out", out_path, "write to a file instead of stdout");

    auto* grades = app.add_subcommand("grades", "grade distributions per quarter");
    add_input_flags(grades, input);
    grades->add_option("--quarter", quarter, "quarter to grade")->required();
    grades->add_option("--by", by, "group by 'sex' or 'state'");
    grades->add_option("--out", out_path, "write to a file instead of stdout");

    auto* report = app.add_subcommand("report", "render the full report bundle");
    add_input_flags(report, input);
    report->add_flag("--all", report_all, "render every section");
    report->add_option("--out", out_dir, "output directory (default: report)");

    auto* synth = app.add_subcommand("synth", "generate a synthetic cohort CSV");
    synth->add_option("--seed", seed, "random seed (overrides the spec file)");
    synth->add_option("--spec", spec_path, "generator spec JSON");
    synth->add_option("--out", out_path, "output CSV path (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (validate->parsed()) return run_validate(input);
        if (lag_scores->parsed())
            return run_lag_scores(input, quarter, include_positive, out_path);
        if (progression->parsed())
            return run_progression(input, from_q, to_q, by, weighted, out_path);
        if (grades->parsed()) return run_grades(input, quarter, by, out_path);
        if (report->parsed()) return run_report(input, out_dir);
        if (synth->parsed()) return run_synth(seed, spec_path, out_path);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
