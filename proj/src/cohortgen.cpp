#include "cryassess/cohortgen.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <random>
#include <stdexcept>

#include <fmt/format.h>
#include <json.hpp>

#include "cryassess/csv.hpp"
#include "cryassess/ingest.hpp"

namespace cry {

namespace {

// Uniform double in [0,1) from the top 53 bits; keeps the byte stream
// identical across standard libraries, unlike std::uniform_real_distribution.
double next_uniform(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <typename Key>
Key sample_categorical(std::mt19937_64& rng, const std::vector<std::pair<Key, double>>& dist) {
    double u = next_uniform(rng);
    double acc = 0.0;
    for (const auto& [key, w] : dist) {
        acc += w;
        if (u < acc) return key;
    }
    return dist.back().first;
}

void check_sums_to_one(const char* what, double sum) {
    if (std::abs(sum - 1.0) > 1e-9)
        throw std::invalid_argument(fmt::format("{} weights sum to {}, expected 1", what, sum));
}

// All 4-bit flag combinations grouped by popcount, in ascending bit order.
std::array<std::vector<ImprovementFlags>, 5> flag_combos_by_level() {
    std::array<std::vector<ImprovementFlags>, 5> combos;
    for (int bits = 0; bits < 16; ++bits) {
        ImprovementFlags f;
        for (int i = 0; i < 4; ++i) f.bits[static_cast<std::size_t>(i)] = (bits >> i) & 1;
        combos[static_cast<std::size_t>(f.level())].push_back(f);
    }
    return combos;
}

int classes_for_lag(int lag, int& age_class) {
    int compatible = lag >= -1 ? 3 : 1;
    age_class = compatible - lag;
    return compatible;
}

}  // namespace

std::array<std::array<double, 5>, 5> GenSpec::identity_kernel() {
    std::array<std::array<double, 5>, 5> k{};
    for (std::size_t i = 0; i < 5; ++i) k[i][i] = 1.0;
    return k;
}

std::array<std::array<double, 5>, 5> GenSpec::upper_triangular_kernel() {
    // Strictly upward moves; level 4 has nowhere higher to go and stays.
    std::array<std::array<double, 5>, 5> k{};
    for (std::size_t i = 0; i < 4; ++i) {
        double share = 1.0 / static_cast<double>(4 - i);
        for (std::size_t j = i + 1; j < 5; ++j) k[i][j] = share;
    }
    k[4][4] = 1.0;
    return k;
}

void GenSpec::validate() const {
    if (population <= 0) throw std::invalid_argument("population must be positive");
    if (quarters < 1 || quarters > 3)
        throw std::invalid_argument("quarters must be in 1..3");

    double lag_sum = 0.0;
    for (const auto& [lag, w] : lag_weights) {
        if (lag < -7 || lag > 1)
            throw std::invalid_argument(fmt::format("lag {} outside -7..+1", lag));
        lag_sum += w;
    }
    check_sums_to_one("lag", lag_sum);

    double level_sum = 0.0;
    for (double w : initial_levels) level_sum += w;
    check_sums_to_one("initial level", level_sum);

    for (std::size_t i = 0; i < 5; ++i) {
        double row_sum = 0.0;
        for (double w : kernel[i]) row_sum += w;
        check_sums_to_one("kernel row", row_sum);
    }

    double sex_sum = 0.0, state_sum = 0.0;
    for (const auto& [_, w] : sex_weights) sex_sum += w;
    for (const auto& [_, w] : state_weights) state_sum += w;
    check_sums_to_one("sex", sex_sum);
    check_sums_to_one("state", state_sum);
}

Cohort generate(const GenSpec& spec) {
    spec.validate();
    std::mt19937_64 rng(spec.seed);
    auto combos = flag_combos_by_level();

    std::vector<std::pair<int, double>> lag_dist(spec.lag_weights.begin(),
                                                 spec.lag_weights.end());
    std::vector<std::pair<Sex, double>> sex_dist(spec.sex_weights.begin(),
                                                 spec.sex_weights.end());
    std::vector<std::pair<State, double>> state_dist(spec.state_weights.begin(),
                                                     spec.state_weights.end());
    std::vector<std::pair<int, double>> level_dist;
    for (int k = 0; k < 5; ++k)
        level_dist.emplace_back(k, spec.initial_levels[static_cast<std::size_t>(k)]);

    std::vector<AssessmentRecord> records;
    records.reserve(static_cast<std::size_t>(spec.population) *
                    static_cast<std::size_t>(spec.quarters));
    for (int n = 0; n < spec.population; ++n) {
        AssessmentRecord base;
        base.child_id = fmt::format("C{:05}", n + 1);
        base.sex = sample_categorical(rng, sex_dist);
        base.state = sample_categorical(rng, state_dist);
        base.center = fmt::format("{}-centre", to_string(base.state));
        int lag = sample_categorical(rng, lag_dist);
        base.compatible_class = classes_for_lag(lag, base.age_appropriate_class);

        int level = sample_categorical(rng, level_dist);
        for (int q = 1; q <= spec.quarters; ++q) {
            if (q > 1) {
                std::vector<std::pair<int, double>> row;
                for (int k = 0; k < 5; ++k)
                    row.emplace_back(k, spec.kernel[static_cast<std::size_t>(level)]
                                              [static_cast<std::size_t>(k)]);
                level = sample_categorical(rng, row);
            }
            AssessmentRecord r = base;
            r.quarter = q;
            r.attendance = std::to_string(
                1 + static_cast<int>(next_uniform(rng) * 90.0));
            const auto& options = combos[static_cast<std::size_t>(level)];
            auto pick = static_cast<std::size_t>(next_uniform(rng) *
                                                 static_cast<double>(options.size()));
            r.improvements = options[std::min(pick, options.size() - 1)];
            records.push_back(std::move(r));
        }
    }

    auto built = build_cohort(std::move(records));
    return std::move(built.cohort);
}

GenSpec load_gen_spec(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open spec file: " + path.string());
    nlohmann::json j;
    in >> j;

    GenSpec spec;
    spec.seed = j.value("seed", spec.seed);
    spec.population = j.value("population", spec.population);
    spec.quarters = j.value("quarters", spec.quarters);

    if (j.contains("lag_weights")) {
        spec.lag_weights.clear();
        for (const auto& [key, value] : j.at("lag_weights").items())
            spec.lag_weights[std::stoi(key)] = value.get<double>();
    }
    if (j.contains("initial_levels"))
        spec.initial_levels = j.at("initial_levels").get<std::array<double, 5>>();
    if (j.contains("kernel")) {
        const auto& k = j.at("kernel");
        if (k.is_string()) {
            auto name = k.get<std::string>();
            if (name == "identity")
                spec.kernel = GenSpec::identity_kernel();
            else if (name == "upper_triangular")
                spec.kernel = GenSpec::upper_triangular_kernel();
            else
                throw std::invalid_argument("unknown kernel name: " + name);
        } else {
            spec.kernel = k.get<std::array<std::array<double, 5>, 5>>();
        }
    }
    if (j.contains("sex_weights")) {
        IngestOptions aliases;
        spec.sex_weights.clear();
        for (const auto& [key, value] : j.at("sex_weights").items()) {
            auto it = aliases.sex_aliases.find(key);
            if (it == aliases.sex_aliases.end())
                throw std::invalid_argument("unknown sex: " + key);
            spec.sex_weights[it->second] = value.get<double>();
        }
    }
    if (j.contains("state_weights")) {
        IngestOptions aliases;
        spec.state_weights.clear();
        for (const auto& [key, value] : j.at("state_weights").items()) {
            std::string lowered;
            for (char c : key) lowered += static_cast<char>(std::tolower(c));
            auto it = aliases.state_aliases.find(lowered);
            if (it == aliases.state_aliases.end())
                throw std::invalid_argument("unknown state: " + key);
            spec.state_weights[it->second] = value.get<double>();
        }
    }
    spec.validate();
    return spec;
}

void write_cohort_csv(const Cohort& cohort, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write: " + path.string());
    auto header = kCsvColumns;
    header.push_back("quarter");
    std::vector<std::vector<std::string>> rows;
    rows.reserve(cohort.size());
    for (const auto& r : cohort.records()) rows.push_back(to_csv_row(r, true));
    csv::write_rows(out, header, rows);
}

void write_cohort_csv_per_quarter(const Cohort& cohort, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    for (int q : cohort.quarters()) {
        std::ofstream out(dir / fmt::format("q{}.csv", q));
        if (!out) throw std::runtime_error("cannot write under: " + dir.string());
        std::vector<std::vector<std::string>> rows;
        for (const auto* r : cohort.quarter(q)) rows.push_back(to_csv_row(*r, false));
        csv::write_rows(out, kCsvColumns, rows);
    }
}

}  // namespace cry
