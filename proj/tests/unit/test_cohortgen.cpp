#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cryassess/cohortgen.hpp"
#include "cryassess/csv.hpp"
#include "cryassess/ingest.hpp"

using namespace cry;
namespace fs = std::filesystem;

TEST_CASE("same seed gives byte-identical cohorts") {
    GenSpec spec;
    spec.seed = 42;
    spec.population = 120;
    spec.kernel = GenSpec::upper_triangular_kernel();

    auto a = generate(spec);
    auto b = generate(spec);
    CHECK(a.records() == b.records());

    auto path_a = fs::temp_directory_path() / "cryassess_gen_a.csv";
    auto path_b = fs::temp_directory_path() / "cryassess_gen_b.csv";
    write_cohort_csv(a, path_a);
    write_cohort_csv(b, path_b);
    std::ifstream fa(path_a), fb(path_b);
    std::stringstream sa, sb;
    sa << fa.rdbuf();
    sb << fb.rdbuf();
    CHECK(sa.str() == sb.str());
    fs::remove(path_a);
    fs::remove(path_b);

    spec.seed = 43;
    CHECK(generate(spec).records() != a.records());
}

TEST_CASE("identity kernel keeps every child at its starting level") {
    GenSpec spec;
    spec.seed = 1;
    spec.population = 10;
    spec.kernel = GenSpec::identity_kernel();
    auto cohort = generate(spec);
    for (const auto* r : cohort.quarter(1)) {
        for (int q = 2; q <= 3; ++q) {
            const auto* later = cohort.find(r->child_id, q);
            REQUIRE(later != nullptr);
            CHECK(improvement_level(*later) == improvement_level(*r));
        }
    }
}

TEST_CASE("flag combinations match the sampled level") {
    GenSpec spec;
    spec.seed = 9;
    spec.population = 300;
    spec.kernel = GenSpec::upper_triangular_kernel();
    auto cohort = generate(spec);
    for (const auto& r : cohort.records()) {
        int level = improvement_level(r);
        CHECK(level >= 0);
        CHECK(level <= 4);
        for (int bit : r.improvements.bits) CHECK((bit == 0 || bit == 1));
    }
}

TEST_CASE("invalid specs are rejected") {
    GenSpec spec;
    spec.population = 0;
    CHECK_THROWS_AS(generate(spec), std::invalid_argument);

    spec.population = 10;
    spec.initial_levels = {0.5, 0.5, 0.5, 0, 0};
    CHECK_THROWS_AS(generate(spec), std::invalid_argument);

    spec.initial_levels = {1, 0, 0, 0, 0};
    spec.lag_weights = {{-9, 1.0}};
    CHECK_THROWS_AS(generate(spec), std::invalid_argument);
}

TEST_CASE("generated CSV reloads through the ingest schema") {
    GenSpec spec;
    spec.seed = 3;
    spec.population = 40;
    auto cohort = generate(spec);

    auto dir = fs::temp_directory_path() / "cryassess_gen_per_quarter";
    write_cohort_csv_per_quarter(cohort, dir);
    for (int q = 1; q <= 3; ++q) {
        auto result = load_quarter(dir / ("q" + std::to_string(q) + ".csv"), q);
        CHECK(result.rejections.empty());
        CHECK(result.records.size() == 40);
    }
    fs::remove_all(dir);
}

TEST_CASE("gen spec loads from JSON") {
    auto path = fs::temp_directory_path() / "cryassess_spec.json";
    {
        std::ofstream out(path);
        out << R"({
            "seed": 77,
            "population": 25,
            "quarters": 2,
            "kernel": "upper_triangular",
            "lag_weights": {"-2": 0.5, "0": 0.5},
            "sex_weights": {"female": 0.6, "male": 0.4},
            "state_weights": {"West Bengal": 1.0}
        })";
    }
    auto spec = load_gen_spec(path);
    CHECK(spec.seed == 77);
    CHECK(spec.population == 25);
    CHECK(spec.quarters == 2);
    CHECK(spec.lag_weights.at(-2) == 0.5);
    CHECK(spec.state_weights.at(State::WestBengal) == 1.0);

    auto cohort = generate(spec);
    CHECK(cohort.quarter(1).size() == 25);
    CHECK(cohort.quarter(2).size() == 25);
    CHECK(cohort.state_counts().at(State::WestBengal) ==
          static_cast<long long>(cohort.size()));
    fs::remove(path);
}
