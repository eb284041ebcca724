#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <vector>

#include "cryassess/cohort.hpp"

namespace cry {

// Deterministic synthetic-cohort generator. The random source is
// mt19937_64 seeded directly, with categorical draws made from raw
// 53-bit uniforms, so identical specs produce byte-identical cohorts
// on any conforming platform.
struct GenSpec {
    std::uint64_t seed = 1;
    int population = 100;
    int quarters = 3;

    // Class-lag distribution; keys in -7..+1.
    std::map<int, double> lag_weights = {{-3, 0.2}, {-2, 0.3}, {-1, 0.3}, {0, 0.2}};

    // Improvement-level distribution in the first quarter.
    std::array<double, 5> initial_levels{0.25, 0.05, 0.2, 0.25, 0.25};

    // Level transition kernel applied between consecutive quarters;
    // kernel[i][j] = P(next level j | current level i). Rows sum to 1.
    std::array<std::array<double, 5>, 5> kernel = identity_kernel();

    std::map<Sex, double> sex_weights = {{Sex::Female, 0.5}, {Sex::Male, 0.5}};
    std::map<State, double> state_weights = {{State::JammuKashmir, 0.25},
                                             {State::Jharkhand, 0.25},
                                             {State::Manipur, 0.25},
                                             {State::WestBengal, 0.25}};

    static std::array<std::array<double, 5>, 5> identity_kernel();
    static std::array<std::array<double, 5>, 5> upper_triangular_kernel();

    // Throws std::invalid_argument on zero population or weight vectors
    // that do not sum to 1 within 1e-9.
    void validate() const;
};

// Parses a GenSpec from a JSON file; missing fields keep their defaults.
GenSpec load_gen_spec(const std::filesystem::path& path);

Cohort generate(const GenSpec& spec);

// Writes a cohort in the exact ingest schema: one combined file with a
// quarter column, or one file per quarter under a directory.
void write_cohort_csv(const Cohort& cohort, const std::filesystem::path& path);
void write_cohort_csv_per_quarter(const Cohort& cohort, const std::filesystem::path& dir);

}  // namespace cry
