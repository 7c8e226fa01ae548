#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "trisect/elm.hpp"

namespace trisect {

inline constexpr std::uint64_t kDefaultSeed = 20240611;

enum class Grid { Default, Large };

struct VerifyOptions {
    Grid grid = Grid::Default;
    std::uint64_t seed = kDefaultSeed;
    int oracle_cases = 1000;
    int inverse_cases = 1000;
    int resolution_cases = 300;
    std::size_t exhaustive_budget = 50000;
};

struct SuiteResult {
    std::string name;
    bool passed = false;
    long cases = 0;
    std::vector<std::string> failures;  ///< first few only
    long failure_count = 0;
    double seconds = 0.0;
    nlohmann::json details = nlohmann::json::object();
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_suite(const std::string& name, const VerifyOptions& opt);

struct RandomElmCase {
    ElmState state;
    ElmStep step;
};

/// A valid (state, step) pair. `branch` picks on_min (bit 0) and the
/// trisection multiplicity (branch / 2 % 4).
RandomElmCase random_elm_case(std::mt19937_64& rng, int branch);

/// A state whose trisection carries singularities of total delta in
/// [1, max_delta] and no other constraints on e.
ElmState random_singular_state(std::mt19937_64& rng, int max_delta);

/// Product surface of genus g_y with `nodes` double points on S0.
ElmState minimal_degree_shape(int g_y, int nodes, int trisection_fib_deg);

}  // namespace trisect
