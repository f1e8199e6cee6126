#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "quiverlab/quiver.hpp"

namespace quiverlab {

struct SuiteResult {
    std::string name;
    int cases = 0;
    int failures = 0;
    std::vector<std::string> details; // first few failure descriptions

    bool ok() const { return failures == 0; }
};

/// Random quiver with up to max_vertices vertices and arrow multiplicities
/// up to 3 between any ordered pair (loops included).
Quiver random_quiver(std::mt19937_64& rng, Int max_vertices = 4);
IntVec random_vec(std::mt19937_64& rng, std::size_t n, Int lo, Int hi);

SuiteResult suite_exact_linalg(std::uint64_t seed, int cases);
SuiteResult suite_quiver_calculus(std::uint64_t seed, int cases);
SuiteResult suite_dim_identities(std::uint64_t seed, int cases);
SuiteResult suite_root_closed_forms();
SuiteResult suite_gallery_and_verification(std::uint64_t seed, int quotient_cases);

std::vector<SuiteResult> run_all_suites(std::uint64_t seed);

} // namespace quiverlab
