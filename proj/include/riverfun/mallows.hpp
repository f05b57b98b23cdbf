#pragma once

#include <cstdint>
#include <vector>

#include "riverfun/profile.hpp"

namespace riverfun {

struct MallowsConfig {
    int alternatives = 0;
    long long voters = 0;
    double phi = 1.0; // dispersion in (0, 1]; 1 is the uniform distribution
    std::uint64_t seed = 0;
    std::vector<int> reference; // permutation of 0..m-1; identity when empty
};

// Draws `voters` independent rankings by repeated insertion: the i-th
// reference item lands j places above the bottom of the partial ranking
// with probability proportional to phi^j. Deterministic given the seed.
PreferenceProfile mallows_sample(const MallowsConfig& cfg);

// Rejection-samples until the margin graph has no Condorcet winner
// (and, when require_strict is set, no zero pairwise margin). The seed
// advances by one per attempt. Throws AttemptsExhausted.
PreferenceProfile generate_no_condorcet(const MallowsConfig& cfg, int max_attempts,
                                        bool require_strict = false);

// Expected Kendall tau distance from the reference under dispersion phi.
double expected_kendall_distance(int m, double phi);

// Dispersion value whose expected distance is norm_phi times the expected
// distance of the uniform distribution (m(m-1)/4), found by bisection.
double phi_from_norm_phi(int m, double norm_phi);

} // namespace riverfun
