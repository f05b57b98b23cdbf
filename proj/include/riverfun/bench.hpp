#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "riverfun/put_oracle.hpp"

namespace riverfun {

struct BenchConfig {
    std::vector<std::string> rules;
    std::vector<int> alternatives;
    std::vector<long long> voters;
    int instances_per_cell = 1;
    double phi = 0.8;
    std::uint64_t seed = 0;
    double timeout_poly_seconds = 5.0;
    double timeout_brute_seconds = 60.0;
    BigInt universe_limit = 1000000;
    int jobs = 1;
    int max_attempts = 50000;
};

struct BenchRecord {
    std::string rule;
    int m = 0;
    long long n = 0;
    std::uint64_t seed = 0;
    double phi = 0.0;
    double wall_seconds = 0.0;
    std::optional<std::size_t> winner_count; // absent when timed out
    bool timed_out = false;
};

// Rule names run_bench understands.
const std::vector<std::string>& known_bench_rules();

// For every (m, n) cell, samples strict Condorcet-winner-free profiles and
// times each rule on their margin graphs. A rule that times out three times
// for some m is not run again for that m. Cells where no suitable profile is
// found within the attempt budget are skipped.
std::vector<BenchRecord> run_bench(const BenchConfig& cfg);

// Header "rule,m,n,seed,phi,wall_seconds,winners,timed_out", one row per
// record in order.
std::string bench_csv(const std::vector<BenchRecord>& records);

} // namespace riverfun
