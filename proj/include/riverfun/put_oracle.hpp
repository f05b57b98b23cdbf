#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "riverfun/river.hpp"

namespace riverfun {

using BigInt = boost::multiprecision::cpp_int;

enum class FixedRule { River, RankedPairs };

// Number of tiebreaker universes: the product of the factorials of the
// equal-margin block sizes. Exact.
BigInt count_universes(const MarginGraph& g);

// Calls fn once per tiebreaker universe. Blocks are concatenated in
// descending margin order; within each block the permutations are visited in
// lexicographic order of the (from, to) pairs. No limit is enforced here.
void for_each_tiebreaker(const MarginGraph& g, const std::function<void(const Tiebreaker&)>& fn);

// Union of the rule's winners over every universe, sorted ascending.
// Throws UniverseLimitExceeded when count_universes(g) > limit, and Timeout
// when a deadline is given and passes mid-enumeration.
std::vector<int> brute_force_put(
    const MarginGraph& g, FixedRule rule, const BigInt& limit,
    std::optional<std::chrono::steady_clock::time_point> deadline = std::nullopt);

} // namespace riverfun
