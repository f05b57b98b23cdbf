#include "riverfun/put_oracle.hpp"

#include <algorithm>
#include <set>

namespace riverfun {

namespace {

// Contiguous [begin, end) ranges of equal margin in positive_edges() order.
std::vector<std::pair<size_t, size_t>> tie_blocks(const std::vector<WeightedEdge>& edges) {
    std::vector<std::pair<size_t, size_t>> blocks;
    size_t begin = 0;
    while (begin < edges.size()) {
        size_t end = begin;
        while (end < edges.size() && edges[end].weight == edges[begin].weight) ++end;
        blocks.push_back({begin, end});
        begin = end;
    }
    return blocks;
}

} // namespace

BigInt count_universes(const MarginGraph& g) {
    const std::vector<WeightedEdge> edges = g.positive_edges();
    BigInt total = 1;
    for (const auto& [begin, end] : tie_blocks(edges)) {
        for (size_t i = 2; i <= end - begin; ++i) total *= static_cast<unsigned>(i);
    }
    return total;
}

void for_each_tiebreaker(const MarginGraph& g,
                         const std::function<void(const Tiebreaker&)>& fn) {
    const std::vector<WeightedEdge> edges = g.positive_edges();
    const auto blocks = tie_blocks(edges);

    Tiebreaker t;
    t.order.reserve(edges.size());
    for (const WeightedEdge& e : edges) t.order.push_back({e.from, e.to});
    // positive_edges() sorts each block lexicographically already, which is
    // the first permutation; advance like an odometer, last block fastest.
    while (true) {
        fn(t);
        bool advanced = false;
        for (size_t bi = blocks.size(); bi-- > 0;) {
            auto first = t.order.begin() + static_cast<long>(blocks[bi].first);
            auto last = t.order.begin() + static_cast<long>(blocks[bi].second);
            if (std::next_permutation(first, last)) {
                advanced = true;
                break;
            }
            // wrapped back to the lexicographic minimum; carry to next block
        }
        if (!advanced) break;
    }
}

std::vector<int> brute_force_put(const MarginGraph& g, FixedRule rule, const BigInt& limit,
                                 std::optional<std::chrono::steady_clock::time_point> deadline) {
    g.require_strict();
    const BigInt universes = count_universes(g);
    if (universes > limit)
        throw Error(Errc::UniverseLimitExceeded,
                    universes.str() + " universes exceed limit " + limit.str());

    std::set<int> winners;
    long long since_clock_check = 0;
    for_each_tiebreaker(g, [&](const Tiebreaker& t) {
        if (deadline && ++since_clock_check >= 256) {
            since_clock_check = 0;
            if (std::chrono::steady_clock::now() > *deadline)
                throw Error(Errc::Timeout, "brute-force enumeration passed its deadline");
        }
        if (rule == FixedRule::River)
            winners.insert(river(g, t).root);
        else
            winners.insert(ranked_pairs(g, t).winner);
    });
    return std::vector<int>(winners.begin(), winners.end());
}

} // namespace riverfun
