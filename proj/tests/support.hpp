#pragma once

// Shared helpers for the test suites: compact graph construction, random
// instance generators, and slow reference computations kept deliberately
// independent of the library's own algorithms.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "riverfun/margin_graph.hpp"

namespace testsupport {

inline riverfun::MarginGraph graph(int m, std::vector<riverfun::WeightedEdge> edges) {
    return riverfun::MarginGraph::from_edges(m, edges);
}

// Strict cycle a->b->c->a with the given weights.
inline riverfun::MarginGraph cycle3(long long ab, long long bc, long long ca) {
    return graph(3, {{0, 1, ab}, {1, 2, bc}, {2, 0, ca}});
}

// w (vertex 0) beats everyone; the rest form a transitive chain.
inline riverfun::MarginGraph condorcet_star(int m) {
    std::vector<riverfun::WeightedEdge> edges;
    for (int y = 1; y < m; ++y) edges.push_back({0, y, 2 * y + 1});
    for (int x = 1; x < m; ++x)
        for (int y = x + 1; y < m; ++y) edges.push_back({x, y, 1});
    return graph(m, edges);
}

// Maximin path strength by exhaustive DFS over all simple paths; the slow
// reference for strongest_paths on small graphs.
inline std::vector<std::vector<long long>> brute_force_strengths(const riverfun::MarginGraph& g) {
    const int m = g.size();
    std::vector<std::vector<long long>> best(m, std::vector<long long>(m, 0));
    std::vector<char> used(m, 0);
    for (int start = 0; start < m; ++start) {
        auto dfs = [&](auto&& self, int u, long long strength) -> void {
            for (int v = 0; v < m; ++v) {
                if (used[v] || g.margin(u, v) <= 0) continue;
                const long long s = std::min(strength, g.margin(u, v));
                best[start][v] = std::max(best[start][v], s);
                used[v] = 1;
                self(self, v, s);
                used[v] = 0;
            }
        };
        std::fill(used.begin(), used.end(), 0);
        used[start] = 1;
        dfs(dfs, start, std::numeric_limits<long long>::max());
    }
    return best;
}

// Random strict margin graph whose equal-margin blocks have at most
// `max_block` edges, keeping the universe count small.
inline riverfun::MarginGraph random_strict_graph(int m, std::uint64_t seed, int max_block = 3) {
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < m; ++x)
        for (int y = x + 1; y < m; ++y) pairs.push_back({x, y});
    std::shuffle(pairs.begin(), pairs.end(), rng);

    std::vector<riverfun::WeightedEdge> edges;
    long long weight = 2 * static_cast<long long>(pairs.size()) + 1;
    size_t i = 0;
    while (i < pairs.size()) {
        const size_t block = 1 + rng() % static_cast<std::uint64_t>(max_block);
        for (size_t j = 0; j < block && i < pairs.size(); ++j, ++i) {
            auto [x, y] = pairs[i];
            if (rng() & 1) std::swap(x, y);
            edges.push_back({x, y, weight});
        }
        weight -= 2;
    }
    return graph(m, edges);
}

// Tie-heavy random tournament: every edge weight drawn from {1, 3, 5}.
inline riverfun::MarginGraph random_tie_heavy_graph(int m, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<riverfun::WeightedEdge> edges;
    for (int x = 0; x < m; ++x)
        for (int y = x + 1; y < m; ++y) {
            const long long w = 1 + 2 * static_cast<long long>(rng() % 3);
            if (rng() & 1)
                edges.push_back({x, y, w});
            else
                edges.push_back({y, x, w});
        }
    return graph(m, edges);
}

inline std::set<std::pair<int, int>> edge_pairs(const std::vector<riverfun::WeightedEdge>& edges) {
    std::set<std::pair<int, int>> out;
    for (const auto& e : edges) out.insert({e.from, e.to});
    return out;
}

} // namespace testsupport
