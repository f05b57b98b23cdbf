#include "doctest.h"

#include <algorithm>
#include <random>

#include "riverfun/margin_graph.hpp"
#include "support.hpp"

using namespace riverfun;
using namespace testsupport;

TEST_CASE("from_edges builds a strict cycle") {
    const MarginGraph g = cycle3(3, 2, 1);
    CHECK(g.size() == 3);
    CHECK(g.strict());
    CHECK(g.margin(0, 1) == 3);
    CHECK(g.margin(1, 0) == -3);
    CHECK(g.margin(2, 0) == 1);
}

TEST_CASE("from_edges rejects conflicting pairs and self loops") {
    try {
        MarginGraph::from_edges(2, {{0, 1, 1}, {1, 0, 1}});
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ConflictingEdge);
    }
    try {
        MarginGraph::from_edges(2, {{0, 0, 1}});
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::SelfLoop);
    }
}

TEST_CASE("uncovered pairs leave the graph non-strict") {
    const MarginGraph g = MarginGraph::from_edges(3, {{0, 1, 1}});
    CHECK_FALSE(g.strict());
    CHECK_THROWS_AS(g.require_strict(), Error);
}

TEST_CASE("positive_edges order is descending weight then lexicographic") {
    const MarginGraph g = cycle3(3, 2, 1);
    const auto edges = g.positive_edges();
    REQUIRE(edges.size() == 3);
    CHECK(edges[0] == WeightedEdge{0, 1, 3});
    CHECK(edges[1] == WeightedEdge{1, 2, 2});
    CHECK(edges[2] == WeightedEdge{2, 0, 1});

    const MarginGraph tie = cycle3(1, 1, 1);
    const auto tied = tie.positive_edges();
    CHECK(tied[0] == WeightedEdge{0, 1, 1});
    CHECK(tied[1] == WeightedEdge{1, 2, 1});
    CHECK(tied[2] == WeightedEdge{2, 0, 1});
}

TEST_CASE("zero margins are not edges") {
    const MarginGraph g = MarginGraph::from_edges(3, {{0, 1, 2}});
    for (const auto& e : g.positive_edges()) {
        CHECK(e.from == 0);
        CHECK(e.to == 1);
    }
    CHECK(g.positive_edges().size() == 1);
}

TEST_CASE("reachable_above thresholds") {
    const MarginGraph g = cycle3(3, 2, 1);
    CHECK(g.reachable_above(0, 1, Direction::Forward) == std::vector<int>{0, 1, 2});
    CHECK(g.reachable_above(0, 2, Direction::Forward) == std::vector<int>{0, 1});
    CHECK(g.reachable_above(0, 3, Direction::Forward) == std::vector<int>{0});
    CHECK(g.reachable_above(0, 99, Direction::Forward) == std::vector<int>{0});
    // reverse: who reaches a with margin > 1
    CHECK(g.reachable_above(0, 1, Direction::Reverse) == std::vector<int>{0});
    CHECK(g.reachable_above(2, 1, Direction::Reverse) == std::vector<int>{0, 1, 2});
}

TEST_CASE("reachable_above honors excluded edges") {
    const MarginGraph g = cycle3(3, 2, 1);
    CHECK(g.reachable_above(0, 0, Direction::Forward, {{0, 1}}) == std::vector<int>{0});
}

TEST_CASE("reachable_above is monotone in the threshold") {
    std::mt19937_64 rng(5150);
    for (int iter = 0; iter < 40; ++iter) {
        const MarginGraph g = random_tie_heavy_graph(5, rng());
        const int start = static_cast<int>(rng() % 5);
        std::vector<int> prev = g.reachable_above(start, 0, Direction::Forward);
        for (long long t = 1; t <= 6; ++t) {
            const std::vector<int> cur = g.reachable_above(start, t, Direction::Forward);
            CHECK(std::includes(prev.begin(), prev.end(), cur.begin(), cur.end()));
            prev = cur;
        }
    }
}

TEST_CASE("strongest_paths on the strict cycle") {
    const auto s = cycle3(3, 2, 1).strongest_paths();
    CHECK(s[0][1] == 3);
    CHECK(s[0][2] == 2);
    CHECK(s[1][2] == 2);
    CHECK(s[1][0] == 1);
    CHECK(s[2][0] == 1);
    CHECK(s[2][1] == 1);
    for (int v = 0; v < 3; ++v) CHECK(s[v][v] == 0);
}

TEST_CASE("strongest_paths on the condorcet star uses direct edges") {
    const MarginGraph g = condorcet_star(4);
    const auto s = g.strongest_paths();
    for (int y = 1; y < 4; ++y) CHECK(s[0][y] == g.margin(0, y));
}

TEST_CASE("strongest_paths matches exhaustive path enumeration") {
    std::mt19937_64 rng(424242);
    for (int iter = 0; iter < 60; ++iter) {
        const int m = 2 + static_cast<int>(rng() % 4);
        const MarginGraph g = random_tie_heavy_graph(m, rng());
        CHECK(g.strongest_paths() == brute_force_strengths(g));
    }
}

TEST_CASE("strongest_paths is a maximin fixed point") {
    std::mt19937_64 rng(999);
    for (int iter = 0; iter < 20; ++iter) {
        const MarginGraph g = random_strict_graph(6, rng());
        auto s = g.strongest_paths();
        auto relaxed = s;
        const int m = g.size();
        for (int z = 0; z < m; ++z)
            for (int x = 0; x < m; ++x)
                for (int y = 0; y < m; ++y) {
                    if (x == y || x == z || y == z) continue;
                    relaxed[x][y] = std::max(relaxed[x][y], std::min(relaxed[x][z], relaxed[z][y]));
                }
        CHECK(relaxed == s);
        for (const auto& e : g.positive_edges()) CHECK(s[e.from][e.to] >= e.weight);
    }
}

TEST_CASE("condorcet winner detection") {
    CHECK(condorcet_star(5).condorcet_winner() == 0);
    CHECK_FALSE(cycle3(1, 1, 1).condorcet_winner().has_value());
    CHECK_FALSE(cycle3(3, 2, 1).condorcet_winner().has_value());
}

TEST_CASE("json round trip") {
    const MarginGraph g = cycle3(3, 2, 1);
    const MarginGraph back = margin_graph_from_json(margin_graph_to_json(g));
    CHECK(back.size() == g.size());
    CHECK(back.names() == g.names());
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y) CHECK(back.margin(x, y) == g.margin(x, y));
}

TEST_CASE("json round trip on random graphs") {
    std::mt19937_64 rng(31337);
    for (int iter = 0; iter < 20; ++iter) {
        const MarginGraph g = random_strict_graph(4 + iter % 3, rng());
        const MarginGraph back = margin_graph_from_json(margin_graph_to_json(g));
        CHECK(back.positive_edges() == g.positive_edges());
    }
}
