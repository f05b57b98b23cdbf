#include "doctest.h"

#include <algorithm>
#include <random>

#include "riverfun/certificate.hpp"
#include "riverfun/put_oracle.hpp"
#include "support.hpp"

using namespace riverfun;
using namespace testsupport;

namespace {

// Maximin strengths restricted to the diagram's edges.
std::vector<std::vector<long long>> diagram_strengths(const FunDiagram& d) {
    const int m = d.size();
    std::vector<std::vector<long long>> s(m, std::vector<long long>(m, 0));
    for (const FunEdge& e : d.edges()) s[e.from][e.to] = e.margin;
    for (int z = 0; z < m; ++z)
        for (int x = 0; x < m; ++x)
            for (int y = 0; y < m; ++y) {
                if (x == y || x == z || y == z) continue;
                s[x][y] = std::max(s[x][y], std::min(s[x][z], s[z][y]));
            }
    return s;
}

long long tree_path_strength(const CertificateTree& t, int target) {
    long long strength = std::numeric_limits<long long>::max();
    int v = target;
    while (t.parent[v]) {
        strength = std::min(strength, t.parent[v]->second);
        v = t.parent[v]->first;
    }
    REQUIRE(v == t.root);
    return strength;
}

} // namespace

TEST_CASE("prim tree of the condorcet star is the star") {
    const MarginGraph g = condorcet_star(5);
    const CertificateTree t = directed_max_prim(fun_diagram(g), 0);
    for (int v = 1; v < 5; ++v) {
        REQUIRE(t.parent[v].has_value());
        CHECK(t.parent[v]->first == 0);
    }
}

TEST_CASE("prim tree of the symmetric cycle") {
    const CertificateTree t = directed_max_prim(fun_diagram(cycle3(1, 1, 1)), 0);
    CHECK(edge_pairs(t.edges()) == std::set<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("prim picks the strongest crossing edge first") {
    // diagram edges a->b (5), a->c (3), c->b (4); from a the margin-5 edge
    // wins, after which only a->c crosses.
    const FunDiagram d(default_names(3), {{0, 1, 5, EdgeState::Fix},
                                          {0, 2, 3, EdgeState::Fix},
                                          {2, 1, 4, EdgeState::CC}});
    const CertificateTree t = directed_max_prim(d, 0);
    CHECK(edge_pairs(t.edges()) == std::set<std::pair<int, int>>{{0, 1}, {0, 2}});
}

TEST_CASE("certificate tiebreaker puts tree edges first within a tie block") {
    const MarginGraph g = cycle3(1, 1, 1);
    const CertificateTree t = directed_max_prim(fun_diagram(g), 0);
    const Tiebreaker tau = certificate_tiebreaker(g, t);
    CHECK(tau.order == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}});
}

TEST_CASE("certificate tiebreaker keeps descending margins above tree priority") {
    // tree edge c->b has margin 5; non-tree edge a->c has margin 7 and must
    // still come first.
    const MarginGraph g = graph(3, {{0, 1, 9}, {0, 2, 7}, {2, 1, 5}});
    CertificateTree t;
    t.root = 0;
    t.parent.assign(3, std::nullopt);
    t.parent[1] = {2, 5};
    t.parent[2] = {0, 7};
    const Tiebreaker tau = certificate_tiebreaker(g, t);
    CHECK(tau.order == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {2, 1}});
}

TEST_CASE("certificate tiebreaker with distinct margins ignores the tree") {
    const MarginGraph g = cycle3(3, 2, 1);
    CertificateTree empty;
    empty.root = 0;
    empty.parent.assign(3, std::nullopt);
    const Tiebreaker tau = certificate_tiebreaker(g, empty);
    CHECK(tau.order == default_tiebreaker(g).order);
}

TEST_CASE("certificate tiebreaker rejects alien tree edges") {
    const MarginGraph g = cycle3(3, 2, 1);
    CertificateTree t;
    t.root = 0;
    t.parent.assign(3, std::nullopt);
    t.parent[1] = {2, 1}; // (c,b) is a negative-margin pair
    try {
        certificate_tiebreaker(g, t);
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::EdgeNotInGraph);
    }
}

TEST_CASE("verify_certificate on the symmetric cycle") {
    const MarginGraph g = cycle3(1, 1, 1);
    const CertificateResult r = verify_certificate(g, 0);
    CHECK(r.ok);
    CHECK(r.tiebreaker.order == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}});
    CHECK(r.tree.spanning());
}

TEST_CASE("verify_certificate rejects a fixedly dominated alternative") {
    const CertificateResult r = verify_certificate(cycle3(3, 2, 1), 1);
    CHECK_FALSE(r.ok);
}

TEST_CASE("verify_certificate on the condorcet star") {
    CHECK(verify_certificate(condorcet_star(5), 0).ok);
    CHECK_FALSE(verify_certificate(condorcet_star(5), 3).ok);
}

TEST_CASE("verification agrees with the winner set exhaustively") {
    std::mt19937_64 rng(1618);
    for (int iter = 0; iter < 60; ++iter) {
        const int m = 2 + static_cast<int>(rng() % 5); // up to 6
        const MarginGraph g = random_strict_graph(m, rng());
        const std::vector<int> winners = rv_put_winners(g);
        CAPTURE(margin_graph_to_json(g));
        for (int a = 0; a < m; ++a) {
            const bool is_winner = std::find(winners.begin(), winners.end(), a) != winners.end();
            const CertificateResult r = verify_certificate(g, a);
            CHECK(r.ok == is_winner);
            if (is_winner) CHECK(r.tree.spanning());
        }
    }
}

TEST_CASE("tree paths are as strong as any diagram path") {
    std::mt19937_64 rng(2025);
    for (int iter = 0; iter < 40; ++iter) {
        const int m = 3 + static_cast<int>(rng() % 4);
        const MarginGraph g = random_tie_heavy_graph(m, rng());
        const FunDiagram d = fun_diagram(g);
        const auto strengths = diagram_strengths(d);
        for (int a : d.winners()) {
            const CertificateTree t = directed_max_prim(d, a);
            for (int b = 0; b < m; ++b) {
                if (b == a) continue;
                if (strengths[a][b] == 0) continue;
                REQUIRE(t.parent[b].has_value());
                CHECK(tree_path_strength(t, b) == strengths[a][b]);
            }
        }
    }
}

TEST_CASE("a weaker tree edge implies a strong bypass path around the stronger rival") {
    std::mt19937_64 rng(47);
    for (int iter = 0; iter < 40; ++iter) {
        const int m = 3 + static_cast<int>(rng() % 4);
        const MarginGraph g = random_tie_heavy_graph(m, rng());
        const FunDiagram d = fun_diagram(g);
        for (int a : d.winners()) {
            const CertificateTree t = directed_max_prim(d, a);
            // maximin strengths over tree edges only
            std::vector<std::vector<long long>> s(m, std::vector<long long>(m, 0));
            for (const WeightedEdge& e : t.edges()) s[e.from][e.to] = e.weight;
            for (int z = 0; z < m; ++z)
                for (int x = 0; x < m; ++x)
                    for (int y = 0; y < m; ++y) {
                        if (x == y || x == z || y == z) continue;
                        s[x][y] = std::max(s[x][y], std::min(s[x][z], s[z][y]));
                    }
            for (const WeightedEdge& te : t.edges())
                for (const FunEdge& rival : d.edges()) {
                    if (rival.to != te.to || rival.margin <= te.weight) continue;
                    CHECK(s[te.to][rival.from] >= rival.margin);
                }
        }
    }
}

TEST_CASE("certificate json shape") {
    const MarginGraph g = cycle3(1, 1, 1);
    const CertificateResult r = verify_certificate(g, 0);
    const std::string j = certificate_to_json(g, 0, r);
    CHECK(j.find("\"winner\":\"a\"") != std::string::npos);
    CHECK(j.find("\"verified\":true") != std::string::npos);
    CHECK(j.find("\"tree\":[[\"a\",\"b\",1],[\"b\",\"c\",1]]") != std::string::npos);
}
