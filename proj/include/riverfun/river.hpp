#pragma once

#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "riverfun/margin_graph.hpp"

namespace riverfun {

// A descending linear ordering of all positive-margin edges; one universe.
struct Tiebreaker {
    std::vector<std::pair<int, int>> order;

    friend bool operator==(const Tiebreaker&, const Tiebreaker&) = default;
};

// Throws MissingEdge / DuplicateEdge / NotDescending (with the first
// offending index) when `t` is not a valid tiebreaker for `g`.
void validate_tiebreaker(const MarginGraph& g, const Tiebreaker& t);

// Deterministic canonical tiebreaker: positive_edges() order.
Tiebreaker default_tiebreaker(const MarginGraph& g);

// Result of one River run: an in-tree over all alternatives.
struct RiverDiagram {
    int root = -1;
    // parent[v] = (parent alternative, edge margin) or nullopt for the root.
    std::vector<std::optional<std::pair<int, long long>>> parent;

    std::vector<WeightedEdge> edges() const;
};

// Greedy edge acceptance in tiebreaker order subject to the branching
// condition (target already dominated) and the cycle condition.
RiverDiagram river(const MarginGraph& g, const Tiebreaker& t);

struct RankedPairsResult {
    std::vector<WeightedEdge> locked;
    int winner = -1;
};

// Same process with only the cycle condition; winner is the unique source
// of the locked DAG.
RankedPairsResult ranked_pairs(const MarginGraph& g, const Tiebreaker& t);

// Tiebreaker file format: one edge per line as "x>y" using alternative
// names; order significant; validated against g.
Tiebreaker load_tiebreaker(std::istream& in, const MarginGraph& g);
Tiebreaker load_tiebreaker(const std::string& text, const MarginGraph& g);

// {"root": name, "edges": [[parent, child, margin], ...]}
std::string river_diagram_to_json(const MarginGraph& g, const RiverDiagram& d);

} // namespace riverfun
