#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "riverfun/margin_graph.hpp"

namespace riverfun {

// State of an edge (x,y) in the fused-universe diagram:
//   Fix  - added in every universe
//   BC   - branching choice: a partner edge into y with equal margin exists
//   CC   - cycle choice: some universe rejects it through a cycle
//   CBC  - cycle branching choice: branching choice contingent on a cycle
enum class EdgeState { Fix, BC, CC, CBC };

// Derived from the incoming diagram edges of a vertex:
//   NotDominated     - no incoming edge
//   FixedlyDominated - exactly one incoming Fix edge, or any BC/CBC edge
//   CycleDominated   - at least one incoming edge and all of them CC
enum class VertexState { NotDominated, FixedlyDominated, CycleDominated };

const char* edge_state_name(EdgeState s);
const char* vertex_state_name(VertexState s);

struct FunEdge {
    int from = 0;
    int to = 0;
    long long margin = 0;
    EdgeState state = EdgeState::Fix;
};

// The one-pass simulation of River over every tiebreaker universe at once.
// Immutable once returned by fun_diagram.
class FunDiagram {
public:
    FunDiagram(std::vector<std::string> names, std::vector<FunEdge> edges);

    int size() const { return static_cast<int>(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int id) const { return names_[id]; }
    const std::vector<FunEdge>& edges() const { return edges_; }
    const std::vector<int>& incoming(int v) const { return in_[v]; }
    const std::vector<int>& outgoing(int v) const { return out_[v]; }

    bool has_edge(int x, int y) const;
    VertexState vertex_state(int v) const;

    // Vertices that are not dominated or cycle dominated, sorted ascending.
    std::vector<int> winners() const;

private:
    std::vector<std::string> names_;
    std::vector<FunEdge> edges_;
    std::vector<std::vector<int>> in_;  // edge indices by target
    std::vector<std::vector<int>> out_; // edge indices by source
};

// Computes the fused-universe diagram, processing positive edges by
// decreasing margin. The default order within equal margins is lexicographic
// by (from, to); an explicit order may be supplied to exercise the claim
// that the winner set does not depend on it. Throws NonStrictMarginGraph,
// or BadEdgeOrder if the supplied order is not a descending permutation of
// the positive edges.
FunDiagram fun_diagram(const MarginGraph& g);
FunDiagram fun_diagram(const MarginGraph& g, const std::vector<std::pair<int, int>>& edge_order);

// Descending edge order with equal-margin blocks shuffled by `seed`.
std::vector<std::pair<int, int>> shuffled_edge_order(const MarginGraph& g, std::uint64_t seed);

// Union of the River winners over all tiebreaker universes.
std::vector<int> rv_put_winners(const MarginGraph& g);

// {"edges": [[x, y, margin, state], ...], "vertex_states": {...}, "winners": [...]}
// with alternatives referenced by name.
std::string fun_diagram_to_json(const FunDiagram& d);

// Graphviz rendering; edge style keyed by edge state, vertex shape keyed by
// vertex state.
std::string fun_diagram_to_dot(const FunDiagram& d);

} // namespace riverfun
