#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "riverfun/error.hpp"

namespace riverfun {

struct WeightedEdge {
    int from = 0;
    int to = 0;
    long long weight = 0;

    friend bool operator==(const WeightedEdge&, const WeightedEdge&) = default;
};

enum class Direction { Forward, Reverse };

// Complete antisymmetric weighted digraph of pairwise margins.
// Immutable after construction; all queries are reentrant.
class MarginGraph {
public:
    // `margin` must be an m x m antisymmetric matrix with zero diagonal.
    MarginGraph(std::vector<std::string> names, std::vector<std::vector<long long>> margin);

    // Builds a graph from explicitly weighted edges; unlisted pairs stay zero
    // (making the graph non-strict unless every pair is covered).
    static MarginGraph from_edges(int m, const std::vector<WeightedEdge>& edges,
                                  std::vector<std::string> names = {});

    int size() const { return m_; }
    long long margin(int x, int y) const { return margin_[x][y]; }

    // True iff no off-diagonal margin is zero. River, Ranked Pairs and the
    // fused-universe computation are only defined on strict graphs.
    bool strict() const { return strict_; }
    void require_strict() const;

    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int id) const { return names_[id]; }
    int id_of(const std::string& name) const; // throws UnknownAlternative

    // Positive-margin edges in deterministic order: descending weight,
    // then lexicographic by (from, to).
    std::vector<WeightedEdge> positive_edges() const;

    // Vertices reachable from `start` (Forward) or reaching `start` (Reverse)
    // using only edges with margin strictly above `threshold`, skipping
    // `excluded` edges. `start` is always included. Sorted ascending.
    std::vector<int> reachable_above(int start, long long threshold, Direction dir,
                                     const std::set<std::pair<int, int>>& excluded = {}) const;

    // Maximin strongest-path strengths: entry [x][y] is the best over all
    // majority paths x -> y of the minimum margin along the path, 0 if there
    // is no path. Diagonal is 0 by convention.
    std::vector<std::vector<long long>> strongest_paths() const;

    std::optional<int> condorcet_winner() const;

private:
    int m_;
    std::vector<std::string> names_;
    std::vector<std::vector<long long>> margin_;
    bool strict_;
};

// Names for graphs constructed without any: a, b, c, ... for m <= 26,
// a1, a2, ... beyond that.
std::vector<std::string> default_names(int m);

// JSON form: {"m": int, "names": [...], "edges": [[x, y, w], ...]} with
// positive edges only, in positive_edges() order.
std::string margin_graph_to_json(const MarginGraph& g);
MarginGraph margin_graph_from_json(const std::string& text);

} // namespace riverfun
