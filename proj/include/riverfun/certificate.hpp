#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "riverfun/fun.hpp"
#include "riverfun/river.hpp"

namespace riverfun {

// Directed tree inside the fused-universe diagram, rooted at a chosen
// alternative. Spans all alternatives whenever the root is a winner.
struct CertificateTree {
    int root = -1;
    std::vector<std::optional<std::pair<int, long long>>> parent;

    std::vector<WeightedEdge> edges() const;
    bool spanning() const;
};

// Grows a tree from `root` by repeatedly taking a maximum-margin edge that
// crosses from the tree to a new vertex; ties broken lexicographically by
// (from, to).
CertificateTree directed_max_prim(const FunDiagram& d, int root);

// All positive edges of g by descending margin; within an equal-margin block
// the tree's edges come first, remaining ties lexicographic. Throws
// EdgeNotInGraph if the tree uses a pair that is not a positive edge of g.
Tiebreaker certificate_tiebreaker(const MarginGraph& g, const CertificateTree& tree);

struct CertificateResult {
    bool ok = false;
    CertificateTree tree;
    Tiebreaker tiebreaker;
};

// End-to-end check that `alternative` wins in some universe: builds the
// fused-universe diagram, extracts the tree and its tiebreaker, replays
// River under it, and compares. ok iff the River diagram equals the tree
// edge-for-edge and its winner is `alternative`.
CertificateResult verify_certificate(const MarginGraph& g, int alternative);

// {"winner": name, "tree": [[parent, child, margin], ...],
//  "tiebreaker": [[x, y], ...], "verified": bool}
std::string certificate_to_json(const MarginGraph& g, int alternative,
                                const CertificateResult& r);

} // namespace riverfun
