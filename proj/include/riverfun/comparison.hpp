#pragma once

#include <vector>

#include "riverfun/margin_graph.hpp"

namespace riverfun {

// Alternatives x such that every majority complaint against x (an edge
// (y,x) with positive margin) is answered by an x->y path at least as
// strong. Sorted ascending; never empty.
std::vector<int> immune_alternatives(const MarginGraph& g);

// Split Cycle selects exactly the immune alternatives.
std::vector<int> split_cycle_winners(const MarginGraph& g);

// Schulze winners over the margin-based strongest-path matrix.
std::vector<int> beat_path_winners(const MarginGraph& g);

} // namespace riverfun
