#pragma once

#include <vector>

#include "rtlab/graph/simple_graph.hpp"

namespace rtlab::graph {

// k copies of h (copy i on [i|h|, (i+1)|h|)) with every cross-copy pair
// joined. Throws Error(bad_param) if k < 2.
SimpleGraph join_construction(const SimpleGraph& h, int k);

// Sizes of k parts of n differing by at most one, larger parts first.
std::vector<int> near_equal_parts(int n, int k);

// Two copies of h on [0, |h|) and [|h|, 2|h|) plus cross edges (l, |h| + r)
// for each (l, r) in b. Throws Error(mismatch) unless both sides of b have
// |h| vertices.
SimpleGraph two_block_construction(const SimpleGraph& h, const BipartiteGraph& b);

}  // namespace rtlab::graph
