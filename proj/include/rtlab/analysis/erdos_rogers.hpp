#pragma once

#include "rtlab/graph/simple_graph.hpp"

namespace rtlab::analysis {

inline constexpr int kErdosRogersGuard = 8;

struct ErdosRogersResult {
  int value = 0;
  graph::SimpleGraph extremal;  // a K_t-free graph attaining the value
  long long nodes = 0;          // search nodes visited
};

// min alpha_s(G) over K_t-free graphs G on n vertices, by growing graphs one
// vertex at a time for increasing targets k and pruning any prefix that
// already has a K_t or a K_s-free set of size k+1. Throws Error(size_limit)
// for n > guard and Error(bad_param) unless 2 <= s < t and n >= 1.
ErdosRogersResult erdos_rogers_exact(int s, int t, int n, int guard = kErdosRogersGuard);

}  // namespace rtlab::analysis
