#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rtlab/graph/simple_graph.hpp"

namespace rtlab::graph {

inline constexpr int kExhaustiveBipartiteGuard = 60;
inline constexpr int kGreedyBipartiteGuard = 400;

struct ZarankiewiczResult {
  BipartiteGraph graph;
  std::string method;  // "projective-plane" or "greedy"
  bool verified = false;  // exhaustive K_{s,s} check ran (n <= guard)
};

// Point-line incidence graph of PG(2, q): q^2+q+1 vertices per side, each of
// degree q+1. Throws Error(not_prime).
BipartiteGraph projective_plane_incidence(int q);

// K_{s,s}-free bipartite graph with n vertices per side. Uses the projective
// plane when s = 2 and n = q^2+q+1 for a prime q, otherwise greedy insertion
// in lexicographic order with exact K_{s,s} rejection. Throws
// Error(bad_param) for n < 1 or s < 2, Error(size_limit) beyond the greedy
// guard.
ZarankiewiczResult build_zarankiewicz_bipartite(int n, int s);

// Exhaustive search for K_{s,s}: returns (left set, right set) if present.
// Throws Error(size_limit) when either side exceeds the exhaustive guard.
std::optional<std::pair<std::vector<int>, std::vector<int>>> find_kss(const BipartiteGraph& b, int s,
                                                                       int guard = kExhaustiveBipartiteGuard);

// Keeps left vertices < left and right vertices < right.
BipartiteGraph restrict_bipartite(const BipartiteGraph& b, int left, int right);

}  // namespace rtlab::graph
