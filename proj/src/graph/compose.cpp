#include "rtlab/graph/compose.hpp"

#include <string>

#include "rtlab/error.hpp"

namespace rtlab::graph {

SimpleGraph join_construction(const SimpleGraph& h, int k) {
  if (k < 2) throw Error(ErrorCode::bad_param, "join needs k >= 2");
  const int m = h.num_vertices();
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(k) * h.num_edges() +
                static_cast<std::size_t>(k) * (k - 1) / 2 * static_cast<std::size_t>(m) * m);
  for (int c = 0; c < k; ++c)
    for (const auto& [u, v] : h.edges()) edges.emplace_back(c * m + u, c * m + v);
  for (int c1 = 0; c1 < k; ++c1)
    for (int c2 = c1 + 1; c2 < k; ++c2)
      for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v) edges.emplace_back(c1 * m + u, c2 * m + v);
  return SimpleGraph(k * m, std::move(edges), {{"kind", "join"}, {"k", k}, {"base", h.provenance()}});
}

std::vector<int> near_equal_parts(int n, int k) {
  if (k < 1 || n < 0) throw Error(ErrorCode::bad_param, "need n >= 0 and k >= 1");
  std::vector<int> parts(static_cast<std::size_t>(k), n / k);
  for (int i = 0; i < n % k; ++i) ++parts[static_cast<std::size_t>(i)];
  return parts;
}

SimpleGraph two_block_construction(const SimpleGraph& h, const BipartiteGraph& b) {
  const int m = h.num_vertices();
  if (b.left_count != m || b.right_count != m)
    throw Error(ErrorCode::mismatch, "bipartite block is " + std::to_string(b.left_count) + "+" +
                                         std::to_string(b.right_count) + ", graph has " + std::to_string(m) +
                                         " vertices");
  std::vector<Edge> edges;
  edges.reserve(2 * h.num_edges() + b.num_edges());
  for (const auto& [u, v] : h.edges()) {
    edges.emplace_back(u, v);
    edges.emplace_back(m + u, m + v);
  }
  for (const auto& [l, r] : b.edges) edges.emplace_back(l, m + r);
  return SimpleGraph(2 * m, std::move(edges),
                     {{"kind", "two-block"}, {"base", h.provenance()}, {"cross_edges", b.num_edges()}});
}

}  // namespace rtlab::graph
