#include "rtlab/graph/simple_graph.hpp"

#include <algorithm>
#include <string>

#include "rtlab/error.hpp"

namespace rtlab::graph {

SimpleGraph::SimpleGraph(int num_vertices, std::vector<Edge> edges, nlohmann::json provenance)
    : n_(num_vertices), provenance_(std::move(provenance)) {
  if (num_vertices < 0) throw Error(ErrorCode::bad_inputs, "negative vertex count");
  for (auto& [u, v] : edges) {
    if (u == v) throw Error(ErrorCode::bad_inputs, "self-loop at " + std::to_string(u));
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n_)
      throw Error(ErrorCode::bad_inputs, "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (auto it = std::adjacent_find(edges.begin(), edges.end()); it != edges.end())
    throw Error(ErrorCode::bad_inputs,
                "duplicate edge (" + std::to_string(it->first) + "," + std::to_string(it->second) + ")");
  edges_ = std::move(edges);
}

bool SimpleGraph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{u, v});
}

std::vector<int> SimpleGraph::degrees() const {
  std::vector<int> deg(static_cast<std::size_t>(n_), 0);
  for (auto [u, v] : edges_) {
    ++deg[static_cast<std::size_t>(u)];
    ++deg[static_cast<std::size_t>(v)];
  }
  return deg;
}

std::vector<std::vector<int>> SimpleGraph::adjacency_lists() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n_));
  for (auto [u, v] : edges_) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  return adj;
}

std::vector<DynBitset> SimpleGraph::adjacency_bits() const {
  const auto n = static_cast<std::size_t>(n_);
  std::vector<DynBitset> adj(n, DynBitset(n));
  for (auto [u, v] : edges_) {
    adj[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
    adj[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
  }
  return adj;
}

SimpleGraph SimpleGraph::induced(std::span<const int> vertices) const {
  std::vector<int> pos(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const int v = vertices[i];
    if (v < 0 || v >= n_) throw Error(ErrorCode::bad_inputs, "induced: vertex out of range");
    if (pos[static_cast<std::size_t>(v)] >= 0) throw Error(ErrorCode::bad_inputs, "induced: repeated vertex");
    pos[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  std::vector<Edge> sub;
  for (auto [u, v] : edges_) {
    const int a = pos[static_cast<std::size_t>(u)];
    const int b = pos[static_cast<std::size_t>(v)];
    if (a >= 0 && b >= 0) sub.emplace_back(a, b);
  }
  return SimpleGraph(static_cast<int>(vertices.size()), std::move(sub));
}

SimpleGraph empty_graph(int n) { return SimpleGraph(n, {}, {{"kind", "empty"}}); }

SimpleGraph complete_graph(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return SimpleGraph(n, std::move(e), {{"kind", "complete"}});
}

SimpleGraph cycle_graph(int n) {
  std::vector<Edge> e;
  if (n >= 3)
    for (int u = 0; u < n; ++u) e.emplace_back(u, (u + 1) % n);
  return SimpleGraph(n, std::move(e), {{"kind", "cycle"}});
}

SimpleGraph petersen_graph() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);          // outer cycle
    e.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    e.emplace_back(i, 5 + i);                // spokes
  }
  return SimpleGraph(10, std::move(e), {{"kind", "petersen"}});
}

SimpleGraph complete_multipartite(std::span<const int> part_sizes) {
  std::vector<int> part;
  for (std::size_t i = 0; i < part_sizes.size(); ++i)
    for (int k = 0; k < part_sizes[i]; ++k) part.push_back(static_cast<int>(i));
  const auto n = static_cast<int>(part.size());
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part[static_cast<std::size_t>(u)] != part[static_cast<std::size_t>(v)]) e.emplace_back(u, v);
  return SimpleGraph(n, std::move(e),
                     {{"kind", "complete-multipartite"},
                      {"parts", std::vector<int>(part_sizes.begin(), part_sizes.end())}});
}

SimpleGraph complete_bipartite(int left, int right) {
  const int parts[] = {left, right};
  return complete_multipartite(parts);
}

void BipartiteGraph::normalize() {
  for (auto [l, r] : edges) {
    if (l < 0 || l >= left_count || r < 0 || r >= right_count)
      throw Error(ErrorCode::bad_inputs, "bipartite edge out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw Error(ErrorCode::bad_inputs, "duplicate bipartite edge");
}

std::vector<DynBitset> BipartiteGraph::left_adjacency() const {
  std::vector<DynBitset> adj(static_cast<std::size_t>(left_count),
                             DynBitset(static_cast<std::size_t>(right_count)));
  for (auto [l, r] : edges) adj[static_cast<std::size_t>(l)].set(static_cast<std::size_t>(r));
  return adj;
}

SimpleGraph to_simple_graph(const BipartiteGraph& b, nlohmann::json extra_provenance) {
  std::vector<Edge> e;
  e.reserve(b.edges.size());
  for (auto [l, r] : b.edges) e.emplace_back(l, b.left_count + r);
  nlohmann::json prov = {{"kind", "bipartite"}, {"left", b.left_count}, {"right", b.right_count}};
  if (extra_provenance.is_object())
    for (auto& [k, v] : extra_provenance.items())
      if (k != "kind" && k != "left" && k != "right") prov[k] = v;
  return SimpleGraph(b.left_count + b.right_count, std::move(e), std::move(prov));
}

BipartiteGraph bipartite_from_graph(const SimpleGraph& g) {
  BipartiteGraph b;
  const auto& p = g.provenance();
  if (p.is_object() && p.contains("left") && p.contains("right")) {
    b.left_count = p.at("left").get<int>();
    b.right_count = p.at("right").get<int>();
  } else {
    b.left_count = g.num_vertices() / 2;
    b.right_count = g.num_vertices() - b.left_count;
  }
  if (b.left_count + b.right_count != g.num_vertices())
    throw Error(ErrorCode::bad_inputs, "bipartite sides do not add up to the vertex count");
  for (auto [u, v] : g.edges()) {
    if (u >= b.left_count || v < b.left_count)
      throw Error(ErrorCode::bad_inputs, "edge inside one side of a bipartite graph");
    b.edges.emplace_back(u, v - b.left_count);
  }
  b.normalize();
  return b;
}

}  // namespace rtlab::graph
