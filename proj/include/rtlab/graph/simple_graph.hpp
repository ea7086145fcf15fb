#pragma once

#include <span>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rtlab/bitset.hpp"

namespace rtlab::graph {

using Edge = std::pair<int, int>;

// Undirected loop-free graph. Edges are stored once as (u, v) with u < v in
// lexicographic order.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  // Orients each pair as u < v and sorts. Throws Error(bad_inputs) on loops,
  // out-of-range endpoints or duplicate edges.
  SimpleGraph(int num_vertices, std::vector<Edge> edges, nlohmann::json provenance = nullptr);

  int num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const nlohmann::json& provenance() const noexcept { return provenance_; }
  void set_provenance(nlohmann::json p) { provenance_ = std::move(p); }

  bool has_edge(int u, int v) const;
  std::vector<int> degrees() const;
  std::vector<std::vector<int>> adjacency_lists() const;
  std::vector<DynBitset> adjacency_bits() const;

  // Subgraph induced on `vertices` (relabelled 0..k-1 in the given order).
  SimpleGraph induced(std::span<const int> vertices) const;

  bool operator==(const SimpleGraph&) const = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  nlohmann::json provenance_ = nullptr;
};

SimpleGraph empty_graph(int n);
SimpleGraph complete_graph(int n);
SimpleGraph cycle_graph(int n);
SimpleGraph petersen_graph();
// Parts occupy consecutive index ranges in the given order.
SimpleGraph complete_multipartite(std::span<const int> part_sizes);
SimpleGraph complete_bipartite(int left, int right);

// Bipartite graph with sides [0, left_count) and [0, right_count).
struct BipartiteGraph {
  int left_count = 0;
  int right_count = 0;
  std::vector<Edge> edges;  // (left, right), sorted, unique

  std::size_t num_edges() const noexcept { return edges.size(); }
  // Throws Error(bad_inputs) on out-of-range or duplicate edges; sorts edges.
  void normalize();
  std::vector<DynBitset> left_adjacency() const;
  bool operator==(const BipartiteGraph&) const = default;
};

// Embeds a bipartite graph as a simple graph on left_count + right_count
// vertices (right side shifted by left_count); the sides are recorded in
// the provenance so the file form round-trips.
SimpleGraph to_simple_graph(const BipartiteGraph& b, nlohmann::json extra_provenance = nullptr);
// Inverse of to_simple_graph. Uses provenance "left"/"right" when present,
// otherwise an even split. Throws Error(bad_inputs) on edges inside a side.
BipartiteGraph bipartite_from_graph(const SimpleGraph& g);

}  // namespace rtlab::graph
