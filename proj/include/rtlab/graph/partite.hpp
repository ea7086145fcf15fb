#pragma once

#include <cstdint>
#include <vector>

#include "rtlab/geometry/incidence.hpp"
#include "rtlab/graph/simple_graph.hpp"
#include "rtlab/report.hpp"

namespace rtlab::graph {

inline constexpr int kIsolated = 0;

// Per-line class labels: classes[l][k] is the class of the k-th point of line
// l, in 1..s or kIsolated.
struct PartitionAssignment {
  int s = 2;
  double p = 1.0;
  std::uint64_t seed = 0;
  bool uniform = false;  // quadrangle coloring: no isolation
  std::uint64_t structure_fingerprint = 0;
  std::vector<std::vector<int>> classes;

  bool operator==(const PartitionAssignment&) const = default;
};

std::uint64_t structure_fingerprint(const geometry::IncidenceStructure& hx);

// Class of a point given its uniform draw u: 1 + floor(u / (p/s)) when u < p
// (capped at s), otherwise kIsolated.
int class_from_draw(double u, int s, double p) noexcept;

// Independent draw per (line, point): class i with probability p/s each,
// isolated with probability 1 - p. Throws Error(bad_param) unless s >= 2 and
// 0 < p <= 1.
PartitionAssignment color_lines(const geometry::IncidenceStructure& hx, int s, double p, std::uint64_t seed);

// Uniform class in 1..s per (line, point), never isolated.
PartitionAssignment color_lines_uniform(const geometry::IncidenceStructure& hx, int s, std::uint64_t seed);

// Edge {x, y} iff a line holds both with distinct non-isolated classes.
// Throws Error(mismatch) if the assignment was produced for another structure.
SimpleGraph build_partite_graph(const geometry::IncidenceStructure& hx, const PartitionAssignment& a);

// Throws Error(bad_tag) unless tagged quadrangle, Error(bad_param) if s < 2.
SimpleGraph build_gq_graph(const geometry::IncidenceStructure& gq, int s, std::uint64_t seed);

// Edges contributed by each line: pairs with distinct non-isolated classes.
std::vector<long long> per_line_edge_counts(const PartitionAssignment& a);

// Exact structural check: every edge lies in exactly one line, and each line's
// non-isolated points induce the complete multipartite graph given by the
// class preimages. The report fails with the first offending line as witness.
VerificationReport verify_partite_structure(const geometry::IncidenceStructure& hx, const PartitionAssignment& a,
                                            const SimpleGraph& g);

}  // namespace rtlab::graph
