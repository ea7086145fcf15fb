#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rtlab/geometry/incidence.hpp"

namespace rtlab::hypergraph {

enum class SamplingMode { line_subsample, vertex_eliminate };

struct SamplingSpec {
  double lambda = 0.0;
  SamplingMode mode = SamplingMode::line_subsample;
  std::uint64_t seed = 0;
};

// Order q of a remnant H (q^2 points). Throws Error(bad_inputs) otherwise.
int remnant_order(const geometry::IncidenceStructure& h);

// Keep probability lambda/q; throws Error(bad_lambda) unless 0 < lambda <= q.
double keep_probability(double lambda, int q);

// Per-line keep decisions for H1, keyed by line index.
std::vector<char> h1_line_decisions(const geometry::IncidenceStructure& h, const SamplingSpec& spec);
// Per-point survival decisions for H2, keyed by point index.
std::vector<char> h2_point_decisions(const geometry::IncidenceStructure& h, const SamplingSpec& spec);

// H1: each line of H kept independently with probability lambda/q.
geometry::IncidenceStructure sample_h1(const geometry::IncidenceStructure& h, const SamplingSpec& spec);
geometry::IncidenceStructure sample_h1_with(const geometry::IncidenceStructure& h, std::span<const char> keep);

struct H2Sample {
  geometry::IncidenceStructure structure;
  std::vector<int> surviving;  // original index of each new point
  int eliminated = 0;
  int pruned_lines = 0;  // lines left with fewer than two points
};

// H2: each point of H eliminated independently with probability 1 - lambda/q;
// survivors are renumbered densely in order and lines shrink accordingly.
H2Sample sample_h2_detailed(const geometry::IncidenceStructure& h, const SamplingSpec& spec);
H2Sample sample_h2_with(const geometry::IncidenceStructure& h, std::span<const char> survive);
geometry::IncidenceStructure sample_h2(const geometry::IncidenceStructure& h, const SamplingSpec& spec);

}  // namespace rtlab::hypergraph
