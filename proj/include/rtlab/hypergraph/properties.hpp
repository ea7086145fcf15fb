#pragma once

#include <cstdint>

#include "rtlab/geometry/incidence.hpp"
#include "rtlab/hypergraph/dangerous.hpp"
#include "rtlab/report.hpp"

namespace rtlab::hypergraph {

struct HPropertyInputs {
  int q = 0;             // order of the underlying affine plane
  double lambda = 0.0;
  int r = 1;
  int a = 3;
  int b = 4;
  int pruned_lines = 0;  // H2 only: lines dropped for having < 2 points
  bool enumerate_dangerous = true;
  EnumerationLimits limits{};
};

// Linearity (exact), degree range for H1 / line-size range for H2 against
// [lambda/2, 3*lambda/2] (statistical), and exact dangerous-set counts against
// the expectation-based bounds (advisory). Throws Error(bad_tag) unless the
// structure is tagged sampled-H1 or sampled-H2.
VerificationReport verify_h_properties(const geometry::IncidenceStructure& hx, const HPropertyInputs& in);

struct RangeSweep {
  int seeds = 0;
  int out_of_range = 0;
  double frequency = 0.0;
  double chernoff_union_bound = 0.0;  // 2 q^2 exp(-lambda/12)
};

// Fraction of seeds [first_seed, first_seed + count) whose H1 sample has some
// degree outside [lambda/2, 3*lambda/2].
RangeSweep sweep_h1_degree_range(const geometry::IncidenceStructure& h, double lambda, std::uint64_t first_seed,
                                 int count);

}  // namespace rtlab::hypergraph
