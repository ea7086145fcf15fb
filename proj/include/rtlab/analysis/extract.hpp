#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rtlab/analysis/drc.hpp"
#include "rtlab/graph/simple_graph.hpp"

namespace rtlab::analysis {

enum class ExtractOutcome { found, refutation, not_found };

std::string_view to_string(ExtractOutcome outcome);

struct ExtractResult {
  ExtractOutcome outcome = ExtractOutcome::not_found;
  std::vector<int> set;      // found: a K_s-free vertex set
  std::string route;         // "U" or "N(W)"
  std::vector<int> U;
  std::vector<int> W;
  std::vector<int> clique;   // refutation: a K_{s+r} of G
  int s = 2;
  int r = 1;
  int t = 1;
  int m = 0;
  int target = 0;            // size the argument aims for
  bool target_met = false;   // |set| >= target
  DrcResult drc;
};

nlohmann::json to_json(const ExtractResult& r);

// The upper-bound argument as a procedure: find U by dependent random choice
// (min_size as given); if G[U] is K_s-free return U. Otherwise pick the
// lexicographically smallest K_max(s,r) in U, let W be its first r vertices,
// and return N(W) when it is K_s-free. If N(W) holds a K_s, together with W it
// forms a K_{s+r}, returned as a refutation.
ExtractResult extract_with(const graph::SimpleGraph& g, int s, int r, int t, int m, int target, int trials,
                           std::uint64_t seed);

// t = ceil((r - delta)/(1 - delta)), m = target = ceil(n^delta). Throws
// Error(bad_param) unless 0 < delta < 1, s >= 2, 1 <= r.
ExtractResult extract_independent_set(const graph::SimpleGraph& g, int s, int r, double delta, int trials,
                                      std::uint64_t seed);

// Parameter mapping of the K_{2s+1} phase-transition argument: r = s+1,
// t = 2s+1, a = ceil(n/omega), m supplied. omega <= 0 selects ceil(log log n).
struct PhaseTransitionParams {
  int r = 0;
  int t = 0;
  int a = 0;
  int m = 0;
  double omega = 0.0;
};

double default_omega(double n);
PhaseTransitionParams phase_transition_params(int n, int s, int m, double omega = 0.0);
ExtractResult phase_transition_extract(const graph::SimpleGraph& g, int s, int m, double omega, int trials,
                                       std::uint64_t seed);

}  // namespace rtlab::analysis
