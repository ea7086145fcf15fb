#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "rtlab/graph/simple_graph.hpp"

namespace rtlab::analysis {

// U: every r-subset has at least m common neighbors in the host graph.
struct DrcWitness {
  std::vector<int> U;
  int r = 1;
  int m = 0;
  int t = 1;
  std::vector<int> sampled_T;  // in draw order, repetition allowed
  std::vector<int> removed;    // deleted during cleanup, in deletion order
  int trial = 0;
};

struct DrcResult {
  std::optional<DrcWitness> witness;  // empty: NotFound
  int trials = 0;
  int best_size = 0;         // largest clean set over all trials
  double mean_size = 0.0;
  double guarantee = 0.0;    // d^t / n^(t-1) - n^r (m/n)^t with d = 2|E|/n
};

nlohmann::json to_json(const DrcWitness& w);
nlohmann::json to_json(const DrcResult& r);

// Dependent random choice: per trial, draw t vertices with repetition, take
// their common neighborhood U0, then delete the lowest-index vertex of each
// r-subset with fewer than m common neighbors. Returns the largest clean set
// (earliest trial on ties) if it has at least max(min_size, 1) vertices; the
// witness is verified before return. Throws Error(bad_param) for r < 1, t < 1
// or trials < 1.
DrcResult drc_find(const graph::SimpleGraph& g, int r, int m, int t, int trials, std::uint64_t seed,
                   int min_size = 1);

// Direct check of the defining property.
bool verify_drc(const graph::SimpleGraph& g, const std::vector<int>& U, int r, int m);

double drc_guarantee(double n, double d, int r, double m, int t);

}  // namespace rtlab::analysis
