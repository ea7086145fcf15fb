#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "rtlab/graph/simple_graph.hpp"

namespace rtlab::analysis {

inline constexpr int kAlphaExactGuard = 60;

enum class CertificateKind { exact, statistical };

struct AlphaCertificate {
  CertificateKind kind = CertificateKind::exact;
  int s = 2;
  int value = 0;               // exact: alpha_s; statistical: the probed size
  std::vector<int> witness;    // exact: a maximum K_s-free induced set
  int trials = 0;
  int failures = 0;            // sampled sets without a K_s
  std::uint64_t seed = 0;
  std::vector<std::vector<int>> failure_witnesses;  // first few, sorted
};

nlohmann::json to_json(const AlphaCertificate& c);

// Largest vertex set inducing no K_s. Branch and bound over include/exclude
// with a clique-cover bound. Throws Error(size_limit) for n > guard and
// Error(bad_param) for s < 2.
AlphaCertificate alpha_s_exact(const graph::SimpleGraph& g, int s, int guard = kAlphaExactGuard);

// Samples `trials` uniform alpha-subsets and looks for a K_s in each. A
// failure (no K_s) shows alpha_s >= alpha; zero failures proves nothing.
AlphaCertificate alpha_s_probe(const graph::SimpleGraph& g, int s, int alpha, int trials, std::uint64_t seed);

// Natural log of the union-bound heuristic for the probability that some
// alpha-set of G1 misses K_s: 2 alpha log q + 3 (log s) lambda q - lambda alpha p / (2s).
double probe_union_bound_log(double q, double lambda, int s, double p, double alpha);

bool is_ks_free(const graph::SimpleGraph& g, std::span<const int> vertices, int s);

}  // namespace rtlab::analysis
