#include "rtlab/analysis/extract.hpp"

#include <algorithm>
#include <cmath>

#include "rtlab/analysis/cliques.hpp"
#include "rtlab/error.hpp"
#include "rtlab/params/construction.hpp"

namespace rtlab::analysis {

using graph::SimpleGraph;

std::string_view to_string(ExtractOutcome outcome) {
  switch (outcome) {
    case ExtractOutcome::found: return "found";
    case ExtractOutcome::refutation: return "refutation";
    case ExtractOutcome::not_found: return "not_found";
  }
  return "not_found";
}

nlohmann::json to_json(const ExtractResult& r) {
  nlohmann::json j = {{"outcome", to_string(r.outcome)},
                      {"s", r.s},
                      {"r", r.r},
                      {"t", r.t},
                      {"m", r.m},
                      {"target", r.target},
                      {"target_met", r.target_met},
                      {"U", r.U},
                      {"W", r.W},
                      {"drc", to_json(r.drc)}};
  if (r.outcome == ExtractOutcome::found) {
    j["set"] = r.set;
    j["size"] = r.set.size();
    j["route"] = r.route;
  }
  if (r.outcome == ExtractOutcome::refutation) j["clique"] = r.clique;
  return j;
}

ExtractResult extract_with(const SimpleGraph& g, int s, int r, int t, int m, int target, int trials,
                           std::uint64_t seed) {
  if (s < 2 || r < 1) throw Error(ErrorCode::bad_param, "need s >= 2 and r >= 1");
  ExtractResult res;
  res.s = s;
  res.r = r;
  res.t = t;
  res.m = m;
  res.target = target;
  res.drc = drc_find(g, r, m, t, trials, seed, 1);
  if (!res.drc.witness) return res;
  res.U = res.drc.witness->U;

  const auto n = static_cast<std::size_t>(g.num_vertices());
  const auto adj = g.adjacency_bits();
  const auto in_u = find_clique_in(adj, bitset_of(n, res.U), std::max(s, r));
  if (!has_clique_in(adj, bitset_of(n, res.U), s)) {
    res.outcome = ExtractOutcome::found;
    res.route = "U";
    res.set = res.U;
  } else if (in_u) {
    res.W.assign(in_u->begin(), in_u->begin() + r);
    DynBitset common(n);
    for (std::size_t v = 0; v < n; ++v) common.set(v);
    for (int w : res.W) common &= adj[static_cast<std::size_t>(w)];
    if (auto ks = find_clique_in(adj, common, s)) {
      res.outcome = ExtractOutcome::refutation;
      res.clique = res.W;
      res.clique.insert(res.clique.end(), ks->begin(), ks->end());
      std::sort(res.clique.begin(), res.clique.end());
      if (!is_clique(g, res.clique)) throw Error(ErrorCode::mismatch, "refutation witness is not a clique");
    } else {
      res.outcome = ExtractOutcome::found;
      res.route = "N(W)";
      res.set = common.to_vector();
    }
  }
  if (res.outcome == ExtractOutcome::found) {
    if (has_clique_in(adj, bitset_of(n, res.set), s)) throw Error(ErrorCode::mismatch, "extracted set contains K_s");
    res.target_met = static_cast<int>(res.set.size()) >= target;
  }
  return res;
}

ExtractResult extract_independent_set(const SimpleGraph& g, int s, int r, double delta, int trials,
                                      std::uint64_t seed) {
  if (!(delta > 0.0 && delta < 1.0)) throw Error(ErrorCode::bad_param, "delta must lie in (0, 1)");
  const auto t = static_cast<int>(params::ceil_tolerant((r - delta) / (1.0 - delta)));
  const auto m = static_cast<int>(params::ceil_tolerant(std::pow(static_cast<double>(g.num_vertices()), delta)));
  return extract_with(g, s, r, std::max(t, 1), m, m, trials, seed);
}

double default_omega(double n) {
  if (n <= std::exp(1.0)) return 1.0;
  return std::max(1.0, std::ceil(std::log(std::log(n))));
}

PhaseTransitionParams phase_transition_params(int n, int s, int m, double omega) {
  if (s < 2 || n < 1) throw Error(ErrorCode::bad_param, "need s >= 2 and n >= 1");
  PhaseTransitionParams p;
  p.omega = omega > 0.0 ? omega : default_omega(n);
  p.r = s + 1;
  p.t = 2 * s + 1;
  p.a = static_cast<int>(params::ceil_tolerant(n / p.omega));
  p.m = m;
  return p;
}

ExtractResult phase_transition_extract(const SimpleGraph& g, int s, int m, double omega, int trials,
                                       std::uint64_t seed) {
  const auto p = phase_transition_params(g.num_vertices(), s, m, omega);
  return extract_with(g, s, p.r, p.t, p.m, p.m, trials, seed);
}

}  // namespace rtlab::analysis
