#include "rtlab/analysis/drc.hpp"

#include <algorithm>
#include <cmath>

#include "rtlab/combinatorics.hpp"
#include "rtlab/error.hpp"
#include "rtlab/rng.hpp"

namespace rtlab::analysis {

using graph::SimpleGraph;

nlohmann::json to_json(const DrcWitness& w) {
  return {{"U", w.U},   {"size", w.U.size()}, {"r", w.r},           {"m", w.m},
          {"t", w.t},   {"sampled_T", w.sampled_T}, {"removed", w.removed}, {"trial", w.trial}};
}

nlohmann::json to_json(const DrcResult& r) {
  nlohmann::json j = {{"found", r.witness.has_value()},
                      {"trials", r.trials},
                      {"best_size", r.best_size},
                      {"mean_size", r.mean_size},
                      {"guarantee", r.guarantee}};
  if (r.witness) j["witness"] = to_json(*r.witness);
  return j;
}

double drc_guarantee(double n, double d, int r, double m, int t) {
  return std::pow(d, t) / std::pow(n, t - 1) - std::pow(n, r) * std::pow(m / n, t);
}

namespace {

std::size_t common_count(const std::vector<DynBitset>& adj, std::span<const int> vs, std::size_t n) {
  DynBitset common(n);
  for (std::size_t v = 0; v < n; ++v) common.set(v);
  for (int v : vs) common &= adj[static_cast<std::size_t>(v)];
  return common.count();
}

}  // namespace

bool verify_drc(const SimpleGraph& g, const std::vector<int>& U, int r, int m) {
  const auto adj = g.adjacency_bits();
  const auto n = static_cast<std::size_t>(g.num_vertices());
  return for_each_combination(std::span<const int>(U), static_cast<std::size_t>(r), [&](std::span<const int> w) {
    return common_count(adj, w, n) >= static_cast<std::size_t>(m);
  });
}

DrcResult drc_find(const SimpleGraph& g, int r, int m, int t, int trials, std::uint64_t seed, int min_size) {
  if (r < 1 || t < 1 || trials < 1) throw Error(ErrorCode::bad_param, "need r >= 1, t >= 1, trials >= 1");
  const int n = g.num_vertices();
  const auto un = static_cast<std::size_t>(n);
  const auto adj = g.adjacency_bits();
  DrcResult res;
  res.trials = trials;
  res.guarantee = n > 0 ? drc_guarantee(n, 2.0 * static_cast<double>(g.num_edges()) / n, r, m, t) : 0.0;
  if (n == 0) return res;

  std::optional<DrcWitness> best;
  double total = 0.0;
  for (int trial = 0; trial < trials; ++trial) {
    StreamRng rng(seed, StreamKind::drc, static_cast<std::uint64_t>(trial));
    DrcWitness w;
    w.r = r;
    w.m = m;
    w.t = t;
    w.trial = trial;
    DynBitset common(un);
    for (std::size_t v = 0; v < un; ++v) common.set(v);
    for (int i = 0; i < t; ++i) {
      const auto v = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      w.sampled_T.push_back(v);
      common &= adj[static_cast<std::size_t>(v)];
    }
    const auto u0 = common.to_vector();
    // Whether an r-subset is bad depends only on the host graph, so one pass
    // in lexicographic order hits every bad subset.
    std::vector<char> gone(un, 0);
    for_each_combination(std::span<const int>(u0), static_cast<std::size_t>(r), [&](std::span<const int> sub) {
      for (int v : sub)
        if (gone[static_cast<std::size_t>(v)]) return true;
      if (common_count(adj, sub, un) < static_cast<std::size_t>(m)) {
        gone[static_cast<std::size_t>(sub[0])] = 1;
        w.removed.push_back(sub[0]);
      }
      return true;
    });
    for (int v : u0)
      if (!gone[static_cast<std::size_t>(v)]) w.U.push_back(v);
    total += static_cast<double>(w.U.size());
    if (!best || w.U.size() > best->U.size()) best = std::move(w);
  }
  res.mean_size = total / trials;
  res.best_size = static_cast<int>(best->U.size());
  if (res.best_size >= std::max(min_size, 1)) {
    if (!verify_drc(g, best->U, r, m)) throw Error(ErrorCode::mismatch, "dependent random choice witness failed");
    res.witness = std::move(best);
  }
  return res;
}

}  // namespace rtlab::analysis
