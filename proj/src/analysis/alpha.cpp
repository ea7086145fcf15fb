#include "rtlab/analysis/alpha.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rtlab/analysis/cliques.hpp"
#include "rtlab/error.hpp"
#include "rtlab/rng.hpp"

namespace rtlab::analysis {

using graph::SimpleGraph;

nlohmann::json to_json(const AlphaCertificate& c) {
  nlohmann::json j = {{"kind", c.kind == CertificateKind::exact ? "exact" : "statistical"},
                      {"s", c.s},
                      {"value", c.value}};
  if (c.kind == CertificateKind::exact) {
    j["witness"] = c.witness;
  } else {
    j["trials"] = c.trials;
    j["failures"] = c.failures;
    j["seed"] = c.seed;
    j["failure_witnesses"] = c.failure_witnesses;
  }
  return j;
}

bool is_ks_free(const SimpleGraph& g, std::span<const int> vertices, int s) {
  const auto adj = g.adjacency_bits();
  return !has_clique_in(adj, bitset_of(static_cast<std::size_t>(g.num_vertices()), vertices), s);
}

namespace {

class AlphaSearch {
 public:
  AlphaSearch(const SimpleGraph& g, int s) : s_(s), n_(static_cast<std::size_t>(g.num_vertices())), adj_(g.adjacency_bits()) {}

  std::vector<int> run() {
    DynBitset chosen(n_), cand(n_);
    for (std::size_t v = 0; v < n_; ++v) cand.set(v);
    solve(chosen, 0, cand);
    return best_.to_vector();
  }

 private:
  // At most s-1 vertices of any clique can be kept, so a greedy clique cover
  // of the candidates bounds what they can still add.
  std::size_t cover_bound(const DynBitset& cand) const {
    std::vector<DynBitset> cliques;
    std::vector<std::size_t> sizes;
    cand.for_each([&](std::size_t v) {
      for (std::size_t c = 0; c < cliques.size(); ++c) {
        DynBitset tmp = cliques[c];
        tmp.subtract(adj_[v]);
        if (tmp.none()) {
          cliques[c].set(v);
          ++sizes[c];
          return;
        }
      }
      cliques.emplace_back(n_);
      cliques.back().set(v);
      sizes.push_back(1);
    });
    std::size_t total = 0;
    for (auto sz : sizes) total += std::min(sz, static_cast<std::size_t>(s_ - 1));
    return total;
  }

  void solve(DynBitset& chosen, std::size_t chosen_count, DynBitset cand) {
    if (chosen_count > best_count_) {
      best_ = chosen;
      best_count_ = chosen_count;
    }
    while (cand.any()) {
      if (chosen_count + cover_bound(cand) <= best_count_) return;
      // Branch on the candidate with most candidate neighbors.
      std::size_t v = cand.size(), best_deg = 0;
      cand.for_each([&](std::size_t u) {
        const auto d = cand.intersection_count(adj_[u]);
        if (v == cand.size() || d > best_deg) {
          v = u;
          best_deg = d;
        }
      });
      cand.reset(v);
      // Include v: drop candidates u that would close a K_s through v, i.e.
      // u ~ v and N(u) & N(v) & chosen holds a K_{s-2}.
      DynBitset next = cand;
      DynBitset common_v = chosen;
      common_v &= adj_[v];
      cand.for_each([&](std::size_t u) {
        if (!adj_[v].test(u)) return;
        if (s_ == 2) {
          next.reset(u);
          return;
        }
        DynBitset inner = common_v;
        inner &= adj_[u];
        if (has_clique_in(adj_, inner, s_ - 2)) next.reset(u);
      });
      chosen.set(v);
      solve(chosen, chosen_count + 1, std::move(next));
      chosen.reset(v);
      // Exclude v: continue the loop with v removed.
    }
    if (chosen_count > best_count_) {
      best_ = chosen;
      best_count_ = chosen_count;
    }
  }

  int s_;
  std::size_t n_;
  std::vector<DynBitset> adj_;
  DynBitset best_;
  std::size_t best_count_ = 0;
};

}  // namespace

AlphaCertificate alpha_s_exact(const SimpleGraph& g, int s, int guard) {
  if (s < 2) throw Error(ErrorCode::bad_param, "s must be >= 2");
  if (g.num_vertices() > guard)
    throw Error(ErrorCode::size_limit, "exact alpha_s limited to n <= " + std::to_string(guard));
  AlphaCertificate c;
  c.kind = CertificateKind::exact;
  c.s = s;
  if (g.num_vertices() > 0) {
    AlphaSearch search(g, s);
    c.witness = search.run();
  }
  c.value = static_cast<int>(c.witness.size());
  if (!is_ks_free(g, c.witness, s)) throw Error(ErrorCode::mismatch, "alpha witness contains K_s");
  return c;
}

AlphaCertificate alpha_s_probe(const SimpleGraph& g, int s, int alpha, int trials, std::uint64_t seed) {
  if (s < 2) throw Error(ErrorCode::bad_param, "s must be >= 2");
  if (alpha < 0 || alpha > g.num_vertices()) throw Error(ErrorCode::bad_param, "alpha must lie in [0, n]");
  if (trials < 1) throw Error(ErrorCode::bad_param, "trials must be >= 1");
  AlphaCertificate c;
  c.kind = CertificateKind::statistical;
  c.s = s;
  c.value = alpha;
  c.trials = trials;
  c.seed = seed;
  const auto adj = g.adjacency_bits();
  const auto n = static_cast<std::size_t>(g.num_vertices());
  for (int i = 0; i < trials; ++i) {
    StreamRng rng(seed, StreamKind::alpha_probe, static_cast<std::uint64_t>(i));
    auto subset = rng.sample_without_replacement(g.num_vertices(), alpha);
    if (has_clique_in(adj, bitset_of(n, subset), s)) continue;
    ++c.failures;
    if (c.failure_witnesses.size() < 10) {
      std::sort(subset.begin(), subset.end());
      c.failure_witnesses.push_back(std::move(subset));
    }
  }
  return c;
}

double probe_union_bound_log(double q, double lambda, int s, double p, double alpha) {
  return 2.0 * alpha * std::log(q) + 3.0 * std::log(static_cast<double>(s)) * lambda * q -
         lambda * alpha * p / (2.0 * s);
}

}  // namespace rtlab::analysis
