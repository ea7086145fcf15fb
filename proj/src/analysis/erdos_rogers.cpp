#include "rtlab/analysis/erdos_rogers.hpp"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "rtlab/error.hpp"

namespace rtlab::analysis {

namespace {

using Mask = std::uint32_t;

bool has_clique(const std::vector<Mask>& adj, Mask cand, int size) {
  if (size <= 0) return true;
  if (std::popcount(cand) < size) return false;
  while (cand != 0) {
    const int v = std::countr_zero(cand);
    cand &= cand - 1;
    if (has_clique(adj, cand & adj[static_cast<std::size_t>(v)], size - 1)) return true;
  }
  return false;
}

class Search {
 public:
  Search(int s, int t, int n, int k) : s_(s), t_(t), n_(n), k_(k), adj_(static_cast<std::size_t>(n), 0) {}

  bool run() { return grow(0); }
  const std::vector<Mask>& adjacency() const { return adj_; }
  long long nodes() const { return nodes_; }

 private:
  bool grow(int v) {
    ++nodes_;
    if (v == n_) return true;
    // K_s-free subsets of the prefix with exactly k vertices.
    std::vector<Mask> free_k;
    const Mask full = v == 0 ? 0 : ((Mask{1} << v) - 1);
    if (k_ <= v) {
      for (Mask m = 0; m <= full; ++m)
        if (std::popcount(m) == k_ && !has_clique(adj_, m, s_)) free_k.push_back(m);
    }
    for (Mask nb = 0; nb <= full; ++nb) {
      if (has_clique(adj_, nb, t_ - 1)) continue;
      bool ok = true;
      for (Mask set : free_k)
        if (!has_clique(adj_, nb & set, s_ - 1)) {
          ok = false;
          break;
        }
      if (!ok) continue;
      adj_[static_cast<std::size_t>(v)] = nb;
      for (int u = 0; u < v; ++u)
        if (nb >> u & 1U) adj_[static_cast<std::size_t>(u)] |= Mask{1} << v;
      if (grow(v + 1)) return true;
      for (int u = 0; u < v; ++u) adj_[static_cast<std::size_t>(u)] &= ~(Mask{1} << v);
      adj_[static_cast<std::size_t>(v)] = 0;
    }
    return false;
  }

  int s_, t_, n_, k_;
  std::vector<Mask> adj_;
  long long nodes_ = 0;
};

}  // namespace

ErdosRogersResult erdos_rogers_exact(int s, int t, int n, int guard) {
  if (s < 2 || t <= s || n < 1) throw Error(ErrorCode::bad_param, "need 2 <= s < t and n >= 1");
  if (n > guard) throw Error(ErrorCode::size_limit, "exhaustive Erdos-Rogers search limited to n <= " + std::to_string(guard));
  ErdosRogersResult res;
  // Any s-1 vertices are K_s-free, so the value is at least min(n, s-1).
  for (int k = std::min(n, s - 1); k <= n; ++k) {
    Search search(s, t, n, k);
    const bool found = search.run();
    res.nodes += search.nodes();
    if (!found) continue;
    std::vector<graph::Edge> edges;
    const auto& adj = search.adjacency();
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (adj[static_cast<std::size_t>(u)] >> v & 1U) edges.emplace_back(u, v);
    res.value = k;
    res.extremal = graph::SimpleGraph(n, std::move(edges), {{"kind", "erdos-rogers-extremal"}, {"s", s}, {"t", t}});
    return res;
  }
  throw Error(ErrorCode::mismatch, "no graph reached alpha_s <= n");
}

}  // namespace rtlab::analysis
