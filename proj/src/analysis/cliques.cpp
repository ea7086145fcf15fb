#include "rtlab/analysis/cliques.hpp"

#include <algorithm>
#include <string>

#include "rtlab/error.hpp"

namespace rtlab::analysis {

using graph::SimpleGraph;

std::string_view to_string(CliqueMode mode) {
  switch (mode) {
    case CliqueMode::exists: return "exists";
    case CliqueMode::count: return "count";
    case CliqueMode::enumerate: return "enumerate";
  }
  return "exists";
}

CliqueMode clique_mode_from_string(std::string_view name) {
  if (name == "exists") return CliqueMode::exists;
  if (name == "count") return CliqueMode::count;
  if (name == "enumerate") return CliqueMode::enumerate;
  throw Error(ErrorCode::bad_mode, "unknown clique mode '" + std::string(name) + "'");
}

DynBitset bitset_of(std::size_t n, std::span<const int> members) {
  DynBitset b(n);
  for (int v : members) b.set(static_cast<std::size_t>(v));
  return b;
}

namespace {

// Visits cliques of size `need` inside P (extending `current`) in ascending
// vertex order. Each clique is seen once. Stops when visit returns false.
template <typename Visit>
bool extend(const std::vector<DynBitset>& adj, DynBitset p, int need, std::vector<int>& current, Visit& visit) {
  if (need == 0) return visit(current);
  if (p.count() < static_cast<std::size_t>(need)) return true;
  for (std::size_t v = p.find_first(); v < p.size(); v = p.find_next_from(v + 1)) {
    p.reset(v);
    current.push_back(static_cast<int>(v));
    if (need == 1) {
      if (!visit(current)) return false;
    } else {
      DynBitset next = p;
      next &= adj[v];
      if (!extend(adj, std::move(next), need - 1, current, visit)) return false;
    }
    current.pop_back();
    if (p.count() < static_cast<std::size_t>(need)) break;
  }
  return true;
}

}  // namespace

std::optional<std::vector<int>> find_clique_in(const std::vector<DynBitset>& adj, const DynBitset& candidates,
                                               int t) {
  if (t <= 0) return std::vector<int>{};
  std::vector<int> current;
  std::optional<std::vector<int>> found;
  auto visit = [&](const std::vector<int>& c) {
    found = c;
    return false;
  };
  extend(adj, candidates, t, current, visit);
  return found;
}

bool has_clique_in(const std::vector<DynBitset>& adj, const DynBitset& candidates, int t) {
  return find_clique_in(adj, candidates, t).has_value();
}

std::vector<int> degeneracy_order(const SimpleGraph& g) {
  const int n = g.num_vertices();
  auto deg = g.degrees();
  const auto lists = g.adjacency_lists();
  const int maxd = n == 0 ? 0 : *std::max_element(deg.begin(), deg.end());
  std::vector<std::vector<int>> buckets(static_cast<std::size_t>(maxd) + 1);
  for (int v = 0; v < n; ++v) buckets[static_cast<std::size_t>(deg[static_cast<std::size_t>(v)])].push_back(v);
  std::vector<char> removed(static_cast<std::size_t>(n), 0);
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  std::size_t d = 0;
  while (static_cast<int>(order.size()) < n) {
    d = 0;
    while (true) {
      auto& bucket = buckets[d];
      while (!bucket.empty()) {
        const int v = bucket.back();
        // Lazy deletion: skip stale bucket entries.
        if (removed[static_cast<std::size_t>(v)] || static_cast<std::size_t>(deg[static_cast<std::size_t>(v)]) != d) {
          bucket.pop_back();
          continue;
        }
        break;
      }
      if (!bucket.empty()) break;
      ++d;
    }
    const int v = buckets[d].back();
    buckets[d].pop_back();
    removed[static_cast<std::size_t>(v)] = 1;
    order.push_back(v);
    for (int u : lists[static_cast<std::size_t>(v)]) {
      const auto uu = static_cast<std::size_t>(u);
      if (removed[uu]) continue;
      --deg[uu];
      buckets[static_cast<std::size_t>(deg[uu])].push_back(u);
    }
  }
  return order;
}

CliqueResult find_clique(const SimpleGraph& g, int t, CliqueMode mode, CliqueLimits limits) {
  if (t < 1) throw Error(ErrorCode::bad_param, "clique size must be >= 1");
  const int n = g.num_vertices();
  const auto un = static_cast<std::size_t>(n);
  CliqueResult res;
  if (mode == CliqueMode::exists) {
    DynBitset all(un);
    for (std::size_t v = 0; v < un; ++v) all.set(v);
    if (auto w = find_clique_in(g.adjacency_bits(), all, t)) {
      res.exists = true;
      res.witness = std::move(*w);
    }
    return res;
  }
  if (n > limits.max_vertices || t > limits.max_t)
    throw Error(ErrorCode::size_limit, "clique " + std::string(to_string(mode)) + " limited to n <= " +
                                           std::to_string(limits.max_vertices) + ", t <= " +
                                           std::to_string(limits.max_t));
  // Relabel so that each vertex's later neighbors number at most the degeneracy.
  const auto order = degeneracy_order(g);
  std::vector<int> pos(un);
  for (std::size_t i = 0; i < un; ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  std::vector<DynBitset> adj(un, DynBitset(un));
  for (const auto& [u, v] : g.edges()) {
    adj[static_cast<std::size_t>(pos[static_cast<std::size_t>(u)])].set(static_cast<std::size_t>(pos[static_cast<std::size_t>(v)]));
    adj[static_cast<std::size_t>(pos[static_cast<std::size_t>(v)])].set(static_cast<std::size_t>(pos[static_cast<std::size_t>(u)]));
  }
  DynBitset all(un);
  for (std::size_t v = 0; v < un; ++v) all.set(v);
  std::vector<int> current;
  const bool keep = mode == CliqueMode::enumerate;
  auto visit = [&](const std::vector<int>& c) {
    ++res.count;
    if (keep) {
      std::vector<int> orig;
      orig.reserve(c.size());
      for (int x : c) orig.push_back(order[static_cast<std::size_t>(x)]);
      std::sort(orig.begin(), orig.end());
      res.cliques.push_back(std::move(orig));
    }
    return true;
  };
  extend(adj, all, t, current, visit);
  res.exists = res.count > 0;
  if (keep) {
    std::sort(res.cliques.begin(), res.cliques.end());
    if (!res.cliques.empty()) res.witness = res.cliques.front();
  } else if (res.exists) {
    res.witness = *find_clique_in(g.adjacency_bits(), all, t);
  }
  return res;
}

namespace {

struct MaxCliqueSearch {
  const std::vector<DynBitset>& adj;
  std::vector<int> best;
  std::vector<int> current;

  void expand(DynBitset p) {
    // Greedy coloring of P gives an upper bound on any clique inside it.
    std::vector<int> verts = p.to_vector();
    std::vector<int> color(verts.size(), 0);
    std::vector<DynBitset> classes;
    for (std::size_t i = 0; i < verts.size(); ++i) {
      const auto v = static_cast<std::size_t>(verts[i]);
      std::size_t c = 0;
      for (; c < classes.size(); ++c)
        if (classes[c].intersection_count(adj[v]) == 0) break;
      if (c == classes.size()) classes.emplace_back(p.size());
      classes[c].set(v);
      color[i] = static_cast<int>(c) + 1;
    }
    // Visit vertices in decreasing color so the bound tightens as P shrinks.
    std::vector<std::size_t> idx(verts.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return color[a] < color[b]; });
    for (std::size_t k = idx.size(); k-- > 0;) {
      const std::size_t i = idx[k];
      if (current.size() + static_cast<std::size_t>(color[i]) <= best.size()) return;
      const auto v = static_cast<std::size_t>(verts[i]);
      current.push_back(verts[i]);
      DynBitset next = p;
      next &= adj[v];
      if (next.none()) {
        if (current.size() > best.size()) best = current;
      } else {
        expand(std::move(next));
      }
      current.pop_back();
      p.reset(v);
    }
  }
};

}  // namespace

int clique_number(const SimpleGraph& g, std::vector<int>* witness) {
  const auto un = static_cast<std::size_t>(g.num_vertices());
  if (un == 0) {
    if (witness) witness->clear();
    return 0;
  }
  const auto adj = g.adjacency_bits();
  MaxCliqueSearch search{adj, {}, {}};
  DynBitset all(un);
  for (std::size_t v = 0; v < un; ++v) all.set(v);
  search.expand(all);
  std::sort(search.best.begin(), search.best.end());
  if (witness) *witness = search.best;
  return static_cast<int>(search.best.size());
}

bool is_clique(const SimpleGraph& g, std::span<const int> vertices) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    for (std::size_t j = i + 1; j < vertices.size(); ++j)
      if (!g.has_edge(vertices[i], vertices[j])) return false;
  return true;
}

}  // namespace rtlab::analysis
