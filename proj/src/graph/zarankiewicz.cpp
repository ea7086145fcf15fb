#include "rtlab/graph/zarankiewicz.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "rtlab/error.hpp"
#include "rtlab/geometry/prime_field.hpp"

namespace rtlab::graph {

namespace {

using Vec3 = std::array<int, 3>;

std::vector<Vec3> projective_points_pg2(const geometry::PrimeField& f) {
  const int q = f.modulus();
  std::vector<Vec3> pts;
  for (int y = 0; y < q; ++y)
    for (int z = 0; z < q; ++z) pts.push_back({1, y, z});
  for (int z = 0; z < q; ++z) pts.push_back({0, 1, z});
  pts.push_back({0, 0, 1});
  std::sort(pts.begin(), pts.end());
  return pts;
}

// True if some `need`-subset of `rows` (each a bitset over the right side,
// restricted to `within`) has at least `need` common members.
bool has_complete_block(const std::vector<int>& rows, const std::vector<DynBitset>& adj, const DynBitset& within,
                        int need) {
  if (need <= 0) return true;
  std::vector<int> chosen;
  auto dfs = [&](auto&& self, std::size_t start, const DynBitset& common) -> bool {
    if (static_cast<int>(chosen.size()) == need) return true;
    for (std::size_t i = start; i < rows.size(); ++i) {
      if (rows.size() - i < static_cast<std::size_t>(need) - chosen.size()) return false;
      DynBitset next = common;
      next &= adj[static_cast<std::size_t>(rows[i])];
      if (next.count() < static_cast<std::size_t>(need)) continue;
      chosen.push_back(rows[i]);
      if (self(self, i + 1, next)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return dfs(dfs, 0, within);
}

}  // namespace

BipartiteGraph projective_plane_incidence(int q) {
  const geometry::PrimeField f(q);
  const auto pts = projective_points_pg2(f);
  BipartiteGraph b;
  b.left_count = b.right_count = static_cast<int>(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < pts.size(); ++j) {
      int dot = 0;
      for (int c = 0; c < 3; ++c) dot = f.add(dot, f.mul(pts[i][c], pts[j][c]));
      if (dot == 0) b.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
  b.normalize();
  return b;
}

ZarankiewiczResult build_zarankiewicz_bipartite(int n, int s) {
  if (n < 1 || s < 2) throw Error(ErrorCode::bad_param, "need n >= 1 and s >= 2");
  ZarankiewiczResult out;
  if (s == 2) {
    for (int q = 2; q * q + q + 1 <= n; ++q)
      if (q * q + q + 1 == n && geometry::is_prime(static_cast<std::uint64_t>(q))) {
        out.graph = projective_plane_incidence(q);
        out.method = "projective-plane";
      }
  }
  if (out.method.empty()) {
    if (n > kGreedyBipartiteGuard)
      throw Error(ErrorCode::size_limit, "greedy construction limited to n <= " + std::to_string(kGreedyBipartiteGuard));
    const auto un = static_cast<std::size_t>(n);
    std::vector<DynBitset> left(un, DynBitset(un));   // left -> right neighbors
    std::vector<DynBitset> right(un, DynBitset(un));  // right -> left neighbors
    BipartiteGraph b;
    b.left_count = b.right_count = n;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        // A K_{s,s} through (u, v) is a K_{s-1,s-1} between N(v) and N(u).
        const auto rows = right[static_cast<std::size_t>(v)].to_vector();
        if (static_cast<int>(rows.size()) >= s - 1 &&
            static_cast<int>(left[static_cast<std::size_t>(u)].count()) >= s - 1 &&
            has_complete_block(rows, left, left[static_cast<std::size_t>(u)], s - 1))
          continue;
        left[static_cast<std::size_t>(u)].set(static_cast<std::size_t>(v));
        right[static_cast<std::size_t>(v)].set(static_cast<std::size_t>(u));
        b.edges.emplace_back(u, v);
      }
    b.normalize();
    out.graph = std::move(b);
    out.method = "greedy";
  }
  if (n <= kExhaustiveBipartiteGuard) {
    if (find_kss(out.graph, s)) throw Error(ErrorCode::mismatch, "constructed block contains K_{s,s}");
    out.verified = true;
  }
  return out;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> find_kss(const BipartiteGraph& b, int s, int guard) {
  if (b.left_count > guard || b.right_count > guard)
    throw Error(ErrorCode::size_limit, "exhaustive K_{s,s} search limited to " + std::to_string(guard) + " per side");
  const auto adj = b.left_adjacency();
  std::vector<int> chosen;
  std::optional<std::pair<std::vector<int>, std::vector<int>>> found;
  auto dfs = [&](auto&& self, int start, const DynBitset& common) -> bool {
    if (static_cast<int>(chosen.size()) == s) {
      auto right = common.to_vector();
      right.resize(static_cast<std::size_t>(s));
      found.emplace(chosen, std::move(right));
      return true;
    }
    for (int u = start; u < b.left_count; ++u) {
      if (b.left_count - u < s - static_cast<int>(chosen.size())) return false;
      DynBitset next = common;
      next &= adj[static_cast<std::size_t>(u)];
      if (next.count() < static_cast<std::size_t>(s)) continue;
      chosen.push_back(u);
      if (self(self, u + 1, next)) return true;
      chosen.pop_back();
    }
    return false;
  };
  DynBitset all(static_cast<std::size_t>(b.right_count));
  for (int v = 0; v < b.right_count; ++v) all.set(static_cast<std::size_t>(v));
  dfs(dfs, 0, all);
  return found;
}

BipartiteGraph restrict_bipartite(const BipartiteGraph& b, int left, int right) {
  BipartiteGraph out;
  out.left_count = std::min(left, b.left_count);
  out.right_count = std::min(right, b.right_count);
  for (const auto& [l, r] : b.edges)
    if (l < out.left_count && r < out.right_count) out.edges.emplace_back(l, r);
  return out;
}

}  // namespace rtlab::graph
