// Brute-force reference implementations used to cross-check the library.
// They work from edge lists and point coordinates only and share no code with
// the search routines they check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "rtlab/geometry/incidence.hpp"
#include "rtlab/graph/simple_graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<char>>;

inline Matrix adjacency(const rtlab::graph::SimpleGraph& g) {
  Matrix m(g.num_vertices(), std::vector<char>(g.num_vertices(), 0));
  for (const auto& [u, v] : g.edges()) m[u][v] = m[v][u] = 1;
  return m;
}

inline bool is_clique(const Matrix& m, const std::vector<int>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!m[vs[i]][vs[j]]) return false;
  return true;
}

// Visits every k-subset of {0..n-1} in lexicographic order.
template <typename F>
void subsets(int n, int k, F&& f) {
  if (k > n || k < 0) return;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline long long clique_count(const rtlab::graph::SimpleGraph& g, int t) {
  const auto m = adjacency(g);
  long long c = 0;
  subsets(g.num_vertices(), t, [&](const std::vector<int>& s) { c += is_clique(m, s) ? 1 : 0; });
  return c;
}

inline bool has_clique(const Matrix& m, const std::vector<int>& within, int t) {
  bool found = false;
  subsets(static_cast<int>(within.size()), t, [&](const std::vector<int>& idx) {
    if (found) return;
    std::vector<int> vs;
    for (int i : idx) vs.push_back(within[i]);
    found = is_clique(m, vs);
  });
  return found;
}

// Largest vertex set with no K_s, by enumerating all subsets (n <= 20).
inline int alpha_s(const rtlab::graph::SimpleGraph& g, int s) {
  const auto m = adjacency(g);
  const int n = g.num_vertices();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = __builtin_popcount(mask);
    if (size <= best) continue;
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1u) vs.push_back(v);
    if (!has_clique(m, vs, s)) best = size;
  }
  return best;
}

// Classical independence number by the textbook branching recursion (n <= 32).
inline int independence_number(const rtlab::graph::SimpleGraph& g) {
  const int n = g.num_vertices();
  std::vector<std::uint64_t> nb(n, 0);
  for (const auto& [u, v] : g.edges()) {
    nb[u] |= 1ull << v;
    nb[v] |= 1ull << u;
  }
  auto rec = [&](auto&& self, std::uint64_t mask) -> int {
    if (mask == 0) return 0;
    const int v = __builtin_ctzll(mask);
    const std::uint64_t rest = mask & ~(1ull << v);
    if ((nb[v] & mask) == 0) return 1 + self(self, rest);
    return std::max(self(self, rest), 1 + self(self, rest & ~nb[v]));
  };
  return rec(rec, n == 64 ? ~0ull : (1ull << n) - 1);
}

inline rtlab::graph::SimpleGraph random_graph(int n, double p, std::mt19937_64& gen) {
  std::bernoulli_distribution coin(p);
  std::vector<rtlab::graph::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(gen)) edges.emplace_back(u, v);
  return rtlab::graph::SimpleGraph(n, edges);
}

// Graph on n vertices whose edges are the set bits of `code` over pairs in
// lexicographic order.
inline rtlab::graph::SimpleGraph graph_from_code(int n, std::uint64_t code) {
  std::vector<rtlab::graph::Edge> edges;
  int bit = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if (code >> bit & 1ull) edges.emplace_back(u, v);
  return rtlab::graph::SimpleGraph(n, edges);
}

// min alpha_s over K_t-free graphs on n vertices, over every labelled graph.
inline int erdos_rogers(int s, int t, int n) {
  const int pairs = n * (n - 1) / 2;
  int best = n;
  for (std::uint64_t code = 0; code < (1ull << pairs); ++code) {
    const auto g = graph_from_code(n, code);
    if (clique_count(g, t) > 0) continue;
    best = std::min(best, alpha_s(g, s));
  }
  return best;
}

// Points are (x, y) with index x*q + y. Collinearity in AG(2, q) by the
// determinant test.
inline bool collinear(int q, int a, int b, int c) {
  const long long x1 = a / q, y1 = a % q, x2 = b / q, y2 = b % q, x3 = c / q, y3 = c % q;
  const long long det = (x2 - x1) * (y3 - y1) - (y2 - y1) * (x3 - x1);
  return ((det % q) + q) % q == 0;
}

inline int lines_through(const rtlab::geometry::IncidenceStructure& s, int u, int v) {
  int c = 0;
  for (const auto& line : s.lines())
    c += (std::binary_search(line.begin(), line.end(), u) && std::binary_search(line.begin(), line.end(), v)) ? 1 : 0;
  return c;
}

inline int meet(const rtlab::geometry::Line& line, const std::vector<int>& pts) {
  int c = 0;
  for (int p : pts) c += std::binary_search(line.begin(), line.end(), p) ? 1 : 0;
  return c;
}

inline bool complete_set(const rtlab::geometry::IncidenceStructure& s, const std::vector<int>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (lines_through(s, pts[i], pts[j]) == 0) return false;
  return true;
}

// Dangerous sets straight from the definitions, by scanning all point subsets.
inline std::vector<std::vector<int>> dangerous_type1(const rtlab::geometry::IncidenceStructure& s, int a) {
  std::vector<std::vector<int>> out;
  subsets(s.num_points(), a, [&](const std::vector<int>& pts) {
    for (const auto& line : s.lines())
      if (meet(line, pts) >= 3) return;
    if (complete_set(s, pts)) out.push_back(pts);
  });
  return out;
}

inline std::vector<std::vector<int>> dangerous_type2(const rtlab::geometry::IncidenceStructure& s, int b, int r) {
  std::vector<std::vector<int>> out;
  subsets(s.num_points(), b, [&](const std::vector<int>& pts) {
    bool spine = false;
    for (const auto& line : s.lines())
      if (meet(line, pts) == b - r) spine = true;
    if (spine && complete_set(s, pts)) out.push_back(pts);
  });
  return out;
}

// Point-line incidences over the lines meeting pts in at least two points.
inline long long incidences(const rtlab::geometry::IncidenceStructure& s, const std::vector<int>& pts) {
  long long c = 0;
  for (const auto& line : s.lines()) {
    const int k = meet(line, pts);
    if (k >= 2) c += k;
  }
  return c;
}

inline double mean(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return v.empty() ? 0.0 : s / static_cast<double>(v.size());
}

// Least-squares slope via the normal equations.
inline double ols_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double mx = mean(x), my = mean(y);
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    num += (x[i] - mx) * (y[i] - my);
    den += (x[i] - mx) * (x[i] - mx);
  }
  return num / den;
}

}  // namespace oracle
