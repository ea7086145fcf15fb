#include "rtlab/analysis/containment.hpp"

#include <chrono>

#include "rtlab/combinatorics.hpp"
#include "rtlab/error.hpp"
#include "rtlab/hypergraph/dangerous.hpp"

namespace rtlab::analysis {

using geometry::IncidenceStructure;
using geometry::PairIndex;

VerificationReport check_clique_dangerous_containment(const graph::SimpleGraph& g, const IncidenceStructure& hx,
                                                      int s, int r, int a, int b, CliqueLimits limits) {
  const auto start = std::chrono::steady_clock::now();
  if (s < 2 || r < 1) throw Error(ErrorCode::bad_param, "need s >= 2 and r >= 1");
  if (g.num_vertices() != hx.num_points())
    throw Error(ErrorCode::mismatch, "graph and structure have different vertex counts");
  VerificationReport rep;
  rep.property = "clique-dangerous-containment";
  rep.params = {{"s", s}, {"r", r}, {"a", a}, {"b", b}};

  const auto cliques = find_clique(g, s + r, CliqueMode::enumerate, limits).cliques;
  const PairIndex pairs(hx);
  long long type1_hits = 0, type2_hits = 0, single_line = 0;
  nlohmann::json first_violation, first_single;
  long long violations = 0;

  for (const auto& clique : cliques) {
    bool in_one_line = false;
    for (std::size_t l = 0; l < hx.num_lines() && !in_one_line; ++l) {
      bool all = true;
      for (int v : clique)
        if (!hx.contains(l, v)) {
          all = false;
          break;
        }
      in_one_line = all;
    }
    if (in_one_line) {
      if (single_line++ == 0) first_single = {{"clique", clique}};
      continue;
    }
    bool hit = false;
    if (a >= 3 && a <= static_cast<int>(clique.size())) {
      for_each_combination(std::span<const int>(clique), static_cast<std::size_t>(a), [&](std::span<const int> sub) {
        if (hypergraph::is_type1(hx, pairs, sub)) {
          hit = true;
          return false;
        }
        return true;
      });
      if (hit) ++type1_hits;
    }
    if (!hit && b > r && b <= static_cast<int>(clique.size())) {
      for_each_combination(std::span<const int>(clique), static_cast<std::size_t>(b), [&](std::span<const int> sub) {
        if (hypergraph::as_type2(hx, pairs, sub, r)) {
          hit = true;
          return false;
        }
        return true;
      });
      if (hit) ++type2_hits;
    }
    if (!hit) {
      if (violations++ == 0)
        first_violation = {{"clique", clique}, {"covering_lines", hypergraph::covering_lines(hx, clique)}};
    }
  }

  rep.add_check("single-line-cliques", single_line == 0 ? Status::pass : Status::fail,
                single_line == 0 ? nlohmann::json{{"count", 0}}
                                 : nlohmann::json{{"count", single_line}, {"first", first_single}});
  rep.add_check("containment", violations == 0 ? Status::pass : Status::fail,
                violations == 0 ? nlohmann::json{{"violations", 0}}
                                : nlohmann::json{{"violations", violations}, {"first", first_violation}});
  rep.value = {{"cliques", cliques.size()}, {"type1_hits", type1_hits}, {"type2_hits", type2_hits}};
  if (violations > 0)
    rep.witness = first_violation;
  else if (single_line > 0)
    rep.witness = first_single;
  rep.settle();
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace rtlab::analysis
