#include "rtlab/graph/partite.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rtlab/error.hpp"
#include "rtlab/hash.hpp"
#include "rtlab/rng.hpp"

namespace rtlab::graph {

using geometry::IncidenceStructure;
using geometry::StructureKind;

std::uint64_t structure_fingerprint(const IncidenceStructure& hx) {
  std::uint64_t h = fnv1a64(geometry::to_string(hx.kind()));
  h = fnv1a64_mix(static_cast<std::uint64_t>(hx.num_points()), h);
  h = fnv1a64_mix(hx.num_lines(), h);
  for (const auto& line : hx.lines()) {
    h = fnv1a64_mix(line.size(), h);
    for (int p : line) h = fnv1a64_mix(static_cast<std::uint64_t>(p), h);
  }
  return h;
}

int class_from_draw(double u, int s, double p) noexcept {
  if (!(u < p)) return kIsolated;
  const auto c = 1 + static_cast<int>(std::floor(u * s / p));
  return std::min(c, s);
}

namespace {

void check_s(int s) {
  if (s < 2) throw Error(ErrorCode::bad_param, "s must be >= 2");
}

PartitionAssignment draw(const IncidenceStructure& hx, int s, double p, std::uint64_t seed, bool uniform) {
  PartitionAssignment a;
  a.s = s;
  a.p = p;
  a.seed = seed;
  a.uniform = uniform;
  a.structure_fingerprint = structure_fingerprint(hx);
  const CounterRng rng(seed, uniform ? StreamKind::quadrangle_color : StreamKind::line_color);
  a.classes.resize(hx.num_lines());
  for (std::size_t l = 0; l < hx.num_lines(); ++l) {
    const auto& line = hx.line(l);
    auto& cls = a.classes[l];
    cls.reserve(line.size());
    for (int v : line) {
      const double u = rng.uniform(l, static_cast<std::uint64_t>(v));
      cls.push_back(uniform ? std::min(s, 1 + static_cast<int>(std::floor(u * s))) : class_from_draw(u, s, p));
    }
  }
  return a;
}

long long line_pairs(const std::vector<int>& cls) {
  long long total = 0;
  for (std::size_t i = 0; i < cls.size(); ++i)
    for (std::size_t j = i + 1; j < cls.size(); ++j)
      if (cls[i] != kIsolated && cls[j] != kIsolated && cls[i] != cls[j]) ++total;
  return total;
}

}  // namespace

PartitionAssignment color_lines(const IncidenceStructure& hx, int s, double p, std::uint64_t seed) {
  check_s(s);
  if (!(p > 0.0 && p <= 1.0)) throw Error(ErrorCode::bad_param, "p must lie in (0, 1]");
  return draw(hx, s, p, seed, false);
}

PartitionAssignment color_lines_uniform(const IncidenceStructure& hx, int s, std::uint64_t seed) {
  check_s(s);
  return draw(hx, s, 1.0, seed, true);
}

SimpleGraph build_partite_graph(const IncidenceStructure& hx, const PartitionAssignment& a) {
  if (a.structure_fingerprint != structure_fingerprint(hx) || a.classes.size() != hx.num_lines())
    throw Error(ErrorCode::mismatch, "partition assignment was not produced for this structure");
  std::vector<Edge> edges;
  for (std::size_t l = 0; l < hx.num_lines(); ++l) {
    const auto& line = hx.line(l);
    const auto& cls = a.classes[l];
    if (cls.size() != line.size()) throw Error(ErrorCode::mismatch, "line " + std::to_string(l) + " size differs");
    for (std::size_t i = 0; i < line.size(); ++i)
      for (std::size_t j = i + 1; j < line.size(); ++j)
        if (cls[i] != kIsolated && cls[j] != kIsolated && cls[i] != cls[j]) edges.emplace_back(line[i], line[j]);
  }
  std::string kind = "partite";
  if (hx.kind() == StructureKind::sampled_h1) kind = "G1";
  if (hx.kind() == StructureKind::sampled_h2) kind = "G2";
  if (hx.kind() == StructureKind::quadrangle) kind = "GQ";
  nlohmann::json prov = {{"kind", kind},
                         {"source", geometry::to_string(hx.kind())},
                         {"points", hx.num_points()},
                         {"lines", hx.num_lines()},
                         {"s", a.s},
                         {"p", a.p},
                         {"seed", a.seed}};
  // Distinct lines share at most one point in a linear structure, so a
  // repeated pair means the input was not linear.
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw Error(ErrorCode::bad_inputs, "two lines share a pair of points");
  return SimpleGraph(hx.num_points(), std::move(edges), std::move(prov));
}

SimpleGraph build_gq_graph(const IncidenceStructure& gq, int s, std::uint64_t seed) {
  if (gq.kind() != StructureKind::quadrangle)
    throw Error(ErrorCode::bad_tag, "expected a quadrangle, got " + std::string(geometry::to_string(gq.kind())));
  return build_partite_graph(gq, color_lines_uniform(gq, s, seed));
}

std::vector<long long> per_line_edge_counts(const PartitionAssignment& a) {
  std::vector<long long> out;
  out.reserve(a.classes.size());
  for (const auto& cls : a.classes) out.push_back(line_pairs(cls));
  return out;
}

VerificationReport verify_partite_structure(const IncidenceStructure& hx, const PartitionAssignment& a,
                                            const SimpleGraph& g) {
  VerificationReport rep;
  rep.property = "partite-structure";
  rep.params = {{"s", a.s}, {"p", a.p}, {"seed", a.seed}};
  const auto point_lines = hx.point_lines();

  int bad_edge = -1;
  for (std::size_t e = 0; e < g.num_edges() && bad_edge < 0; ++e) {
    const auto [u, v] = g.edges()[e];
    const auto& lu = point_lines[static_cast<std::size_t>(u)];
    const auto& lv = point_lines[static_cast<std::size_t>(v)];
    std::vector<int> common;
    std::set_intersection(lu.begin(), lu.end(), lv.begin(), lv.end(), std::back_inserter(common));
    if (common.size() != 1) bad_edge = static_cast<int>(e);
  }
  if (bad_edge >= 0) {
    const auto [u, v] = g.edges()[static_cast<std::size_t>(bad_edge)];
    rep.add_check("edge-in-one-line", Status::fail, {{"edge", {u, v}}});
  } else {
    rep.add_check("edge-in-one-line", Status::pass);
  }

  long long expected_total = 0;
  int bad_line = -1;
  for (std::size_t l = 0; l < hx.num_lines() && bad_line < 0; ++l) {
    const auto& line = hx.line(l);
    const auto& cls = a.classes.at(l);
    for (std::size_t i = 0; i < line.size() && bad_line < 0; ++i)
      for (std::size_t j = i + 1; j < line.size(); ++j) {
        const bool want = cls[i] != kIsolated && cls[j] != kIsolated && cls[i] != cls[j];
        if (want != g.has_edge(line[i], line[j])) {
          bad_line = static_cast<int>(l);
          break;
        }
        expected_total += want ? 1 : 0;
      }
  }
  if (bad_line >= 0)
    rep.add_check("line-multipartite", Status::fail,
                  {{"line", bad_line}, {"points", hx.line(static_cast<std::size_t>(bad_line))},
                   {"classes", a.classes[static_cast<std::size_t>(bad_line)]}});
  else if (expected_total != static_cast<long long>(g.num_edges()))
    rep.add_check("line-multipartite", Status::fail,
                  {{"expected_edges", expected_total}, {"edges", g.num_edges()}});
  else
    rep.add_check("line-multipartite", Status::pass, {{"edges", expected_total}});
  rep.value = {{"edges", g.num_edges()}};
  rep.settle();
  return rep;
}

}  // namespace rtlab::graph
