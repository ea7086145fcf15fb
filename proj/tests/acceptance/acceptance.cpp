// Acceptance suite: one PASS/FAIL line per criterion, each with a wall-clock
// limit. Exit status is nonzero if any criterion fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"
#include "rtlab/analysis/alpha.hpp"
#include "rtlab/analysis/cliques.hpp"
#include "rtlab/analysis/containment.hpp"
#include "rtlab/analysis/drc.hpp"
#include "rtlab/analysis/erdos_rogers.hpp"
#include "rtlab/error.hpp"
#include "rtlab/geometry/affine_plane.hpp"
#include "rtlab/geometry/quadrangle.hpp"
#include "rtlab/graph/compose.hpp"
#include "rtlab/graph/partite.hpp"
#include "rtlab/graph/zarankiewicz.hpp"
#include "rtlab/harness/config.hpp"
#include "rtlab/harness/experiment.hpp"
#include "rtlab/hypergraph/dangerous.hpp"
#include "rtlab/hypergraph/sampling.hpp"
#include "rtlab/io/formats.hpp"
#include "rtlab/params/bounds.hpp"
#include "rtlab/params/construction.hpp"

using namespace rtlab;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects failures; the first few are kept for the report line.
struct Tally {
  int checked = 0;
  int failed = 0;
  std::string first;
  void expect(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    if (failed++ == 0) first = what;
  }
  Outcome outcome(const std::string& summary) const {
    std::ostringstream os;
    os << summary << "; " << checked << " checks";
    if (failed) os << ", " << failed << " failed, first: " << first;
    return {failed == 0, os.str()};
  }
};

geometry::IncidenceStructure remnant(int q) {
  return geometry::remove_parallel_class(geometry::build_affine_plane(q), geometry::vertical_class_index(q));
}

std::vector<std::vector<int>> vertex_sets(const std::vector<hypergraph::DangerousSet>& sets) {
  std::vector<std::vector<int>> out;
  for (const auto& s : sets) out.push_back(s.vertices);
  return out;
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("rtlab_acceptance_" + name);
  fs::remove_all(dir);
  return dir;
}

Outcome geometry_exactness() {
  Tally t;
  for (int q : {2, 3, 5, 7, 11, 13}) {
    const auto plane = geometry::build_affine_plane(q);
    const auto& s = plane.structure;
    const int n = q * q;
    // Pair coverage counted line by line against the determinant test.
    std::vector<int> cover(static_cast<std::size_t>(n) * n, 0);
    bool collinear_lines = true;
    for (const auto& line : s.lines()) {
      for (std::size_t i = 0; i < line.size(); ++i) {
        for (std::size_t j = i + 1; j < line.size(); ++j) ++cover[line[i] * n + line[j]];
        if (i >= 2) collinear_lines &= oracle::collinear(q, line[0], line[1], line[i]);
      }
    }
    int bad_pairs = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) bad_pairs += cover[u * n + v] != 1;
    t.expect(bad_pairs == 0, "q=" + std::to_string(q) + " pairs not on exactly one line");
    t.expect(collinear_lines, "q=" + std::to_string(q) + " non-collinear line");
    t.expect(static_cast<int>(s.num_lines()) == q * q + q, "q=" + std::to_string(q) + " line count");
    const auto h = geometry::remove_parallel_class(plane, geometry::vertical_class_index(q));
    t.expect(static_cast<int>(h.num_lines()) == q * q, "q=" + std::to_string(q) + " remnant line count");
    std::vector<int> deg(n, 0);
    for (const auto& line : h.lines())
      for (int p : line) ++deg[p];
    t.expect(std::all_of(deg.begin(), deg.end(), [q](int d) { return d == q; }),
             "q=" + std::to_string(q) + " remnant not q-regular");
  }
  return t.outcome("AG(2,q) and remnant for q in {2,3,5,7,11,13}");
}

Outcome quadrangle_exactness() {
  Tally t;
  for (int q : {2, 3}) {
    const auto w = geometry::build_w_quadrangle(q);
    const int expected = (q * q + 1) * (q + 1);
    t.expect(w.num_points() == expected && static_cast<int>(w.num_lines()) == expected,
             "W(" + std::to_string(q) + ") size");
    const auto rep = geometry::verify_gq_axioms(w);
    t.expect(rep.status == Status::pass, "W(" + std::to_string(q) + ") axiom report");
    // Q1: q+1 points per line and q+1 lines per point.
    std::vector<int> deg(w.num_points(), 0);
    for (const auto& line : w.lines()) {
      t.expect(static_cast<int>(line.size()) == q + 1, "line size");
      for (int p : line) ++deg[p];
    }
    for (int d : deg) t.expect(d == q + 1, "point degree");
    // Q3: two points share at most one line. Collinearity table from the lines.
    const int n = w.num_points();
    std::vector<int> shared(static_cast<std::size_t>(n) * n, 0);
    for (const auto& line : w.lines())
      for (int a : line)
        for (int b : line)
          if (a != b) ++shared[a * n + b];
    bool q3 = true;
    for (int c : shared) q3 &= c <= 1;
    t.expect(q3, "two points on two lines");
    // Q2: every point off a line is collinear with exactly one of its points.
    for (const auto& line : w.lines())
      for (int u = 0; u < n; ++u) {
        if (std::binary_search(line.begin(), line.end(), u)) continue;
        int c = 0;
        for (int x : line) c += shared[u * n + x] > 0;
        t.expect(c == 1, "unique collinear point fails for u=" + std::to_string(u));
      }
  }
  return t.outcome("W(2), W(3) sizes and axioms, unique collinear point for every (point, line)");
}

Outcome quadrangle_graph_freeness() {
  Tally t;
  for (const auto& [q, s] : {std::pair{2, 2}, std::pair{3, 3}}) {
    const auto w = geometry::build_w_quadrangle(q);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto g = graph::build_gq_graph(w, s, seed);
      t.expect(oracle::clique_count(g, s + 1) == 0,
               "K_" + std::to_string(s + 1) + " at q=" + std::to_string(q) + " seed=" + std::to_string(seed));
      t.expect(!analysis::find_clique(g, s + 1, analysis::CliqueMode::exists).exists, "library search disagrees");
    }
  }
  return t.outcome("100 seeds at (q=2,s=2) and (q=3,s=3), exhaustive K_{s+1} search");
}

Outcome clique_alpha_oracles() {
  Tally t;
  std::mt19937_64 gen(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 12);
    const double p = 0.15 + 0.8 * static_cast<double>(gen() % 1000) / 1000.0;
    const auto g = oracle::random_graph(n, p, gen);
    for (int k = 1; k <= std::min(n, 6); ++k)
      t.expect(analysis::find_clique(g, k, analysis::CliqueMode::count).count == oracle::clique_count(g, k),
               "count mismatch trial " + std::to_string(trial) + " t=" + std::to_string(k));
  }
  for (int trial = 0; trial < 50; ++trial) {
    const int k = 2 + static_cast<int>(gen() % 4);
    std::vector<int> parts(k);
    for (auto& p : parts) p = 1 + static_cast<int>(gen() % 7);
    int n = 0;
    for (int p : parts) n += p;
    const int expected = n - *std::min_element(parts.begin(), parts.end());
    t.expect(analysis::alpha_s_exact(graph::complete_multipartite(parts), k).value == expected,
             "multipartite trial " + std::to_string(trial));
  }
  const std::vector<int> k234{2, 3, 4};
  const auto join = graph::join_construction(graph::cycle_graph(5), 2);
  t.expect(analysis::alpha_s_exact(graph::cycle_graph(5), 2).value == 2, "alpha_2(C5)");
  t.expect(analysis::alpha_s_exact(graph::petersen_graph(), 2).value == 4, "alpha_2(Petersen)");
  t.expect(analysis::alpha_s_exact(join, 2).value == 2, "alpha_2(join(C5,2))");
  t.expect(analysis::alpha_s_exact(graph::complete_multipartite(k234), 3).value == 7, "alpha_3(K_{2,3,4})");
  t.expect(oracle::independence_number(graph::petersen_graph()) == 4, "oracle alpha(Petersen)");
  t.expect(oracle::alpha_s(graph::complete_multipartite(k234), 3) == 7, "oracle alpha_3(K_{2,3,4})");
  return t.outcome("200 random graphs n<=12, 50 complete multipartite, 4 named graphs");
}

Outcome dangerous_enumeration() {
  Tally t;
  long long sets = 0;
  for (int q : {3, 5}) {
    const auto h = remnant(q);
    const auto t1 = hypergraph::enumerate_dangerous_type1(h, 3);
    t.expect(vertex_sets(t1) == oracle::dangerous_type1(h, 3), "type 1 q=" + std::to_string(q));
    sets += static_cast<long long>(t1.size());
    for (const auto& [b, r] : {std::pair{4, 1}, std::pair{5, 2}}) {
      const auto t2 = hypergraph::enumerate_dangerous_type2(h, b, r);
      const std::string tag = "q=" + std::to_string(q) + " b=" + std::to_string(b) + " r=" + std::to_string(r);
      t.expect(vertex_sets(t2) == oracle::dangerous_type2(h, b, r), "type 2 " + tag);
      sets += static_cast<long long>(t2.size());
      const long long floor = static_cast<long long>(2 * r + 1) * b - 4LL * r * r * r;
      for (const auto& s : t2) t.expect(oracle::incidences(h, s.vertices) >= floor, "incidence floor " + tag);
    }
  }
  return t.outcome(std::to_string(sets) + " dangerous sets on H for q in {3,5}");
}

Outcome clique_containment() {
  Tally t;
  const int q = 5, s = 2, r = 1, a = 3;
  const int b = params::b_for(s, r, a);
  const auto h = remnant(q);
  long long cliques = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto h1 = hypergraph::sample_h1(h, {static_cast<double>(q), hypergraph::SamplingMode::line_subsample, seed});
    const auto g = graph::build_partite_graph(h1, graph::color_lines(h1, s, 1.0, seed));
    const auto rep = analysis::check_clique_dangerous_containment(g, h1, s, r, a, b);
    t.expect(rep.status == Status::pass, "library report fails at seed " + std::to_string(seed));
    // Independent check: every triangle is a Type 1 set (pairs covered, no line holds all three).
    const auto m = oracle::adjacency(g);
    oracle::subsets(g.num_vertices(), s + r, [&](const std::vector<int>& tri) {
      if (!oracle::is_clique(m, tri)) return;
      ++cliques;
      bool general = oracle::complete_set(h1, tri);
      for (const auto& line : h1.lines()) general &= oracle::meet(line, tri) < 3;
      t.expect(general, "triangle without dangerous subset at seed " + std::to_string(seed));
    });
  }
  return t.outcome(std::to_string(cliques) + " triangles over 20 seeds at q=5, lambda=q, p=1, s=2, r=1, a=3, b=" +
                   std::to_string(b));
}

Outcome degree_scaling() {
  const auto dir = scratch("scaling");
  const json cfg = {{"pipeline", "g1"},
                    {"params", {{"s", 3}, {"r", 1}, {"lambda", {{"q_power", 0.8}}}, {"p", {{"q_power", -0.1}}}}},
                    {"q_grid", {11, 13, 17, 19, 23, 29}},
                    {"seeds", 10},
                    {"checks", {{"cliques", false}}},
                    {"out_dir", dir.string()}};
  const auto res = harness::run_experiment(harness::parse_config(cfg), 1);
  // Fit recomputed here from the per-cell records.
  std::vector<double> x, y;
  long long lines = 0, within = 0;
  for (const auto& rec : res.report["records"]) {
    x.push_back(std::log(rec["predicted_mean_degree"].get<double>()));
    y.push_back(std::log(rec["graph"]["degree_mean"].get<double>()));
    lines += rec["line_binomial"]["lines"].get<long long>();
    within += rec["line_binomial"]["within_5sigma"].get<long long>();
  }
  const double slope = oracle::ols_slope(x, y);
  const double reported = res.report["aggregate"]["degree_fit"]["slope"].get<double>();
  const double fraction = static_cast<double>(within) / static_cast<double>(lines);
  fs::remove_all(dir);
  char buf[200];
  std::snprintf(buf, sizeof buf, "degree slope %.4f (reported %.4f, target 1 +- 0.15), line binomial %.4f of %lld lines",
                slope, reported, fraction, lines);
  const bool ok = std::abs(slope - 1.0) <= 0.15 && std::abs(slope - reported) < 1e-9 && fraction >= 0.99 &&
                  res.report["records"].size() == 60;
  return {ok, buf};
}

Outcome join_two_block() {
  Tally t;
  const auto c5 = graph::cycle_graph(5);
  const auto join = graph::join_construction(c5, 2);
  t.expect(join.num_vertices() == 10, "join vertices");
  t.expect(join.num_edges() == 35, "join edges");
  int omega = 0;
  for (int k = 1; k <= 10; ++k)
    if (oracle::clique_count(join, k) > 0) omega = k;
  t.expect(omega == 4, "join clique number");
  t.expect(oracle::independence_number(join) == 2, "join alpha_2");
  const double main_term = params::evaluate_bound("join_main_term", {{"k", 2}, {"n", 10}}).value;
  t.expect(std::abs(main_term - 25.0) < 1e-12 && 35 >= main_term, "edge main term");
  const auto b = graph::restrict_bipartite(graph::projective_plane_incidence(2), 5, 5);
  const auto bg = oracle::adjacency(graph::to_simple_graph(b));
  bool c4 = false;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) {
      int common = 0;
      for (int w = 5; w < 10; ++w) common += bg[u][w] && bg[v][w];
      c4 |= common >= 2;
    }
  t.expect(!c4, "restricted incidence graph has a C4");
  const auto two = graph::two_block_construction(c5, b);
  t.expect(oracle::clique_count(two, 4) == 0, "two-block contains K4");
  return t.outcome("join(C5,2): 10 vertices, 35 edges, omega 4, alpha_2 2; two-block(C5, B) with " +
                   std::to_string(b.num_edges()) + " cross edges");
}

Outcome erdos_rogers() {
  Tally t;
  const int f5 = analysis::erdos_rogers_exact(2, 3, 5).value;
  const int f6 = analysis::erdos_rogers_exact(2, 3, 6).value;
  t.expect(f5 == 2, "f(5)");
  t.expect(f6 == 3, "f(6)");
  t.expect(oracle::erdos_rogers(2, 3, 5) == 2, "oracle f(5)");
  t.expect(oracle::erdos_rogers(2, 3, 6) == 3, "oracle f(6)");
  // Every 6-vertex graph has a triangle or an independent triple, so f(6) >= 3;
  // C5 plus an isolated vertex is triangle-free with independence number 3.
  const graph::SimpleGraph c5k1(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  t.expect(oracle::clique_count(c5k1, 3) == 0 && oracle::independence_number(c5k1) == 3, "C5+K1 upper witness");
  return t.outcome("f_{2,3}(5)=" + std::to_string(f5) + ", f_{2,3}(6)=" + std::to_string(f6));
}

Outcome drc_contract() {
  std::mt19937_64 gen(77);
  const int n = 60, r = 2, tt = 2, a = 5;
  int found = 0, verified = 0, m_lo = n, m_hi = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = oracle::random_graph(n, 0.5, gen);
    const double d = 2.0 * static_cast<double>(g.num_edges()) / n;
    int m = 0;
    while (analysis::drc_guarantee(n, d, r, m + 1, tt) >= a) ++m;
    m_lo = std::min(m_lo, m);
    m_hi = std::max(m_hi, m);
    const auto res = analysis::drc_find(g, r, m, tt, 20, static_cast<std::uint64_t>(trial), a);
    if (!res.witness) continue;
    ++found;
    const auto adj = oracle::adjacency(g);
    const auto& u = res.witness->U;
    bool ok = static_cast<int>(u.size()) >= a;
    for (std::size_t i = 0; i < u.size(); ++i)
      for (std::size_t j = i + 1; j < u.size(); ++j) {
        int common = 0;
        for (int w = 0; w < n; ++w) common += adj[u[i]][w] && adj[u[j]][w];
        ok &= common >= m;
      }
    verified += ok;
  }
  return {found >= 95 && verified == found,
          std::to_string(found) + "/100 instances with a witness of size >= 5, " + std::to_string(verified) + "/" +
              std::to_string(found) + " verified, m in [" + std::to_string(m_lo) + ", " + std::to_string(m_hi) + "]"};
}

Outcome exponent_evaluator() {
  const double e1 = params::evaluate_bound("ub_exponent", {{"r", 1}, {"delta", 0.6}}).value;
  const double e2 = params::evaluate_bound("ub_exponent", {{"r", 2}, {"delta", 0.6}}).value;
  const bool ok = std::abs(e1 - 1.6) <= 1e-9 && std::abs(e2 - (2.0 - 0.16 / 1.8)) <= 1e-9 &&
                  params::ub_exponent(1, params::Rational(3, 5)) == params::Rational(8, 5);
  char buf[120];
  std::snprintf(buf, sizeof buf, "r=1: %.12f, r=2: %.12f", e1, e2);
  return {ok, buf};
}

Outcome fraction_sweep() {
  std::mt19937_64 gen(4);
  std::uniform_real_distribution<double> mag(-4, 4), half(-0.5, 0.5);
  std::bernoulli_distribution sign(0.5);
  int holds = 0, independent = 0;
  const int total = 100000;
  for (int i = 0; i < total; ++i) {
    const double x = (sign(gen) ? 1 : -1) * std::pow(10.0, mag(gen));
    const double y = (sign(gen) ? 1 : -1) * std::pow(10.0, mag(gen));
    const double ex = x * half(gen), ey = y * half(gen);
    holds += params::fraction_error_bound(x, y, ex, ey).holds;
    const double dev = std::abs((x + ex) / (y + ey) - x / y);
    independent += dev <= (std::abs(ex * y) + 3 * std::abs(ey * x)) / (y * y) * (1 + 1e-12);
  }
  return {holds == total && independent == total,
          std::to_string(holds) + "/" + std::to_string(total) + " hold (direct recomputation " +
              std::to_string(independent) + ")"};
}

Outcome determinism() {
  Tally t;
  const auto dir = scratch("determinism");
  const json cfg = {{"pipeline", "g1"},
                    {"params", {{"s", 2}, {"r", 1}, {"lambda", 4}, {"p", 0.8}}},
                    {"q_grid", {5, 7}},
                    {"seeds", 3},
                    {"checks", {{"dangerous", true}, {"containment", true}}},
                    {"out_dir", dir.string()}};
  harness::run_experiment(harness::parse_config(cfg), 2);
  t.expect(harness::replay(dir).status == Status::pass, "clean replay");
  const auto gq_dir = scratch("determinism_gq");
  json gq = {{"pipeline", "two-block"}, {"params", {{"s", 2}}}, {"q_grid", {2, 3}}, {"seeds", 2}, {"out_dir", gq_dir.string()}};
  harness::run_experiment(harness::parse_config(gq), 1);
  t.expect(harness::replay(gq_dir).status == Status::pass, "clean replay, two-block");

  // One edge removed from a stored graph.
  const auto g = dir / harness::cell_dir_name(7, 3) / "G.g";
  auto text = io::load_text(g);
  const auto pos = text.find("\ne ");
  text.erase(pos + 1, text.find('\n', pos + 1) - pos);
  io::save_text(g, text);
  bool caught = false;
  try {
    harness::replay(dir);
  } catch (const Error& e) {
    caught = e.code() == ErrorCode::mismatch && std::string(e.what()).find("q7_seed3/G.g") != std::string::npos;
  }
  t.expect(caught, "tampered graph not reported with its file name");
  fs::remove_all(dir);
  fs::remove_all(gq_dir);
  return t.outcome("replay of g1 and two-block experiments, tampered artifact detected");
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "geometry exactness", 2, geometry_exactness},
      {2, "quadrangle exactness", 5, quadrangle_exactness},
      {3, "quadrangle graph freeness", 30, quadrangle_graph_freeness},
      {4, "clique and alpha oracle equivalence", 60, clique_alpha_oracles},
      {5, "dangerous-set enumeration", 60, dangerous_enumeration},
      {6, "clique containment", 60, clique_containment},
      {7, "degree scaling", 120, degree_scaling},
      {8, "join and two-block instances", 10, join_two_block},
      {9, "Erdos-Rogers oracle", 120, erdos_rogers},
      {10, "dependent random choice contract", 60, drc_contract},
      {11, "upper-bound exponent evaluator", 1, exponent_evaluator},
      {12, "fraction error sweep", 5, fraction_sweep},
      {13, "determinism", 30, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs <= c.limit_s;
    const bool pass = out.pass && in_time;
    failures += !pass;
    std::printf("%s [%2d] %s: %s (%.2f s, limit %.0f s%s)\n", pass ? "PASS" : "FAIL", c.id, c.name, out.detail.c_str(),
                secs, c.limit_s, in_time ? "" : ", exceeded");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
