#include "rtlab/harness/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include "rtlab/analysis/alpha.hpp"
#include "rtlab/analysis/cliques.hpp"
#include "rtlab/analysis/containment.hpp"
#include "rtlab/error.hpp"
#include "rtlab/geometry/affine_plane.hpp"
#include "rtlab/geometry/quadrangle.hpp"
#include "rtlab/graph/compose.hpp"
#include "rtlab/graph/partite.hpp"
#include "rtlab/graph/zarankiewicz.hpp"
#include "rtlab/hypergraph/properties.hpp"
#include "rtlab/hypergraph/sampling.hpp"
#include "rtlab/io/formats.hpp"
#include "rtlab/params/construction.hpp"
#include "rtlab/rng.hpp"
#include "rtlab/version.hpp"

namespace rtlab::harness {

namespace fs = std::filesystem;
using geometry::IncidenceStructure;
using graph::SimpleGraph;

namespace {

enum Stage : std::uint64_t { stage_sample = 1, stage_color = 2, stage_probe = 3 };

struct CellParams {
  double lambda = 0.0;
  double p = 1.0;
  std::optional<double> alpha;
  int s = 2, r = 1, a = 3, b = 0;
  std::vector<std::string> flags;
};

CellParams resolve_params(const ExperimentConfig& c, int q) {
  const auto& ps = c.params;
  CellParams out;
  out.s = ps.s;
  out.r = ps.r;
  out.a = ps.a;
  out.b = ps.b > 0 ? ps.b : params::b_for(ps.s, ps.r, ps.a);
  if (ps.regime == "manual") {
    if (ps.lambda) out.lambda = ps.lambda->at(q);
    if (ps.p) out.p = ps.p->at(q);
  } else {
    params::ConstructionParams cp;
    const double qq = static_cast<double>(q);
    if (ps.regime == "small") {
      cp = params::derive_params_small_delta(ps.r, ps.s, ps.epsilon, ps.delta, qq * qq);
    } else if (ps.regime == "sqrt") {
      cp = params::derive_params_sqrt(ps.r, ps.s, ps.epsilon, qq * qq);
    } else {
      const int a = params::mid_delta_a(ps.r, ps.delta);
      const double e = params::mid_delta_exponent(ps.r, ps.delta, params::b_for(ps.s, ps.r, a));
      cp = params::derive_params_mid_delta(ps.r, ps.s, ps.epsilon, ps.delta, std::pow(qq, e + 1.0));
    }
    if (cp.q != q) throw Error(ErrorCode::config_error, "derived order " + std::to_string(cp.q) + " differs from q=" + std::to_string(q));
    out.lambda = cp.lambda;
    out.p = cp.p;
    out.alpha = cp.alpha;
    out.a = cp.a;
    out.b = cp.b;
    out.flags = cp.feasibility;
  }
  if (ps.alpha) out.alpha = ps.alpha->at(q);
  // The samplers need lambda <= q and p <= 1; derived values beyond these are
  // clamped and flagged.
  if (out.p > 1.0) {
    out.p = 1.0;
    out.flags.emplace_back("p clamped to 1");
  }
  if (out.lambda > q) {
    out.lambda = q;
    out.flags.emplace_back("lambda clamped to q");
  }
  return out;
}

nlohmann::json checks_json(const VerificationReport& rep) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : rep.checks) arr.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  return arr;
}

nlohmann::json degree_stats(const SimpleGraph& g) {
  const auto deg = g.degrees();
  if (deg.empty()) return {{"vertices", 0}, {"edges", 0}};
  const double mean = std::accumulate(deg.begin(), deg.end(), 0.0) / static_cast<double>(deg.size());
  return {{"vertices", g.num_vertices()},
          {"edges", g.num_edges()},
          {"degree_min", *std::min_element(deg.begin(), deg.end())},
          {"degree_mean", mean},
          {"degree_max", *std::max_element(deg.begin(), deg.end())}};
}

// Non-isolated points per line against Bin(|L|, p) within 5 sigma.
nlohmann::json line_binomial(const IncidenceStructure& hx, const graph::PartitionAssignment& a) {
  long long within = 0;
  for (std::size_t l = 0; l < hx.num_lines(); ++l) {
    const auto& cls = a.classes[l];
    const auto size = static_cast<double>(cls.size());
    const auto active = static_cast<double>(std::count_if(cls.begin(), cls.end(), [](int c) { return c != graph::kIsolated; }));
    const double sigma = std::sqrt(size * a.p * (1.0 - a.p));
    if (std::abs(active - size * a.p) <= 5.0 * sigma + 1e-9) ++within;
  }
  const auto lines = static_cast<long long>(hx.num_lines());
  return {{"lines", lines}, {"within_5sigma", within},
          {"fraction", lines > 0 ? static_cast<double>(within) / static_cast<double>(lines) : 1.0}};
}

template <typename F>
auto stage(const char* name, int q, std::uint64_t seed, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw Error(e.code(), std::string("stage ") + name + " (q=" + std::to_string(q) + ", seed=" +
                              std::to_string(seed) + "): " + e.what());
  }
}

}  // namespace

std::string cell_dir_name(int q, std::uint64_t seed) { return "q" + std::to_string(q) + "_seed" + std::to_string(seed); }

CellOutput run_cell(const ExperimentConfig& config, int q, std::uint64_t seed) {
  CellOutput out;
  out.q = q;
  out.seed = seed;
  const auto& ck = config.checks;
  const CellParams cp = stage("params", q, seed, [&] { return resolve_params(config, q); });
  const std::uint64_t sample_seed = derive_seed(seed, static_cast<std::uint64_t>(q), stage_sample);
  const std::uint64_t color_seed = derive_seed(seed, static_cast<std::uint64_t>(q), stage_color);
  const std::uint64_t probe_seed = derive_seed(seed, static_cast<std::uint64_t>(q), stage_probe);

  VerificationReport rep;
  rep.property = "cell";
  nlohmann::json record = {{"q", q},
                           {"seed", seed},
                           {"pipeline", to_string(config.pipeline)},
                           {"stage_seeds", {{"sample", sample_seed}, {"color", color_seed}, {"probe", probe_seed}}}};
  nlohmann::json pj = {{"s", cp.s}, {"r", cp.r}, {"a", cp.a}, {"b", cp.b}, {"flags", cp.flags}};
  const bool hyper = config.pipeline == Pipeline::g1 || config.pipeline == Pipeline::g2;
  if (hyper) {
    pj["lambda"] = cp.lambda;
    pj["p"] = cp.p;
  }
  if (cp.alpha) pj["alpha"] = *cp.alpha;
  record["params"] = pj;

  SimpleGraph g;
  IncidenceStructure hx;
  std::optional<graph::PartitionAssignment> assignment;
  std::optional<SimpleGraph> base;

  if (hyper) {
    const auto h = stage("geometry", q, seed, [&] {
      const auto plane = geometry::build_affine_plane(q);
      return geometry::remove_parallel_class(plane, geometry::vertical_class_index(q));
    });
    out.files["H.hg"] = io::hypergraph_to_string(h);
    int pruned = 0;
    hx = stage("sample", q, seed, [&] {
      if (config.pipeline == Pipeline::g1)
        return hypergraph::sample_h1(h, {cp.lambda, hypergraph::SamplingMode::line_subsample, sample_seed});
      auto s2 = hypergraph::sample_h2_detailed(h, {cp.lambda, hypergraph::SamplingMode::vertex_eliminate, sample_seed});
      pruned = s2.pruned_lines;
      return s2.structure;
    });
    out.files[config.pipeline == Pipeline::g1 ? "H1.hg" : "H2.hg"] = io::hypergraph_to_string(hx);
    assignment = stage("color", q, seed, [&] { return graph::color_lines(hx, cp.s, cp.p, color_seed); });
    g = stage("build", q, seed, [&] { return graph::build_partite_graph(hx, *assignment); });
    record["predicted_mean_degree"] = cp.lambda * q * cp.p * cp.p;
    if (ck.linearity || ck.degrees || ck.dangerous) {
      hypergraph::HPropertyInputs in;
      in.q = q;
      in.lambda = cp.lambda;
      in.r = cp.r;
      in.a = cp.a;
      in.b = cp.b;
      in.pruned_lines = pruned;
      in.enumerate_dangerous = ck.dangerous;
      const auto hr = stage("verify-h", q, seed, [&] { return hypergraph::verify_h_properties(hx, in); });
      for (const auto& c : hr.checks) {
        const bool is_range = c.name == "degree-range" || c.name == "line-size-range";
        if ((c.name == "linearity" && ck.linearity) || (is_range && ck.degrees) ||
            (c.name.rfind("dangerous", 0) == 0 && ck.dangerous))
          rep.checks.push_back(c);
      }
    }
    if (ck.degrees) {
      const auto lb = line_binomial(hx, *assignment);
      record["line_binomial"] = lb;
      rep.add_check("line-binomial", lb["fraction"].get<double>() >= 0.99 ? Status::pass : Status::statistical, lb);
    }
  } else {
    hx = stage("geometry", q, seed, [&] { return geometry::build_w_quadrangle(q); });
    out.files["H.hg"] = io::hypergraph_to_string(hx);
    assignment = stage("color", q, seed, [&] { return graph::color_lines_uniform(hx, cp.s, color_seed); });
    const auto gq = stage("build", q, seed, [&] { return graph::build_partite_graph(hx, *assignment); });
    if (ck.linearity) rep.add_check("linearity", hx.is_linear() ? Status::pass : Status::fail);
    if (config.pipeline == Pipeline::gq) {
      g = gq;
    } else {
      base = gq;
      out.files["base.g"] = io::graph_to_string(gq);
      if (config.pipeline == Pipeline::join) {
        g = stage("join", q, seed, [&] { return graph::join_construction(gq, config.params.k); });
      } else {
        const auto zb = stage("zarankiewicz", q, seed,
                              [&] { return graph::build_zarankiewicz_bipartite(gq.num_vertices(), cp.s); });
        out.files["B.g"] = io::graph_to_string(graph::to_simple_graph(zb.graph, {{"method", zb.method}}));
        record["bipartite"] = {{"method", zb.method}, {"edges", zb.graph.num_edges()}, {"verified", zb.verified}};
        g = stage("two-block", q, seed, [&] { return graph::two_block_construction(gq, zb.graph); });
      }
    }
  }
  out.files["G.g"] = io::graph_to_string(g);
  record["structure"] = {{"kind", geometry::to_string(hx.kind())}, {"points", hx.num_points()}, {"lines", hx.num_lines()}};
  record["graph"] = degree_stats(g);

  // Structural checks on the colored line blocks apply to every pipeline.
  {
    const auto& hg = base ? *base : g;
    const auto ps = graph::verify_partite_structure(hx, *assignment, hg);
    for (const auto& c : ps.checks) rep.checks.push_back(c);
  }

  if (ck.cliques) {
    stage("cliques", q, seed, [&] {
      switch (config.pipeline) {
        case Pipeline::g1:
        case Pipeline::g2: {
          const auto res = analysis::find_clique(g, cp.s + cp.r, analysis::CliqueMode::exists);
          rep.add_check("clique-free", res.exists ? Status::statistical : Status::pass,
                        {{"t", cp.s + cp.r}, {"witness", res.witness}});
          break;
        }
        case Pipeline::gq: {
          std::vector<int> w;
          const int omega = analysis::clique_number(g, &w);
          rep.add_check("clique-in-line-bound", omega <= cp.s ? Status::pass : Status::fail,
                        {{"clique_number", omega}, {"s", cp.s}, {"witness", w}});
          break;
        }
        case Pipeline::join: {
          const int wb = analysis::clique_number(*base);
          const int wg = analysis::clique_number(g);
          rep.add_check("join-clique-number", wg == config.params.k * wb ? Status::pass : Status::fail,
                        {{"base", wb}, {"join", wg}, {"k", config.params.k}});
          const auto res = analysis::find_clique(g, config.params.k * cp.s + 1, analysis::CliqueMode::exists);
          rep.add_check("clique-free", res.exists ? Status::fail : Status::pass,
                        {{"t", config.params.k * cp.s + 1}, {"witness", res.witness}});
          break;
        }
        case Pipeline::two_block: {
          const auto res = analysis::find_clique(g, 2 * cp.s, analysis::CliqueMode::exists);
          rep.add_check("clique-free", res.exists ? Status::fail : Status::pass,
                        {{"t", 2 * cp.s}, {"witness", res.witness}});
          break;
        }
      }
      return 0;
    });
  }

  if (ck.alpha_exact) {
    stage("alpha-exact", q, seed, [&] {
      try {
        const auto cert = analysis::alpha_s_exact(g, cp.s);
        rep.add_check("alpha-exact", Status::pass, analysis::to_json(cert));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::size_limit) throw;
        rep.add_check("alpha-exact", Status::skipped, {{"reason", e.what()}});
      }
      return 0;
    });
  }

  if (ck.alpha_probe && cp.alpha) {
    stage("alpha-probe", q, seed, [&] {
      const int alpha = std::min(g.num_vertices(), static_cast<int>(std::ceil(*cp.alpha - 1e-9)));
      const auto cert = analysis::alpha_s_probe(g, cp.s, alpha, config.params.probe_trials, probe_seed);
      auto detail = analysis::to_json(cert);
      if (hyper) detail["log_union_bound"] = analysis::probe_union_bound_log(q, cp.lambda, cp.s, cp.p, alpha);
      rep.add_check("alpha-probe", cert.failures == 0 ? Status::pass : Status::statistical, detail);
      return 0;
    });
  }

  if (ck.containment && hyper) {
    stage("containment", q, seed, [&] {
      try {
        const auto cr = analysis::check_clique_dangerous_containment(g, hx, cp.s, cp.r, cp.a, cp.b);
        for (const auto& c : cr.checks) rep.checks.push_back(c);
      } catch (const Error& e) {
        if (e.code() != ErrorCode::size_limit) throw;
        rep.add_check("containment", Status::skipped, {{"reason", e.what()}});
      }
      return 0;
    });
  }

  rep.settle();
  record["checks"] = checks_json(rep);
  record["hard_failure"] = rep.status == Status::fail;
  out.record = record;
  out.files["record.json"] = record.dump(2) + "\n";
  return out;
}

LinearFit ols_fit(const std::vector<double>& x, const std::vector<double>& y) {
  LinearFit f;
  f.points = static_cast<int>(x.size());
  if (x.size() < 2) return f;
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx <= 0.0) return f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  if (x.size() > 2) {
    double ssr = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double e = y[i] - (f.intercept + f.slope * x[i]);
      ssr += e * e;
    }
    f.slope_se = std::sqrt(ssr / (n - 2.0) / sxx);
  }
  return f;
}

namespace {

nlohmann::json fit_json(const std::vector<double>& x, const std::vector<double>& y) {
  std::vector<double> distinct = x;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  if (distinct.size() < 2) return nullptr;
  const auto f = ols_fit(x, y);
  return {{"slope", f.slope}, {"intercept", f.intercept}, {"slope_se", f.slope_se}, {"points", f.points}};
}

}  // namespace

nlohmann::json aggregate_records(const nlohmann::json& records) {
  std::vector<double> ex, ey, dx, dy;
  long long lines = 0, within = 0;
  int hard = 0, statistical = 0, advisory = 0;
  std::map<int, std::vector<const nlohmann::json*>> by_q;
  for (const auto& rec : records) {
    by_q[rec.at("q").get<int>()].push_back(&rec);
    const auto& g = rec.at("graph");
    const double n = g.at("vertices").get<double>();
    const double e = g.at("edges").get<double>();
    if (n > 1.0 && e > 0.0) {
      ex.push_back(std::log(n));
      ey.push_back(std::log(e));
    }
    if (rec.contains("predicted_mean_degree") && g.contains("degree_mean")) {
      const double pred = rec.at("predicted_mean_degree").get<double>();
      const double mean = g.at("degree_mean").get<double>();
      if (pred > 0.0 && mean > 0.0) {
        dx.push_back(std::log(pred));
        dy.push_back(std::log(mean));
      }
    }
    if (rec.contains("line_binomial")) {
      lines += rec.at("line_binomial").at("lines").get<long long>();
      within += rec.at("line_binomial").at("within_5sigma").get<long long>();
    }
    hard += rec.at("hard_failure").get<bool>() ? 1 : 0;
    for (const auto& c : rec.at("checks")) {
      const auto st = c.at("status").get<std::string>();
      statistical += st == "statistical" ? 1 : 0;
      advisory += st == "advisory" ? 1 : 0;
    }
  }
  nlohmann::json per_q = nlohmann::json::array();
  for (const auto& [q, recs] : by_q) {
    double edges = 0.0, mean_deg = 0.0;
    for (const auto* r : recs) {
      edges += r->at("graph").at("edges").get<double>();
      mean_deg += r->at("graph").value("degree_mean", 0.0);
    }
    const auto k = static_cast<double>(recs.size());
    per_q.push_back({{"q", q}, {"cells", recs.size()}, {"mean_edges", edges / k}, {"mean_degree", mean_deg / k}});
  }
  nlohmann::json agg = {{"cells", records.size()},
                        {"hard_failures", hard},
                        {"statistical_flags", statistical},
                        {"advisory_flags", advisory},
                        {"edge_fit", fit_json(ex, ey)},
                        {"degree_fit", fit_json(dx, dy)},
                        {"per_q", per_q}};
  if (lines > 0)
    agg["line_binomial"] = {{"lines", lines},
                            {"within_5sigma", within},
                            {"fraction", static_cast<double>(within) / static_cast<double>(lines)}};
  return agg;
}

namespace {

std::vector<std::pair<int, std::uint64_t>> cells_of(const ExperimentConfig& c) {
  std::vector<std::pair<int, std::uint64_t>> cells;
  for (int q : c.q_grid)
    for (auto s : c.seeds) cells.emplace_back(q, s);
  std::sort(cells.begin(), cells.end());
  return cells;
}

std::vector<CellOutput> run_cells(const ExperimentConfig& config, int jobs) {
  const auto cells = cells_of(config);
  std::vector<CellOutput> outputs(cells.size());
  std::vector<std::exception_ptr> errors(cells.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      try {
        outputs[i] = run_cell(config, cells[i].first, cells[i].second);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int n = std::max(1, std::min<int>(jobs, static_cast<int>(cells.size())));
  std::vector<std::thread> pool;
  for (int i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return outputs;
}

nlohmann::json build_report(const ExperimentConfig& config, const std::vector<CellOutput>& outputs) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& o : outputs) records.push_back(o.record);
  auto agg = aggregate_records(records);
  // Edges ~ q^2 * lambda q p^2 with n = q^2 when lambda and p are pure q-powers.
  nlohmann::json prediction = nullptr;
  const auto& ps = config.params;
  if (config.pipeline == Pipeline::g1 && ps.regime == "manual" && ps.lambda && ps.p && ps.lambda->q_power && ps.p->q_power)
    prediction = {{"edge_slope", (3.0 + *ps.lambda->q_power + 2.0 * *ps.p->q_power) / 2.0}, {"degree_slope", 1.0}};
  return {{"schema", kReportSchema},
          {"tool_version", kToolVersion},
          {"config_hash", config_hash(config)},
          {"config", to_json(config)},
          {"records", records},
          {"aggregate", agg},
          {"prediction", prediction},
          {"hard_failures", agg["hard_failures"]}};
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config, int jobs) {
  const fs::path root(config.out_dir);
  fs::create_directories(root);
  io::save_text(root / "config.json", to_json(config).dump(2) + "\n");
  const auto outputs = run_cells(config, jobs);
  for (const auto& o : outputs) {
    const auto dir = root / cell_dir_name(o.q, o.seed);
    fs::create_directories(dir);
    for (const auto& [name, bytes] : o.files) io::save_text(dir / name, bytes);
  }
  ExperimentResult res;
  res.report = build_report(config, outputs);
  res.hard_failures = res.report["hard_failures"].get<int>();
  io::save_text(root / "report.json", res.report.dump(2) + "\n");
  return res;
}

VerificationReport replay(const fs::path& dir) {
  const auto config = load_config((dir / "config.json").string());
  VerificationReport rep;
  rep.property = "replay";
  rep.params = {{"dir", dir.string()}, {"config_hash", config_hash(config)}};
  std::vector<CellOutput> outputs;
  for (const auto& [q, seed] : cells_of(config)) {
    auto cell = run_cell(config, q, seed);
    const auto name = cell_dir_name(q, seed);
    for (const auto& [file, bytes] : cell.files) {
      const auto stored = io::load_text(dir / name / file);
      if (stored != bytes)
        throw Error(ErrorCode::mismatch, name + "/" + file + ": stored bytes differ from the regenerated artifact");
    }
    // Stored structures must parse and re-verify to the recorded outcomes.
    const auto g = io::load_graph(dir / name / "G.g");
    const auto stored_record = nlohmann::json::parse(io::load_text(dir / name / "record.json"));
    if (stored_record.at("checks") != cell.record.at("checks"))
      throw Error(ErrorCode::mismatch, name + "/record.json: check outcomes differ");
    rep.add_check(name, Status::pass, {{"files", cell.files.size()}, {"edges", g.num_edges()}});
    outputs.push_back(std::move(cell));
  }
  const auto report = build_report(config, outputs);
  if (io::load_text(dir / "report.json") != report.dump(2) + "\n")
    throw Error(ErrorCode::mismatch, "report.json: stored report differs from the regenerated one");
  rep.value = {{"cells", outputs.size()}, {"hard_failures", report["hard_failures"]}};
  rep.settle();
  return rep;
}

nlohmann::json load_report(const fs::path& dir) {
  nlohmann::json report;
  try {
    report = nlohmann::json::parse(io::load_text(dir / "report.json"));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::parse_error, (dir / "report.json").string() + ": " + e.what());
  }
  report["aggregate"] = aggregate_records(report.at("records"));
  return report;
}

const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> cols = {
      "q",           "seed",        "vertices",     "edges",           "degree_min",
      "degree_mean", "degree_max",  "points",       "lines",           "lambda",
      "p",           "predicted_mean_degree", "checks_failed", "checks_statistical", "checks_advisory",
      "hard_failure"};
  return cols;
}

std::string report_csv(const nlohmann::json& report) {
  std::string out;
  for (std::size_t i = 0; i < csv_columns().size(); ++i) out += (i ? "," : "") + csv_columns()[i];
  out += "\n";
  auto num = [](const nlohmann::json& j, const char* key) -> std::string {
    if (!j.contains(key) || j.at(key).is_null()) return "";
    return j.at(key).dump();
  };
  for (const auto& rec : report.at("records")) {
    int failed = 0, stat = 0, adv = 0;
    for (const auto& c : rec.at("checks")) {
      const auto st = c.at("status").get<std::string>();
      failed += st == "fail";
      stat += st == "statistical";
      adv += st == "advisory";
    }
    const auto& g = rec.at("graph");
    const auto& s = rec.at("structure");
    const auto& p = rec.at("params");
    const std::vector<std::string> row = {num(rec, "q"),          num(rec, "seed"),        num(g, "vertices"),
                                          num(g, "edges"),        num(g, "degree_min"),    num(g, "degree_mean"),
                                          num(g, "degree_max"),   num(s, "points"),        num(s, "lines"),
                                          num(p, "lambda"),       num(p, "p"),             num(rec, "predicted_mean_degree"),
                                          std::to_string(failed), std::to_string(stat),    std::to_string(adv),
                                          rec.at("hard_failure").get<bool>() ? "1" : "0"};
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + row[i];
    out += "\n";
  }
  return out;
}

}  // namespace rtlab::harness
