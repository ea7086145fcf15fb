#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "rtlab/analysis/alpha.hpp"
#include "rtlab/analysis/cliques.hpp"
#include "rtlab/analysis/drc.hpp"
#include "rtlab/analysis/erdos_rogers.hpp"
#include "rtlab/analysis/extract.hpp"
#include "rtlab/error.hpp"
#include "rtlab/geometry/affine_plane.hpp"
#include "rtlab/geometry/quadrangle.hpp"
#include "rtlab/graph/compose.hpp"
#include "rtlab/graph/partite.hpp"
#include "rtlab/graph/zarankiewicz.hpp"
#include "rtlab/harness/config.hpp"
#include "rtlab/harness/experiment.hpp"
#include "rtlab/hypergraph/dangerous.hpp"
#include "rtlab/hypergraph/properties.hpp"
#include "rtlab/hypergraph/sampling.hpp"
#include "rtlab/io/formats.hpp"
#include "rtlab/params/bounds.hpp"
#include "rtlab/params/construction.hpp"
#include "rtlab/rng.hpp"
#include "rtlab/version.hpp"

using namespace rtlab;
using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

// Exit codes: 0 success, 1 a check failed, 2 invalid input or runtime error.
int emit(VerificationReport rep, Clock::time_point start) {
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  std::cout << rep.to_json().dump(2) << "\n";
  return rep.status == Status::fail ? 1 : 0;
}

VerificationReport built(const std::string& property, const graph::SimpleGraph& g, json params,
                         std::optional<std::uint64_t> seed = std::nullopt) {
  VerificationReport rep;
  rep.property = property;
  rep.value = {{"vertices", g.num_vertices()}, {"edges", g.num_edges()}};
  rep.params = std::move(params);
  rep.seed = seed;
  return rep;
}

VerificationReport built(const std::string& property, const geometry::IncidenceStructure& h, json params,
                         std::optional<std::uint64_t> seed = std::nullopt) {
  VerificationReport rep;
  rep.property = property;
  rep.value = {{"kind", geometry::to_string(h.kind())}, {"points", h.num_points()}, {"lines", h.num_lines()}};
  rep.params = std::move(params);
  rep.seed = seed;
  return rep;
}

params::BoundInputs parse_inputs(const std::string& text) {
  params::BoundInputs in;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw Error(ErrorCode::bad_inputs, "expected key=value, got '" + item + "'");
    try {
      std::size_t used = 0;
      const std::string v = item.substr(eq + 1);
      in[item.substr(0, eq)] = std::stod(v, &used);
      if (used != v.size()) throw std::invalid_argument(v);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::bad_inputs, "not a number in '" + item + "'");
    }
  }
  return in;
}

std::string csv_help() {
  std::string cols;
  for (const auto& c : harness::csv_columns()) cols += (cols.empty() ? "" : ",") + c;
  return "CSV columns, in order: " + cols +
         ". Empty cells mean the value does not apply to the pipeline (lambda and p exist only for g1/g2).";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construction laboratory for Ramsey-Turan extremal graphs"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  std::function<int()> action;
  const auto start = Clock::now();

  // geometry
  {
    auto* c = app.add_subcommand("affine", "Write AG(2,q), optionally without one parallel class");
    auto q = std::make_shared<int>();
    auto drop = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    c->add_option("--q", *q, "prime order")->required();
    c->add_option("--drop-class", *drop, "class index 0..q or 'vertical'");
    c->add_option("--out", *out, "output hypergraph")->required();
    c->callback([=, &action] {
      action = [=] {
        const auto plane = geometry::build_affine_plane(*q);
        geometry::IncidenceStructure h = plane.structure;
        if (!drop->empty()) {
          int idx = 0;
          if (*drop == "vertical") {
            idx = geometry::vertical_class_index(*q);
          } else {
            try {
              idx = std::stoi(*drop);
            } catch (const std::logic_error&) {
              throw Error(ErrorCode::bad_index, "drop-class must be an index or 'vertical'");
            }
          }
          h = geometry::remove_parallel_class(plane, idx);
        }
        io::save_hypergraph(*out, h);
        return emit(built("affine", h, {{"q", *q}, {"drop_class", *drop}}), start);
      };
    });
  }
  {
    auto* c = app.add_subcommand("gq", "Write the symplectic quadrangle W(q)");
    auto q = std::make_shared<int>();
    auto out = std::make_shared<std::string>();
    c->add_option("--q", *q, "prime order (<= 13)")->required();
    c->add_option("--out", *out, "output hypergraph")->required();
    c->callback([=, &action] {
      action = [=] {
        const auto w = geometry::build_w_quadrangle(*q);
        io::save_hypergraph(*out, w);
        return emit(built("gq", w, {{"q", *q}}), start);
      };
    });
  }
  {
    auto* c = app.add_subcommand("verify-gq", "Check the quadrangle axioms exhaustively");
    auto in = std::make_shared<std::string>();
    c->add_option("--in", *in, "hypergraph file")->required();
    c->callback([=, &action] {
      action = [=] {
        auto rep = geometry::verify_gq_axioms(io::load_hypergraph(*in));
        rep.params = {{"in", *in}};
        return emit(rep, start);
      };
    });
  }

  // sampling and dangerous sets
  for (const bool second : {false, true}) {
    auto* c = app.add_subcommand(second ? "sample-h2" : "sample-h1",
                                 second ? "Keep each point with probability lambda/q; drop lines left with < 2 points"
                                        : "Keep each line with probability lambda/q");
    auto in = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    auto lambda = std::make_shared<double>();
    auto seed = std::make_shared<std::uint64_t>();
    auto retry = std::make_shared<int>(0);
    c->add_option("--in", *in, "remnant hypergraph H")->required();
    c->add_option("--lambda", *lambda, "0 < lambda <= q")->required();
    c->add_option("--seed", *seed, "master seed")->required();
    c->add_option("--out", *out, "output hypergraph")->required();
    c->add_option("--retry-until", *retry,
                  "resample with derived seeds (at most this many attempts) until the degree / line-size range check passes");
    c->callback([=, &action] {
      action = [=] {
        const auto h = io::load_hypergraph(*in);
        const int q = hypergraph::remnant_order(h);
        const int attempts = std::max(1, *retry);
        geometry::IncidenceStructure hx;
        hypergraph::H2Sample detail;
        std::uint64_t used = *seed;
        int attempt = 0;
        bool in_range = false;
        for (; attempt < attempts; ++attempt) {
          used = attempt == 0 ? *seed : derive_seed(*seed, static_cast<std::uint64_t>(attempt));
          if (second) {
            detail = hypergraph::sample_h2_detailed(h, {*lambda, hypergraph::SamplingMode::vertex_eliminate, used});
            hx = detail.structure;
          } else {
            hx = hypergraph::sample_h1(h, {*lambda, hypergraph::SamplingMode::line_subsample, used});
          }
          if (*retry <= 0) break;
          hypergraph::HPropertyInputs pin;
          pin.q = q;
          pin.lambda = *lambda;
          pin.pruned_lines = detail.pruned_lines;
          pin.enumerate_dangerous = false;
          const auto rep = hypergraph::verify_h_properties(hx, pin);
          const auto* range = rep.find_check(second ? "line-size-range" : "degree-range");
          in_range = range == nullptr || range->status == Status::pass;
          if (in_range) break;
        }
        io::save_hypergraph(*out, hx);
        auto rep = built(second ? "sample-h2" : "sample-h1", hx, {{"in", *in}, {"q", q}, {"lambda", *lambda}}, *seed);
        rep.value["sample_seed"] = used;
        if (second) {
          rep.value["eliminated"] = detail.eliminated;
          rep.value["pruned_lines"] = detail.pruned_lines;
        }
        if (*retry > 0) {
          rep.value["attempts"] = std::min(attempt + 1, attempts);
          rep.add_check("retry-until", in_range ? Status::pass : Status::statistical);
          rep.settle();
        }
        return emit(rep, start);
      };
    });
  }
  {
    auto* c = app.add_subcommand("verify-h", "Check linearity, degree ranges and dangerous-set counts of a sample");
    auto in = std::make_shared<std::string>();
    auto pin = std::make_shared<hypergraph::HPropertyInputs>();
    auto no_dangerous = std::make_shared<bool>(false);
    c->add_option("--in", *in, "sampled H1 or H2")->required();
    c->add_option("--q", pin->q, "order of the affine plane")->required();
    c->add_option("--lambda", pin->lambda, "sampling parameter")->required();
    c->add_option("--r", pin->r, "r")->capture_default_str();
    c->add_option("--a", pin->a, "Type 1 size")->capture_default_str();
    c->add_option("--b", pin->b, "Type 2 size")->capture_default_str();
    c->add_option("--pruned-lines", pin->pruned_lines, "H2: lines dropped while sampling");
    c->add_flag("--no-dangerous", *no_dangerous, "skip dangerous-set enumeration");
    c->callback([=, &action] {
      action = [=] {
        auto inputs = *pin;
        inputs.enumerate_dangerous = !*no_dangerous;
        return emit(hypergraph::verify_h_properties(io::load_hypergraph(*in), inputs), start);
      };
    });
  }
  {
    auto* c = app.add_subcommand("dangerous", "Enumerate dangerous sets exhaustively");
    auto in = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    auto type = std::make_shared<int>();
    auto a = std::make_shared<int>(0);
    auto b = std::make_shared<int>(0);
    auto r = std::make_shared<int>(1);
    c->add_option("--in", *in, "hypergraph file")->required();
    c->add_option("--type", *type, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
    c->add_option("--a", *a, "Type 1 set size");
    c->add_option("--b", *b, "Type 2 set size");
    c->add_option("--r", *r, "Type 2 off-spine count")->capture_default_str();
    c->add_option("--out", *out, "sets.json");
    c->callback([=, &action] {
      action = [=] {
        const auto hx = io::load_hypergraph(*in);
        std::vector<hypergraph::DangerousSet> sets;
        if (*type == 1) {
          if (*a <= 0) throw Error(ErrorCode::bad_param, "--a is required for type 1");
          sets = hypergraph::enumerate_dangerous_type1(hx, *a);
        } else {
          if (*b <= 0) throw Error(ErrorCode::bad_param, "--b is required for type 2");
          sets = hypergraph::enumerate_dangerous_type2(hx, *b, *r);
        }
        json arr = json::array();
        for (const auto& s : sets) arr.push_back(hypergraph::to_json(s));
        if (!out->empty()) io::save_text(*out, arr.dump(2) + "\n");
        VerificationReport rep;
        rep.property = "dangerous";
        rep.params = {{"in", *in}, {"type", *type}, {"a", *a}, {"b", *b}, {"r", *r}};
        rep.value = {{"count", sets.size()}};
        int invalid = 0;
        for (const auto& s : sets) invalid += hypergraph::validate(hx, s, *r) ? 0 : 1;
        rep.add_check("witness-validity", invalid == 0 ? Status::pass : Status::fail, {{"invalid", invalid}});
        if (out->empty()) rep.witness = arr;
        rep.settle();
        return emit(rep, start);
      };
    });
  }

  // graph construction
  for (const std::string name : {"build-g1", "build-g2"}) {
    auto* c = app.add_subcommand(name, "Color each line into s classes plus isolated points and build the graph");
    auto in = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    auto s = std::make_shared<int>();
    auto p = std::make_shared<double>();
    auto seed = std::make_shared<std::uint64_t>();
    c->add_option("--in", *in, "sampled hypergraph")->required();
    c->add_option("--s", *s, "number of classes")->required();
    c->add_option("--p", *p, "probability a point is not isolated")->required();
    c->add_option("--seed", *seed, "coloring seed")->required();
    c->add_option("--out", *out, "output graph")->required();
    c->callback([=, &action] {
      action = [=] {
        const auto hx = io::load_hypergraph(*in);
        const auto assignment = graph::color_lines(hx, *s, *p, *seed);
        const auto g = graph::build_partite_graph(hx, assignment);
        io::save_graph(*out, g);
        auto rep = built(name, g, {{"in", *in}, {"s", *s}, {"p", *p}}, *seed);
        for (auto& chk : graph::verify_partite_structure(hx, assignment, g).checks) rep.checks.push_back(chk);
        rep.settle();
        return emit(rep, start);
      };
    });
  }
  {
    auto* c = app.add_subcommand("build-gq-graph", "Uniform s-coloring of every quadrangle line");
    auto in = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    auto s = std::make_shared<int>();
    auto seed = std::make_shared<std::uint64_t>();
    c->add_option("--in", *in, "quadrangle hypergraph")->required();
    c->add_option("--s", *s, "number of classes")->required();
    c->add_option("--seed", *seed, "coloring seed")->required();
    c->add_option("--out", *out, "output graph")->required();
    c->callback([=, &action] {
      action = [=] {
        const auto gq = io::load_hypergraph(*in);
        const auto g = graph::build_gq_graph(gq, *s, *seed);
        io::save_graph(*out, g);
        return emit(built("build-gq-graph", g, {{"in", *in}, {"s", *s}}, *seed), start);
      };
    });
  }
  {
    auto* c = app.add_subcommand("join", "k copies of a graph with all cross-copy edges");
    auto in = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    auto k = std::make_shared<int>();
    c->add_option("--in", *in, "input graph")->required();
    c->add_option("--k", *k, "number of copies (>= 2)")->required();
    c->add_option("--out", *out, "output graph")->required();
    c->callback([=, &action] {
      action = [=] {
        const auto g = graph::join_construction(io::load_graph(*in), *k);
        io::save_graph(*out, g);
        return emit(built("join", g, {{"in", *in}, {"k", *k}}), start);
      };
    });
  }
  {
    auto* c = app.add_subcommand("two-block", "Two copies of a graph joined along a bipartite graph");
    auto in = std::make_shared<std::string>();
    auto bip = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    c->add_option("--in", *in, "input graph")->required();
    c->add_option("--bipartite", *bip, "bipartite graph file with |H| vertices per side")->required();
    c->add_option("--out", *out, "output graph")->required();
    c->callback([=, &action] {
      action = [=] {
        const auto g = graph::two_block_construction(io::load_graph(*in), graph::bipartite_from_graph(io::load_graph(*bip)));
        io::save_graph(*out, g);
        return emit(built("two-block", g, {{"in", *in}, {"bipartite", *bip}}), start);
      };
    });
  }
  {
    auto* c = app.add_subcommand("zbuild", "K_{s,s}-free bipartite graph with n vertices per side");
    auto n = std::make_shared<int>();
    auto s = std::make_shared<int>();
    auto out = std::make_shared<std::string>();
    c->add_option("--n", *n, "vertices per side")->required();
    c->add_option("--s", *s, "forbidden K_{s,s}")->required();
    c->add_option("--out", *out, "output graph")->required();
    c->callback([=, &action] {
      action = [=] {
        const auto z = graph::build_zarankiewicz_bipartite(*n, *s);
        const auto g = graph::to_simple_graph(z.graph, {{"method", z.method}});
        io::save_graph(*out, g);
        auto rep = built("zbuild", g, {{"n", *n}, {"s", *s}});
        rep.value["method"] = z.method;
        rep.value["verified"] = z.verified;
        return emit(rep, start);
      };
    });
  }

  // analysis
  {
    auto* c = app.add_subcommand("cliques", "Exact t-clique search");
    auto in = std::make_shared<std::string>();
    auto t = std::make_shared<int>();
    auto mode = std::make_shared<std::string>("exists");
    c->add_option("--in", *in, "graph file")->required();
    c->add_option("--t", *t, "clique size")->required();
    c->add_option("--mode", *mode, "exists | count | enumerate")->check(CLI::IsMember({"exists", "count", "enumerate"}));
    c->callback([=, &action] {
      action = [=] {
        const auto g = io::load_graph(*in);
        const auto m = analysis::clique_mode_from_string(*mode);
        const auto res = analysis::find_clique(g, *t, m);
        VerificationReport rep;
        rep.property = "cliques";
        rep.params = {{"in", *in}, {"t", *t}, {"mode", *mode}};
        rep.value = {{"exists", res.exists}};
        if (m != analysis::CliqueMode::exists) rep.value["count"] = res.count;
        rep.witness = m == analysis::CliqueMode::enumerate ? json(res.cliques) : json(res.witness);
        return emit(rep, start);
      };
    });
  }
  {
    auto* c = app.add_subcommand("alpha", "s-independence number: exact, or a statistical probe");
    auto in = std::make_shared<std::string>();
    auto s = std::make_shared<int>();
    auto exact = std::make_shared<bool>(false);
    auto probe = std::make_shared<bool>(false);
    auto alpha = std::make_shared<int>(0);
    auto trials = std::make_shared<int>(100);
    auto seed = std::make_shared<std::uint64_t>(0);
    c->add_option("--in", *in, "graph file")->required();
    c->add_option("--s", *s, "forbidden clique size in the independent set")->required();
    auto* fe = c->add_flag("--exact", *exact, "branch and bound (n <= 60)");
    auto* fp = c->add_flag("--probe", *probe, "sample alpha-sets and search each for K_s");
    fe->excludes(fp);
    c->add_option("--alpha", *alpha, "probe set size");
    c->add_option("--trials", *trials, "probe trials")->capture_default_str();
    c->add_option("--seed", *seed, "probe seed");
    c->callback([=, &action] {
      action = [=] {
        const auto g = io::load_graph(*in);
        VerificationReport rep;
        rep.property = "alpha";
        rep.params = {{"in", *in}, {"s", *s}};
        if (*probe) {
          if (*alpha <= 0) throw Error(ErrorCode::bad_param, "--probe needs --alpha > 0");
          const auto cert = analysis::alpha_s_probe(g, *s, *alpha, *trials, *seed);
          rep.seed = *seed;
          rep.params["alpha"] = *alpha;
          rep.params["trials"] = *trials;
          rep.value = analysis::to_json(cert);
          rep.witness = cert.failure_witnesses;
          rep.add_check("probe", cert.failures == 0 ? Status::pass : Status::statistical);
        } else {
          const auto cert = analysis::alpha_s_exact(g, *s);
          rep.value = analysis::to_json(cert);
          rep.witness = cert.witness;
        }
        rep.settle();
        return emit(rep, start);
      };
    });
  }
  {
    auto* c = app.add_subcommand("drc", "Dependent random choice");
    auto in = std::make_shared<std::string>();
    auto r = std::make_shared<int>();
    auto m = std::make_shared<int>();
    auto t = std::make_shared<int>();
    auto trials = std::make_shared<int>(20);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto min_size = std::make_shared<int>(1);
    c->add_option("--in", *in, "graph file")->required();
    c->add_option("--r", *r, "subset size")->required();
    c->add_option("--m", *m, "common-neighbor threshold")->required();
    c->add_option("--t", *t, "vertices drawn per trial")->required();
    c->add_option("--trials", *trials, "trials")->capture_default_str();
    c->add_option("--seed", *seed, "seed");
    c->add_option("--min-size", *min_size, "smallest acceptable U")->capture_default_str();
    c->callback([=, &action] {
      action = [=] {
        const auto g = io::load_graph(*in);
        const auto res = analysis::drc_find(g, *r, *m, *t, *trials, *seed, *min_size);
        VerificationReport rep;
        rep.property = "drc";
        rep.seed = *seed;
        rep.params = {{"in", *in}, {"r", *r}, {"m", *m}, {"t", *t}, {"trials", *trials}, {"min_size", *min_size}};
        rep.value = analysis::to_json(res);
        if (res.witness) {
          rep.witness = res.witness->U;
          rep.add_check("witness", analysis::verify_drc(g, res.witness->U, *r, *m) ? Status::pass : Status::fail);
        } else {
          rep.add_check("witness", Status::statistical, {{"reason", "not found"}});
        }
        rep.settle();
        return emit(rep, start);
      };
    });
  }
  {
    auto* c = app.add_subcommand("extract-indep", "Run the upper-bound argument to find a large K_s-free set");
    auto in = std::make_shared<std::string>();
    auto s = std::make_shared<int>();
    auto r = std::make_shared<int>();
    auto delta = std::make_shared<double>(0.0);
    auto trials = std::make_shared<int>(20);
    auto seed = std::make_shared<std::uint64_t>(0);
    auto phase = std::make_shared<bool>(false);
    auto m = std::make_shared<int>(1);
    auto omega = std::make_shared<double>(0.0);
    c->add_option("--in", *in, "graph file")->required();
    c->add_option("--s", *s, "s")->required();
    c->add_option("--r", *r, "r (ignored with --phase-transition, which uses s+1)");
    c->add_option("--delta", *delta, "target exponent, 0 < delta < 1");
    c->add_option("--trials", *trials, "dependent random choice trials")->capture_default_str();
    c->add_option("--seed", *seed, "seed");
    c->add_flag("--phase-transition", *phase, "use r = s+1, t = 2s+1, |U| >= n/omega");
    c->add_option("--m", *m, "phase transition: common-neighbor threshold")->capture_default_str();
    c->add_option("--omega", *omega, "phase transition: omega (default ceil(log log n))");
    c->callback([=, &action] {
      action = [=] {
        const auto g = io::load_graph(*in);
        VerificationReport rep;
        rep.property = "extract-indep";
        rep.seed = *seed;
        analysis::ExtractResult res;
        if (*phase) {
          res = analysis::phase_transition_extract(g, *s, *m, *omega, *trials, *seed);
          rep.params = {{"in", *in}, {"s", *s}, {"m", *m}, {"omega", *omega}, {"trials", *trials}};
        } else {
          if (*r < 1) throw Error(ErrorCode::bad_param, "--r is required");
          res = analysis::extract_independent_set(g, *s, *r, *delta, *trials, *seed);
          rep.params = {{"in", *in}, {"s", *s}, {"r", *r}, {"delta", *delta}, {"trials", *trials}};
        }
        rep.value = analysis::to_json(res);
        switch (res.outcome) {
          case analysis::ExtractOutcome::found:
            rep.witness = res.set;
            rep.add_check("ks-free", analysis::is_ks_free(g, res.set, *s) ? Status::pass : Status::fail);
            rep.add_check("target", res.target_met ? Status::pass : Status::statistical);
            break;
          case analysis::ExtractOutcome::refutation:
            rep.witness = res.clique;
            rep.add_check("refutation", analysis::is_clique(g, res.clique) ? Status::pass : Status::fail);
            break;
          case analysis::ExtractOutcome::not_found:
            rep.add_check("target", Status::statistical, {{"reason", "not found"}});
            break;
        }
        rep.settle();
        return emit(rep, start);
      };
    });
  }
  {
    auto* c = app.add_subcommand("erdos-rogers", "min alpha_s over K_t-free graphs on n vertices (n <= 8)");
    auto s = std::make_shared<int>();
    auto t = std::make_shared<int>();
    auto n = std::make_shared<int>();
    c->add_option("--s", *s, "s")->required();
    c->add_option("--t", *t, "t > s")->required();
    c->add_option("--n", *n, "vertices")->required();
    c->callback([=, &action] {
      action = [=] {
        const auto res = analysis::erdos_rogers_exact(*s, *t, *n);
        VerificationReport rep;
        rep.property = "erdos-rogers";
        rep.params = {{"s", *s}, {"t", *t}, {"n", *n}};
        rep.value = {{"value", res.value}, {"nodes", res.nodes}};
        json edges = json::array();
        for (const auto& [u, v] : res.extremal.edges()) edges.push_back({u, v});
        rep.witness = {{"vertices", res.extremal.num_vertices()}, {"edges", edges}};
        return emit(rep, start);
      };
    });
  }

  // parameters
  {
    auto* c = app.add_subcommand("params", "Derive construction parameters and feasibility flags");
    auto regime = std::make_shared<std::string>();
    auto mv = std::make_shared<params::ManualValues>();
    c->add_option("--regime", *regime, "small | mid | sqrt | manual")
        ->required()
        ->check(CLI::IsMember({"small", "mid", "sqrt", "manual"}));
    c->add_option("--r", mv->r, "r")->capture_default_str();
    c->add_option("--s", mv->s, "s")->capture_default_str();
    c->add_option("--delta", mv->delta, "delta");
    c->add_option("--epsilon", mv->epsilon, "epsilon");
    c->add_option("--n", mv->n, "target vertex count")->required();
    c->add_option("--q", mv->q, "manual: prime order (default: next prime >= sqrt n)");
    c->add_option("--lambda", mv->lambda, "manual: lambda");
    c->add_option("--p", mv->p, "manual: p");
    c->add_option("--alpha", mv->alpha, "manual: alpha");
    c->add_option("--a", mv->a, "manual: Type 1 size")->capture_default_str();
    c->add_option("--b", mv->b, "manual: Type 2 size (0 derives it)");
    c->callback([=, &action] {
      action = [=] {
        params::ConstructionParams cp;
        if (*regime == "small") {
          cp = params::derive_params_small_delta(mv->r, mv->s, mv->epsilon, mv->delta, mv->n);
        } else if (*regime == "mid") {
          cp = params::derive_params_mid_delta(mv->r, mv->s, mv->epsilon, mv->delta, mv->n);
        } else if (*regime == "sqrt") {
          cp = params::derive_params_sqrt(mv->r, mv->s, mv->epsilon, mv->n);
        } else {
          auto v = *mv;
          if (v.q == 0) v.q = params::next_prime_at_least(std::sqrt(v.n));
          cp = params::manual_params(v);
        }
        std::cout << params::to_json(cp).dump(2) << "\n";
        return 0;
      };
    });
  }
  {
    auto* c = app.add_subcommand("bound", "Evaluate a named bound");
    auto name = std::make_shared<std::string>();
    auto inputs = std::make_shared<std::string>();
    std::string names;
    for (const auto& n : params::bound_names()) names += (names.empty() ? "" : ", ") + n;
    c->add_option("--name", *name, "one of: " + names)->required();
    c->add_option("--inputs", *inputs, "comma-separated key=value pairs");
    c->callback([=, &action] {
      action = [=] {
        std::cout << params::to_json(params::evaluate_bound(*name, parse_inputs(*inputs))).dump(2) << "\n";
        return 0;
      };
    });
  }

  // experiments
  {
    auto* c = app.add_subcommand("run", "Run a configured experiment; exit 1 on hard failures");
    auto config = std::make_shared<std::string>();
    auto jobs = std::make_shared<int>(1);
    c->add_option("--config", *config, "experiment JSON")->required();
    c->add_option("--jobs", *jobs, "worker threads")->capture_default_str();
    c->callback([=, &action] {
      action = [=] {
        const auto cfg = harness::load_config(*config);
        const auto res = harness::run_experiment(cfg, *jobs);
        json summary = {{"out_dir", cfg.out_dir},
                        {"config_hash", res.report["config_hash"]},
                        {"cells", res.report["records"].size()},
                        {"hard_failures", res.hard_failures},
                        {"aggregate", res.report["aggregate"]},
                        {"prediction", res.report["prediction"]}};
        std::cout << summary.dump(2) << "\n";
        return res.hard_failures > 0 ? 1 : 0;
      };
    });
  }
  {
    auto* c = app.add_subcommand("replay", "Regenerate an experiment and byte-compare every artifact");
    auto dir = std::make_shared<std::string>();
    c->add_option("--dir", *dir, "experiment output directory")->required();
    c->callback([=, &action] { action = [=] { return emit(harness::replay(*dir), start); }; });
  }
  {
    auto* c = app.add_subcommand("report", "Print an experiment report");
    auto dir = std::make_shared<std::string>();
    auto format = std::make_shared<std::string>("json");
    c->add_option("--dir", *dir, "experiment output directory")->required();
    c->add_option("--format", *format, "json | csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    c->footer(csv_help());
    c->callback([=, &action] {
      action = [=] {
        const auto report = harness::load_report(*dir);
        if (*format == "csv")
          std::cout << harness::report_csv(report);
        else
          std::cout << report.dump(2) << "\n";
        return 0;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  try {
    return action ? action() : 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
