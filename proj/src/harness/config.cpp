#include "rtlab/harness/config.hpp"

#include <cmath>
#include <cstdio>
#include <set>

#include "rtlab/error.hpp"
#include "rtlab/geometry/prime_field.hpp"
#include "rtlab/hash.hpp"
#include "rtlab/io/formats.hpp"

namespace rtlab::harness {

namespace {

[[noreturn]] void fail(const std::string& key, const std::string& why) {
  throw Error(ErrorCode::config_error, key + ": " + why);
}

void reject_unknown(const nlohmann::json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [k, _] : obj.items())
    if (!allowed.contains(k)) fail(where + k, "unknown key");
}

int get_int(const nlohmann::json& obj, const std::string& key, int fallback, const std::string& where) {
  if (!obj.contains(key)) return fallback;
  const auto& v = obj.at(key);
  if (!v.is_number_integer()) fail(where + key, "expected an integer");
  return v.get<int>();
}

double get_double(const nlohmann::json& obj, const std::string& key, double fallback, const std::string& where) {
  if (!obj.contains(key)) return fallback;
  const auto& v = obj.at(key);
  if (!v.is_number()) fail(where + key, "expected a number");
  return v.get<double>();
}

std::optional<ValueSpec> get_value(const nlohmann::json& obj, const std::string& key) {
  if (!obj.contains(key)) return std::nullopt;
  const auto& v = obj.at(key);
  ValueSpec spec;
  if (v.is_number()) {
    spec.constant = v.get<double>();
  } else if (v.is_object()) {
    reject_unknown(v, {"q_power", "scale"}, "params." + key + ".");
    if (!v.contains("q_power") || !v.at("q_power").is_number()) fail("params." + key, "q_power must be a number");
    spec.q_power = v.at("q_power").get<double>();
    spec.scale = get_double(v, "scale", 1.0, "params." + key + ".");
  } else {
    fail("params." + key, "expected a number or {\"q_power\": x}");
  }
  return spec;
}

Pipeline pipeline_from(const std::string& name) {
  if (name == "g1") return Pipeline::g1;
  if (name == "g2") return Pipeline::g2;
  if (name == "gq") return Pipeline::gq;
  if (name == "join") return Pipeline::join;
  if (name == "two-block") return Pipeline::two_block;
  fail("pipeline", "unknown pipeline '" + name + "'");
}

}  // namespace

std::string_view to_string(Pipeline p) {
  switch (p) {
    case Pipeline::g1: return "g1";
    case Pipeline::g2: return "g2";
    case Pipeline::gq: return "gq";
    case Pipeline::join: return "join";
    case Pipeline::two_block: return "two-block";
  }
  return "g1";
}

double ValueSpec::at(int q) const {
  if (!q_power) return constant;
  return scale * std::pow(static_cast<double>(q), *q_power);
}

nlohmann::json ValueSpec::to_json() const {
  if (!q_power) return constant;
  return {{"q_power", *q_power}, {"scale", scale}};
}

std::optional<int> predicted_vertices(const ExperimentConfig& c, int q) {
  const int gq_points = (q * q + 1) * (q + 1);
  switch (c.pipeline) {
    case Pipeline::g1: return q * q;
    case Pipeline::g2: return std::nullopt;
    case Pipeline::gq: return gq_points;
    case Pipeline::join: return c.params.k * gq_points;
    case Pipeline::two_block: return 2 * gq_points;
  }
  return std::nullopt;
}

ExperimentConfig parse_config(const nlohmann::json& j) {
  if (!j.is_object()) fail("config", "expected a JSON object");
  reject_unknown(j, {"pipeline", "params", "q_grid", "seeds", "checks", "out_dir"}, "");
  ExperimentConfig c;
  if (!j.contains("pipeline") || !j.at("pipeline").is_string()) fail("pipeline", "required string");
  c.pipeline = pipeline_from(j.at("pipeline").get<std::string>());

  const nlohmann::json params = j.value("params", nlohmann::json::object());
  if (!params.is_object()) fail("params", "expected an object");
  reject_unknown(params,
                 {"regime", "r", "s", "delta", "epsilon", "lambda", "p", "alpha", "a", "b", "k", "probe_trials"},
                 "params.");
  auto& ps = c.params;
  ps.regime = params.value("regime", std::string("manual"));
  if (ps.regime != "manual" && ps.regime != "small" && ps.regime != "mid" && ps.regime != "sqrt")
    fail("params.regime", "expected manual, small, mid or sqrt");
  ps.r = get_int(params, "r", 1, "params.");
  ps.s = get_int(params, "s", 3, "params.");
  ps.delta = get_double(params, "delta", 0.0, "params.");
  ps.epsilon = get_double(params, "epsilon", 0.0, "params.");
  ps.lambda = get_value(params, "lambda");
  ps.p = get_value(params, "p");
  ps.alpha = get_value(params, "alpha");
  ps.a = get_int(params, "a", 3, "params.");
  ps.b = get_int(params, "b", 0, "params.");
  ps.k = get_int(params, "k", 2, "params.");
  ps.probe_trials = get_int(params, "probe_trials", 50, "params.");
  if (ps.s < 2) fail("params.s", "must be >= 2");
  if (ps.r < 1) fail("params.r", "must be >= 1");
  if (ps.k < 2) fail("params.k", "must be >= 2");
  if (ps.probe_trials < 1) fail("params.probe_trials", "must be >= 1");
  const bool needs_lambda = c.pipeline == Pipeline::g1 || c.pipeline == Pipeline::g2;
  if (ps.regime == "manual" && needs_lambda && (!ps.lambda || !ps.p))
    fail("params", "manual g1/g2 runs need lambda and p");

  if (!j.contains("q_grid") || !j.at("q_grid").is_array()) fail("q_grid", "required array");
  for (const auto& v : j.at("q_grid")) {
    if (!v.is_number_integer()) fail("q_grid", "entries must be integers");
    const int q = v.get<int>();
    if (q < 2 || !geometry::is_prime(static_cast<std::uint64_t>(q))) fail("q_grid", std::to_string(q) + " is not prime");
    if (!needs_lambda && q > 13) fail("q_grid", "quadrangle pipelines support q <= 13");
    c.q_grid.push_back(q);
  }
  if (c.q_grid.empty()) fail("q_grid", "must not be empty");
  if (std::set<int>(c.q_grid.begin(), c.q_grid.end()).size() != c.q_grid.size()) fail("q_grid", "duplicate entries");

  if (!j.contains("seeds")) fail("seeds", "required");
  const auto& seeds = j.at("seeds");
  if (seeds.is_number_integer()) {
    const auto count = seeds.get<long long>();
    if (count < 1) fail("seeds", "count must be >= 1");
    for (long long i = 1; i <= count; ++i) c.seeds.push_back(static_cast<std::uint64_t>(i));
  } else if (seeds.is_array()) {
    for (const auto& v : seeds) {
      if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        fail("seeds", "entries must be non-negative integers");
      c.seeds.push_back(v.get<std::uint64_t>());
    }
    if (c.seeds.empty()) fail("seeds", "must not be empty");
    if (std::set<std::uint64_t>(c.seeds.begin(), c.seeds.end()).size() != c.seeds.size())
      fail("seeds", "duplicate entries");
  } else {
    fail("seeds", "expected a list or a count");
  }

  const nlohmann::json checks = j.value("checks", nlohmann::json::object());
  if (!checks.is_object()) fail("checks", "expected an object");
  auto flag = [&](std::initializer_list<const char*> names, bool& out) {
    for (const char* n : names)
      if (checks.contains(n)) {
        if (!checks.at(n).is_boolean()) fail(std::string("checks.") + n, "expected a boolean");
        out = checks.at(n).get<bool>();
      }
  };
  reject_unknown(checks,
                 {"linearity", "degrees", "dangerous", "cliques", "alpha-exact", "alpha_exact", "alpha-probe",
                  "alpha_probe", "containment"},
                 "checks.");
  flag({"linearity"}, c.checks.linearity);
  flag({"degrees"}, c.checks.degrees);
  flag({"dangerous"}, c.checks.dangerous);
  flag({"cliques"}, c.checks.cliques);
  flag({"alpha-exact", "alpha_exact"}, c.checks.alpha_exact);
  flag({"alpha-probe", "alpha_probe"}, c.checks.alpha_probe);
  flag({"containment"}, c.checks.containment);
  if (c.checks.alpha_probe && !ps.alpha) fail("params.alpha", "required when checks.alpha-probe is on");
  if (c.checks.containment && !needs_lambda) fail("checks.containment", "only applies to g1/g2 pipelines");
  if (c.checks.alpha_exact)
    for (int q : c.q_grid)
      if (auto n = predicted_vertices(c, q); n && *n > 60)
        fail("checks.alpha-exact", "q=" + std::to_string(q) + " gives " + std::to_string(*n) +
                                       " vertices, beyond the exact guard of 60");

  if (!j.contains("out_dir") || !j.at("out_dir").is_string() || j.at("out_dir").get<std::string>().empty())
    fail("out_dir", "required non-empty string");
  c.out_dir = j.at("out_dir").get<std::string>();
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  const auto text = io::load_text(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::config_error, path + ": " + e.what());
  }
  return parse_config(j);
}

nlohmann::json to_json(const ExperimentConfig& c) {
  const auto& ps = c.params;
  nlohmann::json params = {{"regime", ps.regime}, {"r", ps.r},         {"s", ps.s},
                           {"delta", ps.delta},   {"epsilon", ps.epsilon}, {"a", ps.a},
                           {"b", ps.b},           {"k", ps.k},         {"probe_trials", ps.probe_trials}};
  if (ps.lambda) params["lambda"] = ps.lambda->to_json();
  if (ps.p) params["p"] = ps.p->to_json();
  if (ps.alpha) params["alpha"] = ps.alpha->to_json();
  return {{"pipeline", to_string(c.pipeline)},
          {"params", params},
          {"q_grid", c.q_grid},
          {"seeds", c.seeds},
          {"checks",
           {{"linearity", c.checks.linearity},
            {"degrees", c.checks.degrees},
            {"dangerous", c.checks.dangerous},
            {"cliques", c.checks.cliques},
            {"alpha-exact", c.checks.alpha_exact},
            {"alpha-probe", c.checks.alpha_probe},
            {"containment", c.checks.containment}}},
          {"out_dir", c.out_dir}};
}

std::string config_hash(const ExperimentConfig& c) {
  auto j = to_json(c);
  j.erase("out_dir");  // the same experiment may be written anywhere
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(j.dump())));
  return buf;
}

}  // namespace rtlab::harness
