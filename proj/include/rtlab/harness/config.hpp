#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace rtlab::harness {

enum class Pipeline { g1, g2, gq, join, two_block };

std::string_view to_string(Pipeline p);

// A number, or {"q_power": x[, "scale": c]} meaning c * q^x.
struct ValueSpec {
  double constant = 0.0;
  std::optional<double> q_power;
  double scale = 1.0;

  double at(int q) const;
  nlohmann::json to_json() const;
};

struct ParamSpec {
  std::string regime = "manual";  // manual | small | mid | sqrt
  int r = 1;
  int s = 3;
  double delta = 0.0;
  double epsilon = 0.0;
  std::optional<ValueSpec> lambda;
  std::optional<ValueSpec> p;
  std::optional<ValueSpec> alpha;
  int a = 3;
  int b = 0;  // 0: derived from (s, r, a)
  int k = 2;  // join copies
  int probe_trials = 50;
};

struct CheckToggles {
  bool linearity = true;
  bool degrees = true;
  bool dangerous = false;
  bool cliques = true;
  bool alpha_exact = false;
  bool alpha_probe = false;
  bool containment = false;
};

struct ExperimentConfig {
  Pipeline pipeline = Pipeline::g1;
  ParamSpec params;
  std::vector<int> q_grid;
  std::vector<std::uint64_t> seeds;
  CheckToggles checks;
  std::string out_dir;
};

// Throws Error(config_error) with the offending key on any invalid input,
// including unknown keys, non-prime q values, an empty seed list, and exact
// checks enabled where the instance size exceeds their guards.
ExperimentConfig parse_config(const nlohmann::json& j);
ExperimentConfig load_config(const std::string& path);

// Canonical form (all fields explicit); hashing this gives the config hash.
nlohmann::json to_json(const ExperimentConfig& c);
std::string config_hash(const ExperimentConfig& c);

// Vertex count of the graph a pipeline builds at order q, where it does not
// depend on random sampling.
std::optional<int> predicted_vertices(const ExperimentConfig& c, int q);

}  // namespace rtlab::harness
