#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace rtlab {

enum class Status { pass, fail, statistical, advisory, skipped };

std::string_view to_string(Status status);

struct CheckOutcome {
  std::string name;
  Status status = Status::pass;
  nlohmann::json detail;
};

// Structured result of a property check. Serialized with the keys
// property, status, value, witness, params, seed, elapsed_ms, checks.
struct VerificationReport {
  std::string property;
  Status status = Status::pass;
  nlohmann::json value;
  nlohmann::json witness;
  nlohmann::json params;
  std::optional<std::uint64_t> seed;
  double elapsed_ms = 0.0;
  std::vector<CheckOutcome> checks;

  void add_check(std::string name, Status status, nlohmann::json detail = {});
  const CheckOutcome* find_check(std::string_view name) const;

  // Overall status: fail if any check failed, otherwise pass.
  void settle();

  nlohmann::json to_json() const;
};

}  // namespace rtlab
