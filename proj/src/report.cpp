#include "rtlab/report.hpp"

namespace rtlab {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::statistical: return "statistical";
    case Status::advisory: return "advisory";
    case Status::skipped: return "skipped";
  }
  return "unknown";
}

void VerificationReport::add_check(std::string name, Status status, nlohmann::json detail) {
  checks.push_back(CheckOutcome{std::move(name), status, std::move(detail)});
}

const CheckOutcome* VerificationReport::find_check(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

void VerificationReport::settle() {
  status = Status::pass;
  for (const auto& c : checks)
    if (c.status == Status::fail) status = Status::fail;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["property"] = property;
  j["status"] = std::string(to_string(status));
  j["value"] = value;
  j["witness"] = witness;
  j["params"] = params;
  j["seed"] = seed ? nlohmann::json(*seed) : nlohmann::json(nullptr);
  j["elapsed_ms"] = elapsed_ms;
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : checks) {
    cs.push_back({{"name", c.name}, {"status", std::string(to_string(c.status))}, {"detail", c.detail}});
  }
  j["checks"] = std::move(cs);
  return j;
}

}  // namespace rtlab
