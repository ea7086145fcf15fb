#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rtlab {

enum class ErrorCode {
  not_prime,
  size_limit,
  bad_index,
  bad_mode,
  bad_lambda,
  bad_tag,
  bad_param,
  mismatch,
  bad_range,
  unknown_bound,
  bad_inputs,
  config_error,
  missing_artifact,
  parse_error,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rtlab
