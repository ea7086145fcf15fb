#include "rtlab/error.hpp"

namespace rtlab {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::not_prime: return "NotPrime";
    case ErrorCode::size_limit: return "SizeLimit";
    case ErrorCode::bad_index: return "BadIndex";
    case ErrorCode::bad_mode: return "BadMode";
    case ErrorCode::bad_lambda: return "BadLambda";
    case ErrorCode::bad_tag: return "BadTag";
    case ErrorCode::bad_param: return "BadParam";
    case ErrorCode::mismatch: return "Mismatch";
    case ErrorCode::bad_range: return "BadRange";
    case ErrorCode::unknown_bound: return "UnknownBound";
    case ErrorCode::bad_inputs: return "BadInputs";
    case ErrorCode::config_error: return "ConfigError";
    case ErrorCode::missing_artifact: return "MissingArtifact";
    case ErrorCode::parse_error: return "ParseError";
  }
  return "Unknown";
}

}  // namespace rtlab
