#pragma once

namespace rtlab {

inline constexpr const char* kToolVersion = "rtlab 1.0.0";

}  // namespace rtlab
