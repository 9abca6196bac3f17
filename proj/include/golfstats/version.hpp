#pragma once

namespace golfstats {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace golfstats
