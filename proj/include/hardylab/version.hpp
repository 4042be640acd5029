#pragma once

namespace hardylab {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace hardylab
