#pragma once

namespace ribbongate {

inline constexpr const char* kToolVersion = "0.1.0";

}  // namespace ribbongate
