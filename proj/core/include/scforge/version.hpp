#pragma once

namespace scforge {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace scforge
