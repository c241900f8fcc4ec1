#pragma once

namespace tanint {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace tanint
