#pragma once

namespace kcx {

inline constexpr const char* kVersion = "0.1.0";

// Bumped when any serialized artifact layout changes.
inline constexpr int kFormatVersion = 1;

}  // namespace kcx
