#pragma once

namespace clausum {

inline constexpr const char* kToolName = "clausum";
inline constexpr const char* kVersion = "1.0.0";

}  // namespace clausum
