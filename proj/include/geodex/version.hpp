#pragma once

namespace geodex {

inline constexpr const char* kToolName = "geodex";
inline constexpr const char* kVersion = "0.1.0";

}  // namespace geodex
