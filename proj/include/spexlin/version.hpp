#pragma once

namespace spexlin {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace spexlin
