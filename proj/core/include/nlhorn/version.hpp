#pragma once

namespace nlhorn {

inline constexpr const char* kToolName = "nlhorn";
inline constexpr const char* kToolVersion = "0.1.0";

// Bumped whenever the persisted record layout changes; part of cache file names.
inline constexpr int kFormatVersion = 1;

}  // namespace nlhorn
