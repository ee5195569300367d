#pragma once

namespace unexp {

inline constexpr const char* artifact_version = "0.1.0";
inline constexpr int schema_version = 1;

}  // namespace unexp
