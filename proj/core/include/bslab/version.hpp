#pragma once

namespace bslab {

inline constexpr const char* kProjectName = "bslab";
inline constexpr const char* kVersion = "0.1.0";

} // namespace bslab
