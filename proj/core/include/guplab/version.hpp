#pragma once

namespace guplab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace guplab
