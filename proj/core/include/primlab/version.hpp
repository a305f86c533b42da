#pragma once

namespace primlab {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace primlab
