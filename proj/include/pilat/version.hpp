#pragma once

namespace pilat {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace pilat
