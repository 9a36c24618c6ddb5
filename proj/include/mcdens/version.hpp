#pragma once

namespace mcdens {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace mcdens
