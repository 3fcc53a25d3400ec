#pragma once

namespace rankcop {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace rankcop
