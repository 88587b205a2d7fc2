#pragma once

namespace eae {

inline constexpr const char* kVersion = "eaesim 1.0.0";

}  // namespace eae
