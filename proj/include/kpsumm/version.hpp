#pragma once

namespace kpsumm {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace kpsumm
