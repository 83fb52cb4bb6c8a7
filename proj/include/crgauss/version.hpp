#pragma once

namespace crgauss {

inline constexpr const char* kVersion = "1.0.0";

}  // namespace crgauss
