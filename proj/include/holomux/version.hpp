#pragma once

namespace holomux {

inline constexpr const char* version = "0.1.0";

}  // namespace holomux
