#pragma once

namespace qnoise {

inline constexpr const char* version = "0.1.0";

}  // namespace qnoise
