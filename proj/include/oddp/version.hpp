#pragma once

namespace oddp {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace oddp
