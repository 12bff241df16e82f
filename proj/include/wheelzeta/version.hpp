#pragma once

namespace wheelzeta {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace wheelzeta
