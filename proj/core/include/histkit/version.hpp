#pragma once

namespace histkit {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace histkit
