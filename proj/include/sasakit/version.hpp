#pragma once

namespace sasakit {
inline constexpr const char* kVersion = "0.1.0";
}
