#pragma once

namespace basinlab {
inline constexpr const char* kVersion = "1.0.0";
}
