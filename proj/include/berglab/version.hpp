#pragma once

namespace berglab {
inline constexpr const char* version_string = "0.1.0";
}
