#pragma once

namespace nistab {

inline constexpr const char* tool_name = "ni";
inline constexpr const char* tool_version = "0.1.0";

}
