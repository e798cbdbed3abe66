#pragma once

namespace specht {

inline constexpr const char* toolkit_version = "1.0.0";

}
