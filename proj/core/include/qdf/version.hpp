#pragma once

namespace qdf {

inline constexpr const char* kVersion = "0.1.0";

}
