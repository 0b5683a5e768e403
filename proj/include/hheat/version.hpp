#pragma once

namespace hheat {

inline constexpr const char* kVersion = "0.1.0";

}  // namespace hheat
