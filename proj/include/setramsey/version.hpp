#pragma once

namespace setramsey {

inline constexpr const char* kVersion = "0.1.0";

} // namespace setramsey
