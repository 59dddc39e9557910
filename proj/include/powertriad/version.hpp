#pragma once

namespace powertriad {

inline constexpr const char* kVersion = "0.1.0";

} // namespace powertriad
