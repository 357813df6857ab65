#pragma once

#include <string_view>

namespace kummer {

// Bumping this invalidates every CLI cache entry.
inline constexpr std::string_view artifact_version = "0.1.0";

}  // namespace kummer
