#pragma once

#include <cstdint>
#include <vector>

namespace trifree {

using Color = std::int8_t;
inline constexpr Color kNoColor = -1;

/// Partial map from vertex id to {0,1,2}; kNoColor marks an uncolored id.
using Coloring = std::vector<Color>;

}  // namespace trifree
