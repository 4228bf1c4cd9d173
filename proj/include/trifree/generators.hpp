#pragma once

// Seeded generators of triangle-free plane graphs.

#include <cstdint>
#include <optional>
#include <string_view>

#include "trifree/plane_graph.hpp"

namespace trifree {

enum class GenKind { kGrid, kQuad, kAugmented, kDual };

std::string_view gen_kind_name(GenKind kind);
std::optional<GenKind> parse_gen_kind(std::string_view name);

struct GenSpec {
  GenKind kind = GenKind::kGrid;
  std::size_t size = 1;   // grid: side length k; others: target vertex count
  std::uint64_t seed = 0;
  double deletion = 0.0;  // probability of dropping each edge (grid only)
};

/// Deterministic for a fixed spec.  The result is validated (embedding scan
/// and triangle check) before it is returned.
PlaneGraph generate(const GenSpec& spec);

}  // namespace trifree
