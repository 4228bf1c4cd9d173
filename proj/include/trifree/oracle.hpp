#pragma once

// Reference implementations evaluated straight from the definitions, with no
// degree-bounded shortcuts.  Exponential in places; guarded by size caps.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "trifree/coloring.hpp"
#include "trifree/multigram.hpp"
#include "trifree/plane_graph.hpp"

namespace trifree {

struct SimpleGraph {
  std::vector<bool> present;                 // index = vertex id
  std::vector<std::vector<VertexId>> adj;    // sorted neighbor lists

  static SimpleGraph from_plane(const PlaneGraph& g);
  static SimpleGraph from_edges(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges);

  std::size_t vertex_count() const;
  bool has_edge(VertexId u, VertexId v) const;
};

inline constexpr std::size_t kBruteForceCap = 30;
inline constexpr std::size_t kSlowMultigramCap = 200;

std::optional<Coloring> brute_force_3color(const SimpleGraph& g, std::size_t cap = kBruteForceCap);
bool is_proper(const SimpleGraph& g, const Coloring& coloring);
bool is_triangle_free(const SimpleGraph& g);

/// Facial walks that are cycles of length 4, 5 or 6, one vertex list per face.
std::vector<std::vector<VertexId>> facial_cycles_slow(const PlaneGraph& g);

/// Every multigram of G, all kinds and pivots, with facial cycles in every
/// rotation and both orientations.
std::vector<Multigram> all_multigrams_slow(const PlaneGraph& g, std::size_t cap = kSlowMultigramCap);
bool is_secure_slow(const PlaneGraph& g, const Multigram& m, const ConstraintCycle& c);
std::vector<Multigram> all_secure_multigrams_slow(const PlaneGraph& g, const ConstraintCycle& c,
                                                  std::size_t cap = kSlowMultigramCap);

bool closeness_slow(const PlaneGraph& g, VertexId u, VertexId v,
                    std::size_t cap = kSlowMultigramCap);
/// Whether w is close to the edge {u, v}.
bool close_to_edge_slow(const PlaneGraph& g, VertexId u, VertexId v, VertexId w,
                        std::size_t cap = kSlowMultigramCap);

}  // namespace trifree
