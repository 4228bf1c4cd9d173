#pragma once

// Multigrams: the six reducible configurations, their safety predicates and
// C-security, all evaluated with bounded work around a pivot.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "trifree/plane_graph.hpp"

namespace trifree {

enum class Kind : std::uint8_t { kMonogram, kTetragram, kOctagram, kDecagram, kPentagram, kHexagram };

inline constexpr std::size_t kNumKinds = 6;
/// Order in which find_secure_with_pivot tries the kinds.
inline constexpr std::array<Kind, kNumKinds> kKindOrder = {
    Kind::kMonogram, Kind::kTetragram, Kind::kOctagram,
    Kind::kDecagram, Kind::kPentagram, Kind::kHexagram};

std::string_view kind_name(Kind kind);

struct Multigram {
  Kind kind = Kind::kMonogram;
  std::uint8_t size = 0;               // 1, 4, 5 or 6
  std::array<VertexId, 6> v{};         // v1..vk; v[0] is the pivot
  std::uint8_t num_aux = 0;
  std::array<VertexId, 4> x{};         // tetragram/hexagram: x; penta/decagram: x1..x4
  DartId face = kNoDart;               // dart leaving v1 on the facial cycle

  VertexId pivot() const { return v[0]; }
  std::span<const VertexId> vertices() const { return {v.data(), size}; }
  std::span<const VertexId> aux() const { return {x.data(), num_aux}; }
  bool same_configuration(const Multigram& o) const;
};

/// The constraint cycle C; empty means the null graph.
class ConstraintCycle {
 public:
  ConstraintCycle() = default;
  explicit ConstraintCycle(std::vector<VertexId> cycle) : cycle_(std::move(cycle)) {}

  bool empty() const { return cycle_.empty(); }
  bool contains(VertexId v) const;
  const std::vector<VertexId>& vertices() const { return cycle_; }

 private:
  std::vector<VertexId> cycle_;
};

bool admissible(const PlaneGraph& g, VertexId v, const ConstraintCycle& c);

/// Shape-valid multigrams with pivot v.  Only pivots of degree <= 3 produce
/// candidates; facial cycles are taken in both orientations.
std::vector<Multigram> candidates_at(const PlaneGraph& g, VertexId v);

/// Safety predicate.  Assumes the admissibility clauses of is_secure hold,
/// which keeps every path search bounded.
bool is_safe(const PlaneGraph& g, const Multigram& m);
bool is_secure(const PlaneGraph& g, const Multigram& m, const ConstraintCycle& c);

std::optional<Multigram> find_secure_with_pivot(const PlaneGraph& g, VertexId v,
                                                const ConstraintCycle& c);

/// Neighbor of v (degree three) other than a and b, or kNoVertex.
VertexId third_neighbor(const PlaneGraph& g, VertexId v, VertexId a, VertexId b);

}  // namespace trifree
