#pragma once

// Reductions of a graph at a secure multigram and the matching extension of
// 3-colorings back to the unreduced graph.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "trifree/coloring.hpp"
#include "trifree/multigram.hpp"
#include "trifree/plane_graph.hpp"

namespace trifree {

struct EdgeDelta {
  bool added = false;
  VertexId u = kNoVertex;
  VertexId v = kNoVertex;
};

struct RemovedVertex {
  VertexId id = kNoVertex;
  std::vector<VertexId> neighbors;  // at deletion time, before any edge of the reduction went
};

struct ReductionRecord {
  Kind kind = Kind::kMonogram;
  std::vector<VertexId> gram;
  std::vector<VertexId> aux;
  std::vector<RemovedVertex> removed;
  std::vector<std::pair<VertexId, VertexId>> identified;  // (survivor, absorbed)
  std::vector<std::pair<VertexId, VertexId>> added_edges;
  std::vector<EdgeDelta> deltas;
  std::size_t edges_deleted = 0;
  std::size_t edges_added = 0;

  std::size_t vertices_removed() const { return removed.size() + identified.size(); }
};

inline constexpr std::size_t kMaxEdgesDeleted = 126;
inline constexpr std::size_t kMaxEdgesAdded = 116;

struct ReduceOptions {
  const ConstraintCycle* constraint = nullptr;  // survivors of identifications stay on C
  bool check_secure = false;                    // InsecureMultigram guard
  bool validate = false;                        // full embedding scan plus local triangle check
};

/// Replaces g by its reduction at m.  Any observer installed on g keeps
/// receiving every edge event.
ReductionRecord reduce(PlaneGraph& g, const Multigram& m, const ReduceOptions& options = {});

/// Extends a proper coloring of the reduced graph in place.
void extend_in_place(const ReductionRecord& record, Coloring& coloring);
Coloring extend(const ReductionRecord& record, Coloring coloring);

/// Folds extend over records from last to first.
Coloring unwind(std::span<const ReductionRecord> records, Coloring base);

}  // namespace trifree
