#pragma once

// Closeness relations driving pivot re-insertion after edge events.

#include <cstdint>
#include <span>
#include <vector>

#include "trifree/plane_graph.hpp"

namespace trifree {

/// Small vertices joined to a small source by a path of length <= 4 through
/// small vertices, or sharing a facial cycle of length <= 6 with it.  Big
/// sources contribute nothing; dead sources are ignored.
std::vector<VertexId> close_to(const PlaneGraph& g, std::span<const VertexId> sources);

/// Vertices within facial-walk distance two of an end of the edge of d, on
/// both sides.  Distinct, at most ten.
std::vector<VertexId> close_to_edge(const PlaneGraph& g, DartId d);

/// Observer computing the dirty set of a sequence of edge events.  Endpoint
/// closeness is evaluated with the edge absent, edge closeness with the edge
/// present.
class DirtyTracker final : public MutationObserver {
 public:
  void before_edge_removed(const PlaneGraph& g, DartId d) override;
  void after_edge_removed(const PlaneGraph& g, VertexId u, VertexId v) override;
  void before_edge_added(const PlaneGraph& g, VertexId u, VertexId v) override;
  void after_edge_added(const PlaneGraph& g, DartId d) override;

  /// Evaluates endpoint closeness of events seen since the last flush.
  void flush(const PlaneGraph& g);
  /// Returns the distinct dirty vertices collected so far and starts over.
  std::vector<VertexId> take();

  std::size_t max_edge_close() const { return max_edge_close_; }
  std::size_t events() const { return events_; }

 private:
  void mark(VertexId v);

  std::vector<VertexId> pending_;
  std::vector<VertexId> dirty_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 1;
  std::size_t max_edge_close_ = 0;
  std::size_t events_ = 0;
};

}  // namespace trifree
