#include "trifree/closeness.hpp"

#include <algorithm>
#include <array>

namespace trifree {

std::vector<VertexId> close_to(const PlaneGraph& g, std::span<const VertexId> sources) {
  std::vector<VertexId> small_sources;
  small_sources.reserve(sources.size());
  for (VertexId s : sources) {
    if (g.alive(s) && g.is_small(s)) small_sources.push_back(s);
  }
  std::vector<VertexId> out;
  if (small_sources.empty()) return out;
  for (VertexId w : g.small_reachable(small_sources, 4)) {
    if (g.is_small(w)) out.push_back(w);
  }
  std::array<VertexId, 6> verts{};
  for (VertexId s : small_sources) {
    const DartId first = g.any_dart(s);
    if (first == kNoDart) continue;
    DartId d = first;
    do {
      const std::size_t len = g.face_length_at_most(d, 6);
      bool cycle = len >= 4;
      DartId e = d;
      for (std::size_t i = 0; cycle && i < len; ++i, e = g.face_next(e)) {
        verts[i] = g.origin(e);
        cycle = std::find(verts.begin(), verts.begin() + i, verts[i]) == verts.begin() + i;
      }
      if (cycle) {
        for (std::size_t i = 0; i < len; ++i) {
          if (g.is_small(verts[i])) out.push_back(verts[i]);
        }
      }
      d = g.next(d);
    } while (d != first);
  }
  return out;
}

std::vector<VertexId> close_to_edge(const PlaneGraph& g, DartId d) {
  auto out = g.edge_vicinity(d).vertices;
  out.reserve(10);
  for (VertexId w : g.edge_vicinity(PlaneGraph::twin(d)).vertices) {
    if (std::find(out.begin(), out.end(), w) == out.end()) out.push_back(w);
  }
  return out;
}

void DirtyTracker::mark(VertexId v) {
  if (v >= stamp_.size()) stamp_.resize(std::max<std::size_t>(v + 1, 2 * stamp_.size()), 0);
  if (stamp_[v] == epoch_) return;
  stamp_[v] = epoch_;
  dirty_.push_back(v);
}

void DirtyTracker::flush(const PlaneGraph& g) {
  if (pending_.empty()) return;
  for (VertexId v : close_to(g, pending_)) mark(v);
  pending_.clear();
}

void DirtyTracker::before_edge_removed(const PlaneGraph& g, DartId d) {
  flush(g);
  const auto near = close_to_edge(g, d);
  max_edge_close_ = std::max(max_edge_close_, near.size());
  for (VertexId v : near) mark(v);
  ++events_;
}

void DirtyTracker::after_edge_removed(const PlaneGraph&, VertexId u, VertexId v) {
  pending_.push_back(u);
  pending_.push_back(v);
}

void DirtyTracker::before_edge_added(const PlaneGraph& g, VertexId u, VertexId v) {
  pending_.push_back(u);
  pending_.push_back(v);
  flush(g);
}

void DirtyTracker::after_edge_added(const PlaneGraph& g, DartId d) {
  const auto near = close_to_edge(g, d);
  max_edge_close_ = std::max(max_edge_close_, near.size());
  for (VertexId v : near) mark(v);
  ++events_;
}

std::vector<VertexId> DirtyTracker::take() {
  std::vector<VertexId> out;
  out.swap(dirty_);
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  return out;
}

}  // namespace trifree
