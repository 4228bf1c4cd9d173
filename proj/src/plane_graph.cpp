#include "trifree/plane_graph.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "trifree/error.hpp"

namespace trifree {

namespace {

std::uint64_t pair_key(VertexId u, VertexId v) {
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

}  // namespace

PlaneGraph PlaneGraph::build(const RotationSpec& spec) {
  PlaneGraph g;
  const std::size_t n = spec.size();
  g.vertices_.resize(n);
  std::size_t total = 0;
  for (const auto& rot : spec) total += rot.size();
  g.darts_.reserve(total + (total & 1U));

  std::unordered_map<std::uint64_t, DartId> dart_of;
  dart_of.reserve(total * 2);
  std::vector<bool> claimed;
  claimed.reserve(total);

  for (VertexId u = 0; u < n; ++u) {
    g.vertices_[u].alive = true;
    for (VertexId v : spec[u]) {
      if (v >= n) {
        throw Error(ErrorCode::kAsymmetricRotation,
                    "vertex " + std::to_string(u) + " lists unknown neighbor " + std::to_string(v));
      }
      if (v == u) throw Error(ErrorCode::kSelfLoop, "vertex " + std::to_string(u) + " lists itself");
      if (dart_of.contains(pair_key(u, v))) {
        throw Error(ErrorCode::kDuplicateEdge,
                    "edge {" + std::to_string(u) + "," + std::to_string(v) + "} listed twice at " +
                        std::to_string(u));
      }
      DartId d;
      if (auto it = dart_of.find(pair_key(v, u)); it != dart_of.end()) {
        d = twin(it->second);
        claimed[d] = true;
      } else {
        d = static_cast<DartId>(g.darts_.size());
        g.darts_.emplace_back();
        g.darts_.emplace_back();
        claimed.push_back(true);
        claimed.push_back(false);
        g.darts_[d + 1].origin = v;
      }
      dart_of.emplace(pair_key(u, v), d);
      g.darts_[d].origin = u;
      g.darts_[d].alive = true;
    }
  }
  for (DartId d = 0; d < g.darts_.size(); ++d) {
    if (!claimed[d]) {
      throw Error(ErrorCode::kAsymmetricRotation,
                  "edge {" + std::to_string(g.darts_[twin(d)].origin) + "," +
                      std::to_string(g.darts_[d].origin) + "} is missing from the rotation of " +
                      std::to_string(g.darts_[d].origin));
    }
  }
  for (VertexId u = 0; u < n; ++u) {
    const auto& rot = spec[u];
    const std::size_t k = rot.size();
    auto& vert = g.vertices_[u];
    vert.degree = static_cast<std::uint32_t>(k);
    if (k == 0) continue;
    std::vector<DartId> ds(k);
    for (std::size_t i = 0; i < k; ++i) ds[i] = dart_of.at(pair_key(u, rot[i]));
    for (std::size_t i = 0; i < k; ++i) {
      g.darts_[ds[i]].next = ds[(i + 1) % k];
      g.darts_[ds[i]].prev = ds[(i + k - 1) % k];
    }
    vert.first = ds[0];
  }
  g.alive_vertices_ = n;
  g.alive_edges_ = g.darts_.size() / 2;

  // Euler characteristic per component.
  std::vector<std::uint32_t> comp(n, kNoVertex);
  std::vector<std::int64_t> chi;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < n; ++s) {
    if (comp[s] != kNoVertex) continue;
    const auto c = static_cast<std::uint32_t>(chi.size());
    chi.push_back(0);
    comp[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      chi[c] += 2;  // vertex counted once; edges subtract 1 per dart below
      if (g.vertices_[x].degree == 0) {
        chi[c] += 2;  // the single face around an isolated vertex
        continue;
      }
      DartId d = g.vertices_[x].first;
      do {
        chi[c] -= 1;
        VertexId y = g.head(d);
        if (comp[y] == kNoVertex) {
          comp[y] = c;
          stack.push_back(y);
        }
        d = g.darts_[d].next;
      } while (d != g.vertices_[x].first);
    }
  }
  // chi currently holds 2V - 2E (+2 per isolated vertex); faces add 2 each.
  std::vector<bool> seen(g.darts_.size(), false);
  for (DartId d = 0; d < g.darts_.size(); ++d) {
    if (seen[d]) continue;
    chi[comp[g.darts_[d].origin]] += 2;
    DartId e = d;
    do {
      seen[e] = true;
      e = g.face_next(e);
    } while (e != d);
  }
  for (std::size_t c = 0; c < chi.size(); ++c) {
    if (chi[c] != 4) {
      throw Error(ErrorCode::kNonPlanarEmbedding,
                  "a component has Euler characteristic " + std::to_string(chi[c] / 2) +
                      " instead of 2");
    }
  }
  return g;
}

void PlaneGraph::throw_dead_vertex(VertexId v) {
  throw Error(ErrorCode::kDeadVertex, "vertex " + std::to_string(v));
}

void PlaneGraph::require_dart(DartId d) const {
  if (!dart_alive(d)) throw Error(ErrorCode::kDeadDart, "dart " + std::to_string(d));
}

DartId PlaneGraph::any_dart(VertexId v) const {
  require_vertex(v);
  return vertices_[v].first;
}

std::vector<DartId> PlaneGraph::darts_of(VertexId v) const {
  require_vertex(v);
  std::vector<DartId> out;
  out.reserve(vertices_[v].degree);
  DartId first = vertices_[v].first;
  if (first == kNoDart) return out;
  DartId d = first;
  do {
    out.push_back(d);
    d = darts_[d].next;
  } while (d != first);
  work_ += out.size();
  return out;
}

std::vector<VertexId> PlaneGraph::neighbors(VertexId v) const {
  require_vertex(v);
  const Vertex& x = vertices_[v];
  std::vector<VertexId> out(x.degree);
  DartId d = x.first;
  for (std::uint32_t i = 0; i < x.degree; ++i, d = darts_[d].next) out[i] = head(d);
  work_ += x.degree;
  return out;
}

std::vector<VertexId> PlaneGraph::alive_vertices() const {
  std::vector<VertexId> out;
  out.reserve(alive_vertices_);
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].alive) out.push_back(v);
  }
  return out;
}

std::vector<DartId> PlaneGraph::trace_face(DartId d) const {
  require_dart(d);
  std::vector<DartId> walk;
  DartId e = d;
  do {
    walk.push_back(e);
    e = face_next(e);
  } while (e != d);
  work_ += walk.size();
  return walk;
}

std::vector<DartId> PlaneGraph::short_face(DartId d, std::size_t max_len) const {
  require_dart(d);
  std::vector<DartId> walk;
  walk.reserve(max_len);
  DartId e = d;
  do {
    if (walk.size() == max_len) {
      work_ += walk.size();
      return {};
    }
    walk.push_back(e);
    e = face_next(e);
  } while (e != d);
  work_ += walk.size();
  return walk;
}

std::size_t PlaneGraph::face_length_at_most(DartId d, std::size_t max_len) const {
  require_dart(d);
  std::size_t len = 0;
  DartId e = d;
  do {
    if (len == max_len) {
      work_ += len;
      return 0;
    }
    ++len;
    e = face_next(e);
  } while (e != d);
  work_ += len;
  return len;
}

bool PlaneGraph::same_orbit(DartId a, DartId b) const {
  DartId e = a;
  do {
    ++work_;
    if (e == b) return true;
    e = face_next(e);
  } while (e != a);
  return false;
}

void PlaneGraph::unsplice(DartId d) {
  Vertex& v = vertices_[darts_[d].origin];
  if (v.degree == 1) {
    v.first = kNoDart;
  } else {
    DartId p = darts_[d].prev;
    DartId n = darts_[d].next;
    darts_[p].next = n;
    darts_[n].prev = p;
    if (v.first == d) v.first = n;
  }
  --v.degree;
  ++work_;
}

void PlaneGraph::splice_before(DartId d, VertexId v, DartId before) {
  Vertex& vert = vertices_[v];
  darts_[d].origin = v;
  if (before == kNoDart) {
    darts_[d].next = d;
    darts_[d].prev = d;
    vert.first = d;
  } else {
    DartId p = darts_[before].prev;
    darts_[p].next = d;
    darts_[d].prev = p;
    darts_[d].next = before;
    darts_[before].prev = d;
  }
  ++vert.degree;
  ++work_;
}

void PlaneGraph::remove_edge(DartId d) {
  require_dart(d);
  const VertexId u = origin(d);
  const VertexId v = head(d);
  if (observer_) observer_->before_edge_removed(*this, d);
  unsplice(d);
  unsplice(twin(d));
  darts_[d].alive = false;
  darts_[twin(d)].alive = false;
  --alive_edges_;
  if (observer_) observer_->after_edge_removed(*this, u, v);
}

DartId PlaneGraph::insert_edge(VertexId u, DartId before_u, VertexId v, DartId before_v) {
  if (observer_) observer_->before_edge_added(*this, u, v);
  const auto d = static_cast<DartId>(darts_.size());
  darts_.emplace_back();
  darts_.emplace_back();
  darts_[d].alive = true;
  darts_[d + 1].alive = true;
  splice_before(d, u, before_u);
  splice_before(d + 1, v, before_v);
  ++alive_edges_;
  if (observer_) observer_->after_edge_added(*this, d);
  return d;
}

DartId PlaneGraph::add_edge(DartId d_u, DartId d_v) {
  require_dart(d_u);
  require_dart(d_v);
  const VertexId u = origin(d_u);
  const VertexId v = origin(d_v);
  if (u == v) throw Error(ErrorCode::kSameOrigin, "both darts leave vertex " + std::to_string(u));
  if (!same_orbit(d_u, d_v)) {
    throw Error(ErrorCode::kDifferentFaces, "darts " + std::to_string(d_u) + " and " +
                                                std::to_string(d_v) + " lie on different faces");
  }
  return insert_edge(u, d_u, v, d_v);
}

VertexId PlaneGraph::add_vertex() {
  const auto v = static_cast<VertexId>(vertices_.size());
  vertices_.push_back(Vertex{kNoDart, 0, true});
  ++alive_vertices_;
  return v;
}

void PlaneGraph::remove_isolated_vertex(VertexId v) {
  require_vertex(v);
  if (vertices_[v].degree != 0) {
    throw Error(ErrorCode::kNotIsolated, "vertex " + std::to_string(v) + " has degree " +
                                             std::to_string(vertices_[v].degree));
  }
  vertices_[v].alive = false;
  --alive_vertices_;
  ++work_;
}

IdentifyResult PlaneGraph::identify_across_face(VertexId a, VertexId b, DartId d_a, DartId d_b) {
  require_vertex(a);
  require_vertex(b);
  require_dart(d_a);
  require_dart(d_b);
  if (origin(d_a) != a || origin(d_b) != b || a == b) {
    throw Error(ErrorCode::kNotSameFace, "darts do not leave the identified vertices");
  }
  if (!same_orbit(d_a, d_b)) {
    throw Error(ErrorCode::kNotSameFace, "vertices " + std::to_string(a) + " and " +
                                             std::to_string(b) + " are not on the given face");
  }
  if (adjacent(a, b)) {
    throw Error(ErrorCode::kAdjacentEndpoints,
                "vertices " + std::to_string(a) + " and " + std::to_string(b) + " are adjacent");
  }
  return merge_vertices(a, b, d_a, d_b);
}

IdentifyResult PlaneGraph::merge_vertices(VertexId a, VertexId b, DartId d_a, DartId d_b) {
  require_vertex(a);
  require_vertex(b);
  IdentifyResult result;
  result.survivor = a;

  if (vertices_[b].degree > 0) {
    if (d_b == kNoDart) d_b = vertices_[b].first;
    const bool a_isolated = vertices_[a].degree == 0;
    if (!a_isolated && d_a == kNoDart) d_a = vertices_[a].first;

    // Splice faces of length two can only appear at both ends of the block.
    const VertexId w_first = a_isolated ? kNoVertex : head(darts_[d_a].prev);
    const VertexId w_last = a_isolated ? kNoVertex : head(d_a);

    std::vector<DartId> block;
    block.reserve(vertices_[b].degree);
    DartId t = d_b;
    do {
      block.push_back(t);
      t = darts_[t].next;
    } while (t != d_b);
    work_ += block.size();

    DartId anchor = a_isolated ? kNoDart : d_a;
    for (std::size_t i = 0; i < block.size(); ++i) {
      const DartId moved = block[i];
      const VertexId w = head(moved);
      const bool parallel =
          (i == 0 && w == w_first) || (i + 1 == block.size() && w == w_last);
      if (parallel) {
        result.removed_parallel.emplace_back(a, w);
        remove_edge(moved);
        continue;
      }
      const DartId back = twin(moved);
      if (observer_) observer_->before_edge_removed(*this, moved);
      const DartId back_next = vertices_[w].degree > 1 ? darts_[back].next : kNoDart;
      unsplice(moved);
      unsplice(back);
      --alive_edges_;
      if (observer_) {
        observer_->after_edge_removed(*this, b, w);
        observer_->before_edge_added(*this, a, w);
      }
      splice_before(moved, a, anchor);
      if (anchor == kNoDart) anchor = moved;
      splice_before(back, w, back_next);
      ++alive_edges_;
      ++result.moved;
      if (observer_) observer_->after_edge_added(*this, moved);
    }
  }
  vertices_[b].alive = false;
  vertices_[b].first = kNoDart;
  --alive_vertices_;
  return result;
}

bool PlaneGraph::adjacent(VertexId u, VertexId v) const {
  require_vertex(u);
  require_vertex(v);
  if (vertices_[u].degree > vertices_[v].degree) std::swap(u, v);
  if (vertices_[u].degree > kDegreeCap) {
    throw Error(ErrorCode::kBothBig, "vertices " + std::to_string(u) + " and " +
                                         std::to_string(v) + " are both big");
  }
  DartId first = vertices_[u].first;
  if (first == kNoDart) return false;
  DartId d = first;
  do {
    ++work_;
    if (head(d) == v) return true;
    d = darts_[d].next;
  } while (d != first);
  return false;
}

std::uint32_t PlaneGraph::next_epoch() const {
  if (stamp_.size() < vertices_.size()) stamp_.resize(vertices_.size(), 0);
  if (++stamp_epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    stamp_epoch_ = 1;
  }
  return stamp_epoch_;
}

bool PlaneGraph::distance_at_most_two(VertexId u, VertexId v) const {
  require_vertex(u);
  require_vertex(v);
  if (std::max(vertices_[u].degree, vertices_[v].degree) > kDegreeCap) {
    throw Error(ErrorCode::kDegreeCapExceeded,
                "distance query on big vertex " +
                    std::to_string(vertices_[u].degree > kDegreeCap ? u : v));
  }
  if (u == v) return true;
  const std::uint32_t epoch = next_epoch();
  for (DartId d = vertices_[u].first, i = 0; i < vertices_[u].degree; ++i, d = darts_[d].next) {
    ++work_;
    const VertexId w = head(d);
    if (w == v) return true;
    stamp_[w] = epoch;
  }
  for (DartId d = vertices_[v].first, i = 0; i < vertices_[v].degree; ++i, d = darts_[d].next) {
    ++work_;
    if (stamp_[head(d)] == epoch) return true;
  }
  return false;
}

EdgeVicinity PlaneGraph::edge_vicinity(DartId d) const {
  require_dart(d);
  EdgeVicinity out;
  out.vertices.reserve(6);
  const DartId back1 = face_prev(d);
  const DartId back2 = face_prev(back1);
  const DartId fwd1 = face_next(d);
  const DartId fwd2 = face_next(fwd1);
  const DartId fwd3 = face_next(fwd2);
  for (DartId e : {back2, back1, d, fwd1, fwd2, fwd3}) {
    const VertexId x = origin(e);
    if (std::find(out.vertices.begin(), out.vertices.end(), x) == out.vertices.end()) {
      out.vertices.push_back(x);
    }
  }
  out.short_boundary = face_length_at_most(d, 6) != 0;
  work_ += 5;
  return out;
}

std::vector<VertexId> PlaneGraph::small_reachable(VertexId v0, std::size_t depth) const {
  return small_reachable(std::span<const VertexId>(&v0, 1), depth);
}

std::vector<VertexId> PlaneGraph::small_reachable(std::span<const VertexId> sources,
                                                  std::size_t depth) const {
  const std::uint32_t epoch = next_epoch();
  std::vector<VertexId> order;
  std::vector<std::uint8_t> dist;
  order.reserve(64);
  dist.reserve(64);
  for (VertexId s : sources) {
    require_vertex(s);
    if (stamp_[s] == epoch) continue;
    stamp_[s] = epoch;
    order.push_back(s);
    dist.push_back(0);
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    const VertexId x = order[i];
    const Vertex& vx = vertices_[x];
    if (dist[i] >= depth || vx.degree > kDegreeCap) continue;
    DartId e = vx.first;
    for (std::uint32_t k = 0; k < vx.degree; ++k, e = darts_[e].next) {
      ++work_;
      const VertexId y = darts_[twin(e)].origin;
      if (stamp_[y] == epoch) continue;
      stamp_[y] = epoch;
      order.push_back(y);
      dist.push_back(static_cast<std::uint8_t>(dist[i] + 1));
    }
  }
  return order;
}

std::size_t PlaneGraph::count_faces() const {
  std::vector<bool> seen(darts_.size(), false);
  std::size_t faces = 0;
  for (DartId d = 0; d < darts_.size(); ++d) {
    if (!darts_[d].alive || seen[d]) continue;
    ++faces;
    DartId e = d;
    do {
      seen[e] = true;
      e = face_next(e);
    } while (e != d);
  }
  for (const Vertex& v : vertices_) {
    if (v.alive && v.degree == 0) ++faces;
  }
  return faces;
}

std::size_t PlaneGraph::count_components() const {
  std::vector<bool> seen(vertices_.size(), false);
  std::vector<VertexId> stack;
  std::size_t comps = 0;
  for (VertexId s = 0; s < vertices_.size(); ++s) {
    if (!vertices_[s].alive || seen[s]) continue;
    ++comps;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      DartId first = vertices_[x].first;
      if (first == kNoDart) continue;
      DartId d = first;
      do {
        VertexId y = head(d);
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
        d = darts_[d].next;
      } while (d != first);
    }
  }
  return comps;
}

void PlaneGraph::validate() const {
  auto fail = [](const std::string& what) { throw Error(ErrorCode::kEmbeddingCorruption, what); };
  std::size_t alive_darts = 0;
  for (DartId d = 0; d < darts_.size(); ++d) {
    const Dart& x = darts_[d];
    if (x.alive != darts_[twin(d)].alive) fail("twin liveness mismatch at dart " + std::to_string(d));
    if (!x.alive) continue;
    ++alive_darts;
    if (!alive(x.origin)) fail("dart " + std::to_string(d) + " leaves a dead vertex");
    if (x.origin == head(d)) fail("loop at vertex " + std::to_string(x.origin));
    if (!dart_alive(x.next) || !dart_alive(x.prev)) fail("dead rotation link at " + std::to_string(d));
    if (darts_[x.next].prev != d || darts_[x.prev].next != d) {
      fail("next/prev not inverse at dart " + std::to_string(d));
    }
    if (darts_[x.next].origin != x.origin) fail("rotation leaves its vertex at " + std::to_string(d));
  }
  if (alive_darts != 2 * alive_edges_) fail("edge counter out of sync");

  std::size_t alive_count = 0;
  std::size_t degree_sum = 0;
  std::vector<std::uint32_t> mark(vertices_.size(), kNoVertex);
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    const Vertex& vert = vertices_[v];
    if (!vert.alive) continue;
    ++alive_count;
    std::size_t len = 0;
    if (vert.first != kNoDart) {
      if (!dart_alive(vert.first) || darts_[vert.first].origin != v) {
        fail("bad first dart at vertex " + std::to_string(v));
      }
      DartId d = vert.first;
      do {
        if (darts_[d].origin != v) fail("foreign dart in rotation of " + std::to_string(v));
        const VertexId w = head(d);
        if (mark[w] == v) {
          fail("parallel edges " + std::to_string(v) + "-" + std::to_string(w));
        }
        mark[w] = v;
        ++len;
        if (len > alive_darts) fail("rotation of " + std::to_string(v) + " does not close");
        d = darts_[d].next;
      } while (d != vert.first);
    }
    if (len != vert.degree) fail("degree counter out of sync at vertex " + std::to_string(v));
    degree_sum += len;
  }
  if (alive_count != alive_vertices_) fail("vertex counter out of sync");
  if (degree_sum != alive_darts) fail("rotations do not cover all darts");

  // genus 0 per component
  std::vector<std::uint32_t> comp(vertices_.size(), kNoVertex);
  std::vector<std::int64_t> chi;
  std::vector<VertexId> stack;
  for (VertexId s = 0; s < vertices_.size(); ++s) {
    if (!vertices_[s].alive || comp[s] != kNoVertex) continue;
    const auto c = static_cast<std::uint32_t>(chi.size());
    chi.push_back(0);
    comp[s] = c;
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      chi[c] += 2;
      if (vertices_[x].degree == 0) {
        chi[c] += 2;
        continue;
      }
      DartId d = vertices_[x].first;
      do {
        chi[c] -= 1;
        VertexId y = head(d);
        if (comp[y] == kNoVertex) {
          comp[y] = c;
          stack.push_back(y);
        }
        d = darts_[d].next;
      } while (d != vertices_[x].first);
    }
  }
  std::vector<bool> seen(darts_.size(), false);
  for (DartId d = 0; d < darts_.size(); ++d) {
    if (!darts_[d].alive || seen[d]) continue;
    chi[comp[darts_[d].origin]] += 2;
    DartId e = d;
    do {
      seen[e] = true;
      e = face_next(e);
    } while (e != d);
  }
  for (auto value : chi) {
    if (value != 4) fail("component with Euler characteristic " + std::to_string(value / 2));
  }
}

RotationSpec PlaneGraph::rotation_spec() const {
  RotationSpec spec(vertices_.size());
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].alive) spec[v] = neighbors(v);
  }
  return spec;
}

}  // namespace trifree
