#pragma once

// Mutable plane graph stored as a rotation system of darts (half-edges).
//
// Every edge is a pair of darts 2k and 2k+1 (twin = d ^ 1).  Darts leaving a
// vertex form a doubly linked cycle in clockwise order (next/prev).  The face
// successor is sigma(d) = next(twin(d)); its orbits are the facial walks, one
// per face of each connected component.  Vertex and dart ids are never reused.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace trifree {

using VertexId = std::uint32_t;
using DartId = std::uint32_t;

inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();
inline constexpr DartId kNoDart = std::numeric_limits<DartId>::max();

/// Degree cap for bounded queries.  A vertex is big iff its degree exceeds it.
inline constexpr std::size_t kDegreeCap = 59;
inline constexpr std::size_t kBigDegree = kDegreeCap + 1;

/// Clockwise neighbor list of every vertex; index = vertex id.
using RotationSpec = std::vector<std::vector<VertexId>>;

class PlaneGraph;

/// Receives a callback around every edge-level mutation.  "before" callbacks
/// see the graph with the edge present (removal) or absent (addition); "after"
/// callbacks see the opposite state.
class MutationObserver {
 public:
  virtual ~MutationObserver() = default;
  virtual void before_edge_removed(const PlaneGraph& g, DartId d) = 0;
  virtual void after_edge_removed(const PlaneGraph& g, VertexId u, VertexId v) = 0;
  virtual void before_edge_added(const PlaneGraph& g, VertexId u, VertexId v) = 0;
  virtual void after_edge_added(const PlaneGraph& g, DartId d) = 0;
};

/// Vertices within facial-walk distance two of an edge on one side.
struct EdgeVicinity {
  std::vector<VertexId> vertices;  // walk order, may repeat on short walks
  bool short_boundary = false;     // walk length <= 6
};

struct IdentifyResult {
  VertexId survivor = kNoVertex;
  std::vector<std::pair<VertexId, VertexId>> removed_parallel;
  std::size_t moved = 0;  // edges transferred from the absorbed vertex
};

class PlaneGraph {
 public:
  PlaneGraph() = default;

  static PlaneGraph build(const RotationSpec& spec);

  // --- sizes ---------------------------------------------------------------
  std::size_t vertex_capacity() const { return vertices_.size(); }
  std::size_t dart_capacity() const { return darts_.size(); }
  std::size_t num_vertices() const { return alive_vertices_; }
  std::size_t num_edges() const { return alive_edges_; }
  bool empty() const { return alive_vertices_ == 0; }

  // --- vertex and dart queries ---------------------------------------------
  bool alive(VertexId v) const { return v < vertices_.size() && vertices_[v].alive; }
  bool dart_alive(DartId d) const { return d < darts_.size() && darts_[d].alive; }

  std::size_t degree(VertexId v) const {
    require_vertex(v);
    return vertices_[v].degree;
  }
  bool is_big(VertexId v) const { return degree(v) >= kBigDegree; }
  bool is_small(VertexId v) const { return !is_big(v); }

  /// Some dart leaving v, or kNoDart when v is isolated.
  DartId any_dart(VertexId v) const;

  static DartId twin(DartId d) { return d ^ 1U; }
  VertexId origin(DartId d) const { return darts_[d].origin; }
  VertexId head(DartId d) const { return darts_[twin(d)].origin; }
  DartId next(DartId d) const { return darts_[d].next; }
  DartId prev(DartId d) const { return darts_[d].prev; }
  /// Face successor sigma(d) = next(twin(d)).
  DartId face_next(DartId d) const { return darts_[twin(d)].next; }
  DartId face_prev(DartId d) const { return twin(darts_[d].prev); }

  /// Darts leaving v in clockwise order starting at any_dart(v).
  std::vector<DartId> darts_of(VertexId v) const;
  std::vector<VertexId> neighbors(VertexId v) const;
  std::vector<VertexId> alive_vertices() const;

  /// Full facial walk (sigma-orbit) containing d.
  std::vector<DartId> trace_face(DartId d) const;
  /// Walks at most max_len sigma-steps from d.  Returns the orbit when its
  /// length is <= max_len, otherwise an empty vector.
  std::vector<DartId> short_face(DartId d, std::size_t max_len) const;
  /// Length of the facial walk of d when it is <= max_len, otherwise 0.
  std::size_t face_length_at_most(DartId d, std::size_t max_len) const;

  // --- mutations -----------------------------------------------------------
  /// Appends a new isolated vertex.
  VertexId add_vertex();
  void remove_edge(DartId d);
  /// Inserts an edge u-v with the new darts placed immediately before d_u and
  /// d_v in their rotations.  d_u and d_v must lie on one facial walk.
  DartId add_edge(DartId d_u, DartId d_v);
  /// Unchecked insertion used by reductions.  before_u / before_v may be
  /// kNoDart when the endpoint is isolated.  Joining two components is allowed.
  DartId insert_edge(VertexId u, DartId before_u, VertexId v, DartId before_v);
  void remove_isolated_vertex(VertexId v);

  /// Identifies b into a across the face that contains d_a and d_b.  b's
  /// rotation is spliced into a's as one contiguous block just before d_a,
  /// starting with d_b.  Edges that would become parallel (faces of length
  /// two next to the splice) are deleted instead.  The survivor is a.
  IdentifyResult identify_across_face(VertexId a, VertexId b, DartId d_a, DartId d_b);
  /// Same splice without the facial-walk and adjacency preconditions checks.
  /// Either dart may be kNoDart for an isolated endpoint; a and b may lie in
  /// different components.  Work is proportional to degree(b).
  IdentifyResult merge_vertices(VertexId a, VertexId b, DartId d_a, DartId d_b);

  // --- bounded queries -----------------------------------------------------
  bool adjacent(VertexId u, VertexId v) const;
  bool distance_at_most_two(VertexId u, VertexId v) const;
  EdgeVicinity edge_vicinity(DartId d) const;
  /// Vertices reachable from the sources by paths of length <= depth whose
  /// inner vertices (and sources) are small.  Big vertices are reported but
  /// never expanded.  Output is in BFS order.
  std::vector<VertexId> small_reachable(VertexId v0, std::size_t depth) const;
  std::vector<VertexId> small_reachable(std::span<const VertexId> sources,
                                        std::size_t depth) const;

  // --- diagnostics ---------------------------------------------------------
  /// Full scan of every structural invariant; throws EmbeddingCorruption.
  void validate() const;
  /// Number of face orbits (isolated vertices count one face each).
  std::size_t count_faces() const;
  std::size_t count_components() const;

  std::uint64_t work() const { return work_; }
  void reset_work() { work_ = 0; }
  void add_work(std::uint64_t w) const { work_ += w; }

  void set_observer(MutationObserver* observer) { observer_ = observer; }
  MutationObserver* observer() const { return observer_; }

  /// Rotation lists indexed by vertex id; dead vertices have empty lists.
  RotationSpec rotation_spec() const;

 private:
  struct Vertex {
    DartId first = kNoDart;
    std::uint32_t degree = 0;
    bool alive = false;
  };
  struct Dart {
    VertexId origin = kNoVertex;
    DartId next = kNoDart;
    DartId prev = kNoDart;
    bool alive = false;
  };

  void require_vertex(VertexId v) const {
    if (!alive(v)) throw_dead_vertex(v);
  }
  [[noreturn]] static void throw_dead_vertex(VertexId v);
  void require_dart(DartId d) const;
  void unsplice(DartId d);
  void splice_before(DartId d, VertexId v, DartId before);
  bool same_orbit(DartId a, DartId b) const;

  std::vector<Vertex> vertices_;
  std::vector<Dart> darts_;
  std::size_t alive_vertices_ = 0;
  std::size_t alive_edges_ = 0;
  mutable std::uint64_t work_ = 0;
  MutationObserver* observer_ = nullptr;
  // scratch for bounded BFS queries
  mutable std::vector<std::uint32_t> stamp_;
  mutable std::uint32_t stamp_epoch_ = 0;

  std::uint32_t next_epoch() const;
};

}  // namespace trifree
