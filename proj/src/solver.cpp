#include "trifree/solver.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "trifree/error.hpp"

namespace trifree {

void PivotQueue::push(VertexId v) {
  if (v >= count_.size()) count_.resize(std::max<std::size_t>(v + 1, 2 * count_.size()), 0);
  ++count_[v];
  items_.push_back(v);
  ++insertions_;
}

VertexId PivotQueue::pop() {
  const VertexId v = items_[head_++];
  --count_[v];
  if (head_ > 1024 && head_ * 2 > items_.size()) {
    items_.erase(items_.begin(), items_.begin() + static_cast<std::ptrdiff_t>(head_));
    head_ = 0;
  }
  return v;
}

std::size_t SolverStats::total_reductions() const {
  return std::accumulate(reductions.begin(), reductions.end(), std::size_t{0});
}

std::size_t SolverStats::total_vertices_removed() const {
  return std::accumulate(vertices_removed.begin(), vertices_removed.end(), std::size_t{0});
}

bool has_triangle(const PlaneGraph& g) {
  auto rank_less = [&](VertexId a, VertexId b) {
    const auto da = g.degree(a), db = g.degree(b);
    return da != db ? da < db : a < b;
  };
  std::vector<VertexId> mark(g.vertex_capacity(), kNoVertex);
  for (VertexId u : g.alive_vertices()) {
    std::vector<VertexId> up;
    for (VertexId v : g.neighbors(u)) {
      if (rank_less(u, v)) {
        up.push_back(v);
        mark[v] = u;
      }
    }
    for (VertexId v : up) {
      for (VertexId w : g.neighbors(v)) {
        if (w != u && mark[w] == u && rank_less(v, w)) return true;
      }
    }
  }
  return false;
}

Solver::Solver(PlaneGraph graph, SolverOptions options)
    : g_(std::move(graph)), options_(std::move(options)), capacity_(g_.vertex_capacity()) {
  g_.set_observer(nullptr);
}

void Solver::check_precoloring(std::span<const VertexId> cycle, std::span<const Color> phi) const {
  const std::size_t k = cycle.size();
  if (k < 3 || k > 5) {
    throw Error(ErrorCode::kNotAFacialCycle, "cycle length " + std::to_string(k) + " not in 3..5");
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!g_.alive(cycle[i])) {
      throw Error(ErrorCode::kNotAFacialCycle, "unknown vertex " + std::to_string(cycle[i]));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (cycle[i] == cycle[j]) {
        throw Error(ErrorCode::kNotAFacialCycle, "repeated vertex " + std::to_string(cycle[i]));
      }
    }
  }
  auto matches = [&](DartId d, bool reversed) {
    const auto walk = g_.short_face(d, k);
    if (walk.size() != k) return false;
    for (std::size_t i = 0; i < k; ++i) {
      const VertexId want = reversed ? cycle[(k - i) % k] : cycle[i];
      if (g_.origin(walk[i]) != want) return false;
    }
    return true;
  };
  bool facial = false;
  for (DartId d : g_.darts_of(cycle[0])) {
    if (g_.head(d) == cycle[1] && matches(d, false)) facial = true;
    if (g_.head(d) == cycle[k - 1] && matches(d, true)) facial = true;
  }
  if (!facial) throw Error(ErrorCode::kNotAFacialCycle, "vertices do not bound a face in order");

  if (phi.size() != k) {
    throw Error(ErrorCode::kImproperPrecoloring,
                "expected " + std::to_string(k) + " colors, got " + std::to_string(phi.size()));
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (phi[i] < 0 || phi[i] > 2) {
      throw Error(ErrorCode::kImproperPrecoloring, "color out of range at " + std::to_string(cycle[i]));
    }
    if (phi[i] == phi[(i + 1) % k]) {
      throw Error(ErrorCode::kImproperPrecoloring,
                  "adjacent vertices " + std::to_string(cycle[i]) + " and " +
                      std::to_string(cycle[(i + 1) % k]) + " share a color");
    }
  }
}

void Solver::loop() {
  for (VertexId v : g_.alive_vertices()) {
    if (g_.degree(v) <= 3 && !c_.contains(v)) queue_.push(v);
  }
  DirtyTracker tracker;
  ReduceOptions ropts;
  ropts.constraint = &c_;
  ropts.check_secure = options_.validate;
  ropts.validate = options_.validate;

  while (true) {
    if (options_.loop_head_hook) options_.loop_head_hook(*this);
    if (queue_.empty()) break;
    const VertexId v = queue_.pop();
    ++stats_.pivot_pops;
    if (!g_.alive(v)) continue;
    const auto before = g_.work();
    const auto m = find_secure_with_pivot(g_, v, c_);
    stats_.max_pivot_work = std::max(stats_.max_pivot_work, g_.work() - before);
    if (!m) continue;

    g_.set_observer(&tracker);
    ReductionRecord rec;
    try {
      rec = reduce(g_, *m, ropts);
    } catch (...) {
      g_.set_observer(nullptr);
      throw;
    }
    tracker.flush(g_);
    g_.set_observer(nullptr);

    const auto k = static_cast<std::size_t>(rec.kind);
    ++stats_.reductions[k];
    stats_.vertices_removed[k] += rec.vertices_removed();
    stats_.max_edges_deleted = std::max(stats_.max_edges_deleted, rec.edges_deleted);
    stats_.max_edges_added = std::max(stats_.max_edges_added, rec.edges_added);
    stats_.min_vertices_removed = std::min(stats_.min_vertices_removed, rec.vertices_removed());
    for (VertexId u : tracker.take()) {
      if (g_.alive(u) && g_.degree(u) <= 3 && !c_.contains(u)) queue_.push(u);
    }
    records_.push_back(std::move(rec));
  }
  stats_.max_edge_close = tracker.max_edge_close();
  stats_.edge_events = tracker.events();
  stats_.queue_insertions = queue_.insertions();
  stats_.work = g_.work();

  if (g_.num_vertices() != c_.vertices().size()) {
    if (has_triangle(g_)) throw Error(ErrorCode::kTriangleFound, "input graph has a triangle");
    throw Error(ErrorCode::kExhaustedQueueNonempty,
                std::to_string(g_.num_vertices()) + " vertices left with an empty queue");
  }
}

Coloring Solver::run() {
  if (has_triangle(g_)) throw Error(ErrorCode::kTriangleFound, "input graph has a triangle");
  c_ = ConstraintCycle();
  loop();
  return unwind(records_, Coloring(capacity_, kNoColor));
}

Coloring Solver::run_precolored(std::span<const VertexId> cycle, std::span<const Color> phi) {
  if (has_triangle(g_)) throw Error(ErrorCode::kTriangleFound, "input graph has a triangle");
  check_precoloring(cycle, phi);
  c_ = ConstraintCycle(std::vector<VertexId>(cycle.begin(), cycle.end()));
  loop();
  Coloring base(capacity_, kNoColor);
  for (std::size_t i = 0; i < cycle.size(); ++i) base[cycle[i]] = phi[i];
  return unwind(records_, std::move(base));
}

Coloring three_color(const PlaneGraph& g, const SolverOptions& options, SolverStats* stats) {
  Solver solver(g, options);
  auto out = solver.run();
  if (stats) *stats = solver.stats();
  return out;
}

Coloring three_color_precolored(const PlaneGraph& g, std::span<const VertexId> cycle,
                                std::span<const Color> phi, const SolverOptions& options,
                                SolverStats* stats) {
  Solver solver(g, options);
  auto out = solver.run_precolored(cycle, phi);
  if (stats) *stats = solver.stats();
  return out;
}

}  // namespace trifree
