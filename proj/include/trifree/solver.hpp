#pragma once

// Worklist-driven 3-coloring of triangle-free plane graphs.

#include <array>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "trifree/closeness.hpp"
#include "trifree/coloring.hpp"
#include "trifree/multigram.hpp"
#include "trifree/plane_graph.hpp"
#include "trifree/reducer.hpp"

namespace trifree {

/// FIFO multiset of candidate pivots.  Duplicates and dead ids are allowed.
class PivotQueue {
 public:
  void push(VertexId v);
  VertexId pop();
  bool empty() const { return head_ == items_.size(); }
  std::size_t size() const { return items_.size() - head_; }
  bool contains(VertexId v) const { return v < count_.size() && count_[v] > 0; }
  std::size_t insertions() const { return insertions_; }

 private:
  std::vector<VertexId> items_;
  std::size_t head_ = 0;
  std::vector<std::uint32_t> count_;
  std::size_t insertions_ = 0;
};

struct SolverStats {
  std::array<std::size_t, kNumKinds> reductions{};
  std::array<std::size_t, kNumKinds> vertices_removed{};
  std::size_t pivot_pops = 0;
  std::size_t queue_insertions = 0;
  std::uint64_t work = 0;
  // per-reduction and per-event extremes
  std::size_t max_edges_deleted = 0;
  std::size_t max_edges_added = 0;
  std::size_t min_vertices_removed = std::numeric_limits<std::size_t>::max();
  std::size_t max_edge_close = 0;
  std::size_t edge_events = 0;
  std::uint64_t max_pivot_work = 0;

  std::size_t total_reductions() const;
  std::size_t total_vertices_removed() const;
};

class Solver;

struct SolverOptions {
  bool validate = false;  // embedding scan and security guard after every reduction
  /// Called at every loop head, including the one where the queue is empty.
  std::function<void(const Solver&)> loop_head_hook;
};

class Solver {
 public:
  explicit Solver(PlaneGraph graph, SolverOptions options = {});

  Coloring run();
  /// cycle: facial cycle of length <= 5 in walk order; phi[i] colors cycle[i].
  Coloring run_precolored(std::span<const VertexId> cycle, std::span<const Color> phi);

  const PlaneGraph& graph() const { return g_; }
  const ConstraintCycle& constraint() const { return c_; }
  const PivotQueue& queue() const { return queue_; }
  const SolverStats& stats() const { return stats_; }
  const std::vector<ReductionRecord>& records() const { return records_; }

 private:
  void loop();
  void check_precoloring(std::span<const VertexId> cycle, std::span<const Color> phi) const;

  PlaneGraph g_;
  SolverOptions options_;
  ConstraintCycle c_;
  PivotQueue queue_;
  SolverStats stats_;
  std::vector<ReductionRecord> records_;
  std::size_t capacity_ = 0;
};

Coloring three_color(const PlaneGraph& g, const SolverOptions& options = {},
                     SolverStats* stats = nullptr);
Coloring three_color_precolored(const PlaneGraph& g, std::span<const VertexId> cycle,
                                std::span<const Color> phi, const SolverOptions& options = {},
                                SolverStats* stats = nullptr);

/// Linear-time triangle detection using a degree orientation.
bool has_triangle(const PlaneGraph& g);

}  // namespace trifree
