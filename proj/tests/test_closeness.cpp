#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "corpus.hpp"
#include "trifree/catalog.hpp"
#include "trifree/closeness.hpp"
#include "trifree/oracle.hpp"

using namespace trifree;

namespace {

std::set<VertexId> as_set(const std::vector<VertexId>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(CloseTo, MatchesOracleOnSmallGraphs) {
  std::vector<PlaneGraph> graphs{PlaneGraph::build(grid_spec(4)), PlaneGraph::build(grid_spec(6)),
                                 PlaneGraph::build(dodecahedron_spec()),
                                 PlaneGraph::build(hub_spec(60, false)),
                                 PlaneGraph::build(hub_spec(61, true))};
  for (const auto& g : graphs) {
    for (VertexId u : g.alive_vertices()) {
      const VertexId src[] = {u};
      const auto fast = as_set(close_to(g, src));
      for (VertexId w : g.alive_vertices()) {
        if (w == u) continue;
        EXPECT_EQ(fast.count(w) == 1, closeness_slow(g, u, w)) << "u=" << u << " w=" << w;
      }
    }
  }
}

TEST(CloseTo, BigSourceContributesNothing) {
  const auto g = PlaneGraph::build(star_spec(60));
  const VertexId src[] = {0};
  EXPECT_TRUE(close_to(g, src).empty());
}

TEST(CloseToEdge, BoundAndOracle) {
  for (const auto& inst : trifree::testing::small_corpus()) {
    const auto& g = inst.graph;
    for (DartId d = 0; d < g.dart_capacity(); d += 2) {
      if (!g.dart_alive(d)) continue;
      const auto fast = close_to_edge(g, d);
      EXPECT_LE(fast.size(), 10u);
      const auto s = as_set(fast);
      EXPECT_EQ(s.size(), fast.size());
      for (VertexId w : g.alive_vertices()) {
        EXPECT_EQ(s.count(w) == 1, close_to_edge_slow(g, g.origin(d), g.head(d), w))
            << inst.name << " edge " << d << " w " << w;
      }
    }
  }
}

TEST(DirtyTracker, SingleEdgeDeletion) {
  auto g = PlaneGraph::build({{1}, {0}});
  DirtyTracker t;
  g.set_observer(&t);
  g.remove_edge(0);
  g.set_observer(nullptr);
  t.flush(g);
  EXPECT_EQ(as_set(t.take()), (std::set<VertexId>{0, 1}));
  EXPECT_EQ(t.events(), 1u);
}

TEST(DirtyTracker, FourFaceEdgeClose) {
  auto g = PlaneGraph::build(grid_spec(5));
  DirtyTracker t;
  g.set_observer(&t);
  g.remove_edge(2 * 20);
  g.set_observer(nullptr);
  t.flush(g);
  EXPECT_LE(t.max_edge_close(), 10u);
  EXPECT_FALSE(t.take().empty());
}
