#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <set>

#include "trifree/catalog.hpp"
#include "trifree/error.hpp"
#include "trifree/oracle.hpp"
#include "trifree/plane_graph.hpp"

using namespace trifree;

namespace {

std::multiset<std::size_t> face_lengths(const PlaneGraph& g) {
  std::multiset<std::size_t> out;
  std::vector<bool> seen(g.dart_capacity(), false);
  for (DartId d = 0; d < g.dart_capacity(); ++d) {
    if (!g.dart_alive(d) || seen[d]) continue;
    const auto walk = g.trace_face(d);
    for (DartId e : walk) seen[e] = true;
    out.insert(walk.size());
  }
  return out;
}

DartId dart_between(const PlaneGraph& g, VertexId u, VertexId v) {
  for (DartId d : g.darts_of(u)) {
    if (g.head(d) == v) return d;
  }
  return kNoDart;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvalidSpec;
}

}  // namespace

TEST(Build, FourCycle) {
  const auto g = PlaneGraph::build(cycle_spec(4));
  EXPECT_EQ(g.num_vertices(), 4u);
  EXPECT_EQ(g.num_edges(), 4u);
  EXPECT_EQ(face_lengths(g), (std::multiset<std::size_t>{4, 4}));
}

TEST(Build, Cube) {
  const auto g = PlaneGraph::build(cube_spec());
  EXPECT_EQ(g.num_vertices(), 8u);
  EXPECT_EQ(g.num_edges(), 12u);
  EXPECT_EQ(face_lengths(g), (std::multiset<std::size_t>{4, 4, 4, 4, 4, 4}));
  for (DartId d = 0; d < g.dart_capacity(); ++d) EXPECT_EQ(g.trace_face(d).size(), 4u);
}

TEST(Build, Rejections) {
  EXPECT_EQ(code_of([] { PlaneGraph::build({{1}, {}}); }), ErrorCode::kAsymmetricRotation);
  EXPECT_EQ(code_of([] { PlaneGraph::build({{0, 0}}); }), ErrorCode::kSelfLoop);
  EXPECT_EQ(code_of([] { PlaneGraph::build({{1, 1}, {0, 0}}); }), ErrorCode::kDuplicateEdge);
  // reversing one rotation of a 3-valent vertex of K2,3 raises the genus
  EXPECT_NO_THROW(PlaneGraph::build(k23_spec()));
  auto bad = k23_spec();
  std::swap(bad[0][0], bad[0][1]);
  EXPECT_EQ(code_of([&] { PlaneGraph::build(bad); }), ErrorCode::kNonPlanarEmbedding);
}

TEST(TraceFace, TreeHasOneWalk) {
  const auto g = PlaneGraph::build(star_spec(5));
  EXPECT_EQ(g.trace_face(0).size(), 10u);
  EXPECT_EQ(g.count_faces(), 1u);
}

TEST(ShortFace, RespectsBound) {
  const auto g = PlaneGraph::build(cycle_spec(7));
  EXPECT_TRUE(g.short_face(0, 6).empty());
  EXPECT_EQ(g.short_face(0, 7).size(), 7u);
}

TEST(RemoveEdge, FourCycleBecomesPath) {
  auto g = PlaneGraph::build(cycle_spec(4));
  g.remove_edge(0);
  EXPECT_EQ(face_lengths(g), (std::multiset<std::size_t>{6}));
  g.validate();
}

TEST(RemoveEdge, BridgeSplitsComponent) {
  auto g = PlaneGraph::build(star_spec(3));
  EXPECT_EQ(g.count_components(), 1u);
  g.remove_edge(dart_between(g, 0, 1));
  EXPECT_EQ(g.count_components(), 2u);
  g.validate();
}

TEST(RemoveEdge, CubeFacesMerge) {
  auto g = PlaneGraph::build(cube_spec());
  g.remove_edge(dart_between(g, 0, 1));
  EXPECT_EQ(face_lengths(g), (std::multiset<std::size_t>{4, 4, 4, 4, 6}));
  g.validate();
}

TEST(AddEdge, ChordsOfHexagon) {
  {
    auto g = PlaneGraph::build(cycle_spec(6));
    const DartId d0 = dart_between(g, 0, 1);
    const DartId d3 = dart_between(g, 3, 4);
    g.add_edge(d0, d3);
    EXPECT_EQ(face_lengths(g), (std::multiset<std::size_t>{4, 4, 6}));
    g.validate();
  }
  {
    auto g = PlaneGraph::build(cycle_spec(6));
    g.add_edge(dart_between(g, 0, 1), dart_between(g, 2, 3));
    EXPECT_EQ(face_lengths(g), (std::multiset<std::size_t>{3, 5, 6}));
  }
}

TEST(AddEdge, DifferentFaces) {
  auto g = PlaneGraph::build(cycle_spec(6));
  EXPECT_EQ(code_of([&] { g.add_edge(dart_between(g, 0, 1), dart_between(g, 3, 2)); }),
            ErrorCode::kDifferentFaces);
}

TEST(RemoveIsolatedVertex, Cases) {
  auto g = PlaneGraph::build(cycle_spec(4));
  EXPECT_EQ(code_of([&] { g.remove_isolated_vertex(0); }), ErrorCode::kNotIsolated);
  g.remove_edge(dart_between(g, 0, 1));
  g.remove_edge(dart_between(g, 0, 3));
  g.remove_isolated_vertex(0);
  EXPECT_EQ(g.num_vertices(), 3u);
  g.validate();

  auto single = PlaneGraph::build({{}});
  single.remove_isolated_vertex(0);
  EXPECT_TRUE(single.empty());
}

TEST(Degree, BigThreshold) {
  EXPECT_EQ(PlaneGraph::build(cube_spec()).degree(0), 3u);
  EXPECT_FALSE(PlaneGraph::build(cube_spec()).is_big(0));
  EXPECT_TRUE(PlaneGraph::build(star_spec(60)).is_big(0));
  EXPECT_FALSE(PlaneGraph::build(star_spec(59)).is_big(0));
}

TEST(Adjacent, CubeAndGuard) {
  const auto cube = PlaneGraph::build(cube_spec());
  EXPECT_TRUE(cube.adjacent(0, 1));
  EXPECT_FALSE(cube.adjacent(0, 6));
  const auto hubs = PlaneGraph::build(hub_spec(60, true));
  EXPECT_EQ(code_of([&] { (void)hubs.adjacent(120, 121); }), ErrorCode::kBothBig);
}

TEST(DistanceAtMostTwo, Cases) {
  const auto c4 = PlaneGraph::build(cycle_spec(4));
  EXPECT_TRUE(c4.distance_at_most_two(0, 2));
  EXPECT_TRUE(c4.distance_at_most_two(1, 1));
  const auto path = PlaneGraph::build({{1}, {0, 2}, {1, 3}, {2}});
  EXPECT_FALSE(path.distance_at_most_two(0, 3));
}

TEST(EdgeVicinity, Cases) {
  const auto c4 = PlaneGraph::build(cycle_spec(4));
  auto v = c4.edge_vicinity(0);
  EXPECT_TRUE(v.short_boundary);
  EXPECT_EQ(std::set<VertexId>(v.vertices.begin(), v.vertices.end()).size(), 4u);

  const auto c20 = PlaneGraph::build(cycle_spec(20));
  v = c20.edge_vicinity(0);
  EXPECT_FALSE(v.short_boundary);
  // walk distance <= 2 from either end of the edge
  EXPECT_EQ(std::set<VertexId>(v.vertices.begin(), v.vertices.end()).size(), 6u);

  const auto k2 = PlaneGraph::build({{1}, {0}});
  v = k2.edge_vicinity(0);
  EXPECT_TRUE(v.short_boundary);
  EXPECT_EQ(std::set<VertexId>(v.vertices.begin(), v.vertices.end()), (std::set<VertexId>{0, 1}));
}

TEST(SmallReachable, Cases) {
  const auto star = PlaneGraph::build(star_spec(60));
  EXPECT_EQ(star.small_reachable(0, 3), std::vector<VertexId>{0});

  const auto cube = PlaneGraph::build(cube_spec());
  const auto r = cube.small_reachable(0, 2);
  EXPECT_EQ(r.size(), 7u);
  EXPECT_EQ(std::count(r.begin(), r.end(), 6u), 0);

  const auto path = PlaneGraph::build({{1}, {0, 2}, {1, 3}, {2, 4}, {3, 5}, {4}});
  auto p = path.small_reachable(0, 4);
  std::sort(p.begin(), p.end());
  EXPECT_EQ(p, (std::vector<VertexId>{0, 1, 2, 3, 4}));
}

TEST(IdentifyAcrossFace, FourCycle) {
  auto g = PlaneGraph::build(cycle_spec(4));
  const DartId d0 = dart_between(g, 0, 1);
  const DartId d2 = dart_between(g, 2, 3);
  const auto res = g.identify_across_face(0, 2, d0, d2);
  EXPECT_EQ(res.survivor, 0u);
  EXPECT_EQ(res.removed_parallel.size(), 2u);
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.num_edges(), 2u);
  g.validate();
}

TEST(IdentifyAcrossFace, CubeOppositeCorners) {
  auto g = PlaneGraph::build(cube_spec());
  DartId d0 = dart_between(g, 0, 3);
  if (g.origin(g.face_next(g.face_next(d0))) != 2) d0 = dart_between(g, 0, 1);
  const DartId face_dart = g.face_next(g.face_next(d0));
  ASSERT_EQ(g.origin(face_dart), 2u);
  g.identify_across_face(0, 2, d0, face_dart);
  EXPECT_EQ(g.num_vertices(), 7u);
  EXPECT_EQ(g.num_edges(), 10u);
  g.validate();
  EXPECT_TRUE(is_triangle_free(SimpleGraph::from_plane(g)));
}

TEST(IdentifyAcrossFace, HexagonNeighborsOfOne) {
  auto g = PlaneGraph::build(cycle_spec(6));
  const DartId d1 = dart_between(g, 1, 2);
  const DartId d3 = dart_between(g, 3, 4);
  const auto res = g.identify_across_face(1, 3, d1, d3);
  EXPECT_EQ(res.removed_parallel.size(), 1u);
  EXPECT_EQ(g.num_vertices(), 5u);
  EXPECT_EQ(g.num_edges(), 5u);
  g.validate();
}

TEST(IdentifyAcrossFace, Preconditions) {
  auto g = PlaneGraph::build(cube_spec());
  const DartId d = dart_between(g, 0, 1);
  EXPECT_EQ(code_of([&] { g.identify_across_face(0, 1, d, g.face_next(d)); }),
            ErrorCode::kAdjacentEndpoints);
  EXPECT_EQ(code_of([&] { g.identify_across_face(0, 6, d, dart_between(g, 6, 5)); }),
            ErrorCode::kNotSameFace);
}

TEST(Mutations, RandomDeletionsKeepInvariants) {
  std::mt19937_64 rng(7);
  auto g = PlaneGraph::build(grid_spec(8));
  while (g.num_edges() > 0) {
    std::vector<DartId> alive;
    for (DartId d = 0; d < g.dart_capacity(); d += 2) {
      if (g.dart_alive(d)) alive.push_back(d);
    }
    g.remove_edge(alive[rng() % alive.size()]);
    g.validate();
  }
  EXPECT_EQ(g.count_components(), 64u);
  EXPECT_EQ(g.count_faces(), 64u);
}

TEST(RotationSpec, RoundTrip) {
  const auto spec = dodecahedron_spec();
  const auto g = PlaneGraph::build(spec);
  const auto h = PlaneGraph::build(g.rotation_spec());
  EXPECT_EQ(h.num_edges(), 30u);
  EXPECT_EQ(face_lengths(h), face_lengths(g));
}
