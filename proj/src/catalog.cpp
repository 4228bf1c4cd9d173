#include "trifree/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace trifree {

RotationSpec rotation_from_drawing(const std::vector<Point>& points,
                                   const std::vector<std::pair<VertexId, VertexId>>& edges) {
  RotationSpec spec(points.size());
  for (auto [u, v] : edges) {
    spec[u].push_back(v);
    spec[v].push_back(u);
  }
  for (VertexId v = 0; v < spec.size(); ++v) {
    auto angle = [&](VertexId w) {
      return std::atan2(points[w].y - points[v].y, points[w].x - points[v].x);
    };
    std::sort(spec[v].begin(), spec[v].end(),
              [&](VertexId a, VertexId b) { return angle(a) > angle(b); });
  }
  return spec;
}

namespace {

std::vector<Point> polygon(std::size_t k, double radius, double phase) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < k; ++i) {
    const double a = phase + 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(k);
    pts.push_back({radius * std::cos(a), radius * std::sin(a)});
  }
  return pts;
}

}  // namespace

RotationSpec cycle_spec(std::size_t k) {
  RotationSpec spec(k);
  for (std::size_t i = 0; i < k; ++i) {
    spec[i] = {static_cast<VertexId>((i + 1) % k), static_cast<VertexId>((i + k - 1) % k)};
  }
  return spec;
}

RotationSpec k23_spec() {
  std::vector<Point> pts{{0, 1}, {0, -1}, {-1, 0}, {0, 0}, {1, 0}};
  return rotation_from_drawing(pts, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
}

RotationSpec cube_spec() {
  std::vector<Point> pts{{-2, 2}, {2, 2}, {2, -2}, {-2, -2}, {-1, 1}, {1, 1}, {1, -1}, {-1, -1}};
  return rotation_from_drawing(
      pts, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

RotationSpec dodecahedron_spec() {
  // outer 5-cycle 0..4, middle 10-cycle 5..14, inner 5-cycle 15..19
  const double deg = std::numbers::pi / 180;
  std::vector<Point> pts;
  for (auto& p : polygon(5, 3, 90 * deg)) pts.push_back(p);
  for (auto& p : polygon(10, 2, 90 * deg)) pts.push_back(p);
  for (auto& p : polygon(5, 1, 126 * deg)) pts.push_back(p);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, 5 + 2 * i);
    edges.emplace_back(5 + 2 * i + 1, 15 + i);
    edges.emplace_back(15 + i, 15 + (i + 1) % 5);
  }
  for (VertexId j = 0; j < 10; ++j) edges.emplace_back(5 + j, 5 + (j + 1) % 10);
  return rotation_from_drawing(pts, edges);
}

RotationSpec grid_spec(std::size_t k) {
  RotationSpec spec(k * k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) {
      auto& rot = spec[r * k + c];
      if (r > 0) rot.push_back(static_cast<VertexId>((r - 1) * k + c));
      if (c + 1 < k) rot.push_back(static_cast<VertexId>(r * k + c + 1));
      if (r + 1 < k) rot.push_back(static_cast<VertexId>((r + 1) * k + c));
      if (c > 0) rot.push_back(static_cast<VertexId>(r * k + c - 1));
    }
  }
  return spec;
}

RotationSpec hub_spec(std::size_t k, bool outer_hub) {
  const std::size_t rim = 2 * k;
  auto pts = polygon(rim, 2, 0);
  pts.push_back({0, 0});
  const auto hub = static_cast<VertexId>(rim);
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId i = 0; i < rim; ++i) {
    edges.emplace_back(i, static_cast<VertexId>((i + 1) % rim));
    if (i % 2 == 0) edges.emplace_back(hub, i);
  }
  auto spec = rotation_from_drawing(pts, edges);
  if (!outer_hub) return spec;
  // The outer hub sits beyond the rim: each odd rim vertex sees it straight
  // outward, and around the hub the rim runs in increasing angle.
  const auto outer = static_cast<VertexId>(rim + 1);
  spec.emplace_back();
  for (VertexId i = 1; i < rim; i += 2) {
    auto& rot = spec[i];
    const double out = std::atan2(pts[i].y, pts[i].x);
    auto angle = [&](VertexId w) {
      return w == outer ? out : std::atan2(pts[w].y - pts[i].y, pts[w].x - pts[i].x);
    };
    rot.push_back(outer);
    std::sort(rot.begin(), rot.end(), [&](VertexId a, VertexId b) { return angle(a) > angle(b); });
    spec[outer].push_back(i);
  }
  return spec;
}

RotationSpec star_spec(std::size_t leaves) {
  RotationSpec spec(leaves + 1);
  for (VertexId i = 1; i <= leaves; ++i) {
    spec[0].push_back(i);
    spec[i].push_back(0);
  }
  return spec;
}

std::vector<std::pair<VertexId, VertexId>> grotzsch_edges() {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(5 + i, (i + 1) % 5);
    e.emplace_back(5 + i, (i + 4) % 5);
    e.emplace_back(10, 5 + i);
  }
  return e;
}

std::vector<NamedSpec> hand_instances() {
  return {
      {"C4", cycle_spec(4)},          {"C5", cycle_spec(5)},
      {"C6", cycle_spec(6)},          {"K2,3", k23_spec()},
      {"cube", cube_spec()},          {"dodecahedron", dodecahedron_spec()},
      {"grid3x3", grid_spec(3)},
  };
}

}  // namespace trifree
