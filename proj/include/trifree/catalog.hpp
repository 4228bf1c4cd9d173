#pragma once

// Hand-built instances.

#include <string>
#include <utility>
#include <vector>

#include "trifree/plane_graph.hpp"

namespace trifree {

struct Point {
  double x = 0;
  double y = 0;
};

/// Rotation system of a straight-line drawing: neighbors sorted clockwise.
RotationSpec rotation_from_drawing(const std::vector<Point>& points,
                                   const std::vector<std::pair<VertexId, VertexId>>& edges);

RotationSpec cycle_spec(std::size_t k);
RotationSpec k23_spec();
RotationSpec cube_spec();
RotationSpec dodecahedron_spec();
RotationSpec grid_spec(std::size_t k);
/// Hub joined to every other vertex of a rim of length 2k; with a second hub
/// outside the rim joined to the remaining rim vertices.
RotationSpec hub_spec(std::size_t k, bool outer_hub);
RotationSpec star_spec(std::size_t leaves);

/// Grötzsch graph: triangle-free, 4-chromatic, not planar.
std::vector<std::pair<VertexId, VertexId>> grotzsch_edges();

struct NamedSpec {
  std::string name;
  RotationSpec spec;
};

/// C4, C5, C6, K2,3, cube, dodecahedron, 3x3 grid.
std::vector<NamedSpec> hand_instances();

}  // namespace trifree
