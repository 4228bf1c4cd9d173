#pragma once

// Text format:
//   # comment
//   p <n> <m>
//   v <id> <nbr1> <nbr2> ...      (clockwise, 0-based ids, one line per vertex)

#include <string>
#include <string_view>

#include "trifree/coloring.hpp"
#include "trifree/plane_graph.hpp"

namespace trifree {

RotationSpec parse_rotation(std::string_view text);
PlaneGraph parse_graph(std::string_view text);
/// Alive vertices renumbered in ascending id order; each rotation starts at
/// its lowest neighbor.
std::string serialize(const PlaneGraph& g);

/// Lines "id color"; '#' comments and blank lines are skipped.
Coloring parse_coloring(std::string_view text, std::size_t n);
std::string serialize_coloring(const PlaneGraph& g, const Coloring& coloring);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view text);

}  // namespace trifree
