#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trifree/error.hpp"
#include "trifree/generators.hpp"
#include "trifree/graph_io.hpp"
#include "trifree/oracle.hpp"
#include "trifree/solver.hpp"

namespace py = pybind11;
using namespace trifree;

namespace {

std::vector<int> to_list(const Coloring& c) { return {c.begin(), c.end()}; }

Coloring from_list(const std::vector<int>& c) { return {c.begin(), c.end()}; }

}  // namespace

PYBIND11_MODULE(_trifree, m) {
  m.doc() = "3-coloring of triangle-free plane graphs given as clockwise rotation lists";

  static py::exception<Error> error(m, "TrifreeError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def(
      "three_color",
      [](const RotationSpec& rot) { return to_list(three_color(PlaneGraph::build(rot))); },
      py::arg("rotation"));
  m.def(
      "three_color_precolored",
      [](const RotationSpec& rot, const std::vector<VertexId>& cycle, const std::vector<int>& phi) {
        const Coloring p = from_list(phi);
        return to_list(three_color_precolored(PlaneGraph::build(rot), cycle, p));
      },
      py::arg("rotation"), py::arg("cycle"), py::arg("phi"));
  m.def(
      "generate",
      [](const std::string& kind, std::size_t size, std::uint64_t seed, double deletion) {
        const auto k = parse_gen_kind(kind);
        if (!k) throw Error(ErrorCode::kInvalidSpec, "unknown kind " + kind);
        return generate({*k, size, seed, deletion}).rotation_spec();
      },
      py::arg("kind"), py::arg("size"), py::arg("seed") = 0, py::arg("deletion") = 0.0);
  m.def("parse", [](const std::string& text) { return parse_graph(text).rotation_spec(); });
  m.def("serialize", [](const RotationSpec& rot) { return serialize(PlaneGraph::build(rot)); });
  m.def("is_proper", [](const RotationSpec& rot, const std::vector<int>& c) {
    return is_proper(SimpleGraph::from_plane(PlaneGraph::build(rot)), from_list(c));
  });
  m.def("is_triangle_free", [](const RotationSpec& rot) {
    return is_triangle_free(SimpleGraph::from_plane(PlaneGraph::build(rot)));
  });
  m.def("brute_force_3color", [](const RotationSpec& rot) -> std::optional<std::vector<int>> {
    auto c = brute_force_3color(SimpleGraph::from_plane(PlaneGraph::build(rot)));
    if (!c) return std::nullopt;
    return to_list(*c);
  });
}
