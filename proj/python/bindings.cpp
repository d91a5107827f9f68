#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "grotzsch/discharging.hpp"
#include "grotzsch/io.hpp"
#include "grotzsch/oracle.hpp"
#include "grotzsch/solver.hpp"

namespace py = pybind11;
using namespace grotzsch;

PYBIND11_MODULE(_core, m) {
  m.doc() = "3-coloring engine for triangle-free plane graphs";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  py::class_<RotationGraph>(m, "Graph")
      .def_static(
          "build",
          [](std::vector<std::vector<int>> rot, std::pair<int, int> outer) {
            return RotationGraph::build(std::move(rot), Dart(outer.first, outer.second));
          },
          py::arg("rotations"), py::arg("outer"),
          "clockwise rotations plus a dart (tail, head) on the outer face")
      .def_property_readonly("n", &RotationGraph::vertex_count)
      .def_property_readonly("m", &RotationGraph::edge_count)
      .def("degree", &RotationGraph::degree)
      .def("rotation",
           [](const RotationGraph& g, int v) { return g.rotation(v); })
      .def("adjacent", &RotationGraph::adjacent)
      .def("faces",
           [](const RotationGraph& g) {
             std::vector<std::vector<int>> out;
             for (const FaceWalk& f : g.faces()) out.push_back(f.vertices());
             return out;
           })
      .def("outer_face",
           [](const RotationGraph& g) { return g.outer_face().vertices(); })
      .def("contains_triangle", &RotationGraph::contains_triangle)
      .def("__repr__", [](const RotationGraph& g) {
        return "<Graph n=" + std::to_string(g.vertex_count()) +
               " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("parse", [](const std::string& text) {
    ParsedFile pf = parse_graph_text(text);
    py::object boundary = py::none();
    if (pf.boundary)
      boundary = py::make_tuple(pf.boundary->cycle.verts, pf.boundary->colors);
    return py::make_tuple(std::move(pf.graph), boundary);
  });
  m.def(
      "serialize",
      [](const RotationGraph& g) { return serialize_graph(g); },
      py::arg("g"));
  m.def(
      "generate",
      [](const std::string& family, int n, int m_, std::uint64_t seed) {
        GenSpec spec;
        spec.family = family_from_name(family);
        spec.n = n;
        spec.m = m_ == 0 ? n : m_;
        spec.seed = seed;
        return generate(spec);
      },
      py::arg("family"), py::arg("n") = 0, py::arg("m") = 0, py::arg("seed") = 0);
  m.def(
      "three_color",
      [](const RotationGraph& g) {
        auto [col, tr] = three_color(g);
        return py::make_tuple(col.c, tr.to_text());
      },
      py::arg("g"), "returns (colors, trace_text)");
  m.def(
      "extend_boundary",
      [](const RotationGraph& g, const std::vector<int>& cycle,
         const std::vector<int>& colors) {
        ValidPair p = make_valid_pair(g, BoundaryColoring(cycle, colors));
        auto [col, tr] = extend(p);
        return py::make_tuple(col.c, tr.to_text());
      },
      py::arg("g"), py::arg("cycle"), py::arg("colors"),
      "color the interior with the given outer-cycle colors pinned");
  m.def(
      "brute_force",
      [](const RotationGraph& g, const std::map<int, int>& partial) -> py::object {
        std::optional<Coloring> col = brute_force_3color(g, partial);
        if (!col) return py::none();
        return py::cast(col->c);
      },
      py::arg("g"), py::arg("partial") = std::map<int, int>{});
  m.def(
      "count_extensions",
      [](const RotationGraph& g, const std::vector<int>& cycle,
         const std::vector<int>& colors) {
        return count_extensions(g, BoundaryColoring(cycle, colors));
      },
      py::arg("g"), py::arg("cycle"), py::arg("colors"));
  m.def(
      "is_proper",
      [](const RotationGraph& g, std::vector<int> colors) {
        Coloring c;
        c.c = std::move(colors);
        return is_proper(g, c);
      },
      py::arg("g"), py::arg("colors"));
  m.def(
      "audit_report",
      [](const RotationGraph& g) { return audit(g, outer_cycle(g)).text; },
      py::arg("g"));
  m.def(
      "short_cycles",
      [](const RotationGraph& g, int max_len) {
        std::vector<std::vector<int>> out;
        for (const CycleRef& k : find_short_cycles(g, max_len)) out.push_back(k.verts);
        return out;
      },
      py::arg("g"), py::arg("max_len"));
}
