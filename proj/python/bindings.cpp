#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "rtl/constructions.hpp"
#include "rtl/counting.hpp"
#include "rtl/errors.hpp"
#include "rtl/graph.hpp"
#include "rtl/harness.hpp"
#include "rtl/number_theory.hpp"
#include "rtl/report_json.hpp"

namespace py = pybind11;
using namespace rtl;

namespace {

// Reports cross the boundary as JSON text; the Python package decodes them.
std::string dump(const nlohmann::json& j) { return j.dump(); }

SearchOptions options(unsigned jobs, std::optional<std::uint64_t> budget) {
  SearchOptions o;
  o.jobs = jobs;
  if (budget) o.budget = *budget;
  return o;
}

ColoredGraph from_edges(std::size_t n, const std::vector<std::tuple<Vertex, Vertex, Colour>>& edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (const auto& [u, v, c] : edges) es.push_back({u, v, c});
  return ColoredGraph::build(n, es);
}

std::vector<std::tuple<Vertex, Vertex, Colour>> edge_tuples(const ColoredGraph& g) {
  std::vector<std::tuple<Vertex, Vertex, Colour>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v, e.c);
  return out;
}

Family make_family(const std::string& construction, const std::map<std::string, std::int64_t>& fixed,
                   const std::string& sweep_key, const std::vector<std::int64_t>& sweep) {
  return Family{construction, fixed, sweep_key, sweep};
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Rainbow Turan constructions and counting";

  static py::exception<Error> rtl_error(m, "RtlError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::tuple args = py::make_tuple(std::string(e.name()), std::string(e.what()));
      PyErr_SetObject(rtl_error.ptr(), args.ptr());
    }
  });

  m.attr("DEFAULT_BUDGET") = kDefaultBudget;

  py::class_<ColoredGraph>(m, "ColoredGraph")
      .def(py::init(&from_edges), py::arg("n"), py::arg("edges"),
           "Build from (u, v, colour) triples; raises RtlError on improper input.")
      .def_property_readonly("vertex_count", &ColoredGraph::vertex_count)
      .def_property_readonly("edge_count", &ColoredGraph::edge_count)
      .def("edges", &edge_tuples)
      .def("degree", &ColoredGraph::degree)
      .def("neighbours",
           [](const ColoredGraph& g, Vertex v) {
             std::vector<std::pair<Vertex, Colour>> out;
             for (const Incidence& inc : g.neighbours(v)) out.emplace_back(inc.to, inc.c);
             return out;
           })
      .def("colour_between", &ColoredGraph::colour_between)
      .def("is_bipartite", &ColoredGraph::is_bipartite)
      .def("__eq__", [](const ColoredGraph& a, const ColoredGraph& b) { return a == b; })
      .def("__repr__", [](const ColoredGraph& g) {
        return "<ColoredGraph n=" + std::to_string(g.vertex_count()) + " m=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("load_graph", [](const std::filesystem::path& p) { return load_graph(p); });
  m.def("save_graph", [](const ColoredGraph& g, const std::filesystem::path& p) { save_graph(g, p); });
  m.def("common_neighbour_count", &common_neighbour_count);
  m.def("is_properly_coloured", &is_properly_coloured);

  m.def("construction_names", &construction_names);
  m.def(
      "_construct",
      [](const std::string& name, const std::map<std::string, std::int64_t>& params) {
        ConstructionReport r = build_construction(name, params);
        return std::make_pair(std::move(r.graph), dump(to_json(r)));
      },
      py::arg("name"), py::arg("params"));

  const auto jobs = py::arg("jobs") = 1u;
  const auto budget = py::arg("budget") = py::none();
  m.def(
      "count_cycles",
      [](const ColoredGraph& g, int s, unsigned j, std::optional<std::uint64_t> b) {
        py::gil_scoped_release nogil;
        return count_cycles(g, s, options(j, b));
      },
      py::arg("graph"), py::arg("s"), jobs, budget);
  m.def(
      "count_rainbow_cycles",
      [](const ColoredGraph& g, int s, unsigned j, std::optional<std::uint64_t> b) {
        py::gil_scoped_release nogil;
        return count_rainbow_cycles(g, s, options(j, b));
      },
      py::arg("graph"), py::arg("s"), jobs, budget);
  m.def(
      "count_paths",
      [](const ColoredGraph& g, int l, unsigned j, std::optional<std::uint64_t> b) {
        py::gil_scoped_release nogil;
        return count_paths(g, l, options(j, b));
      },
      py::arg("graph"), py::arg("l"), jobs, budget);
  m.def(
      "count_paths_from",
      [](const ColoredGraph& g, Vertex a, int l, std::optional<std::uint64_t> b) {
        return count_paths_from(g, a, l, options(1, b));
      },
      py::arg("graph"), py::arg("a"), py::arg("l"), budget);
  m.def(
      "find_rainbow_cycle",
      [](const ColoredGraph& g, int t, std::optional<std::uint64_t> b) -> std::optional<std::pair<std::vector<Vertex>, std::vector<Colour>>> {
        auto found = find_rainbow_cycle(g, t, options(1, b));
        if (!found) return std::nullopt;
        return std::make_pair(found->vertices, found->colours);
      },
      py::arg("graph"), py::arg("t"), budget);
  m.def(
      "naive_count", [](const ColoredGraph& g, const std::string& target) { return naive_count(g, Target::parse(target)); },
      py::arg("graph"), py::arg("target"));
  m.def(
      "_pattern",
      [](const ColoredGraph& g, const std::vector<Vertex>& cycle, std::size_t threshold) {
        const CycleInstance c = make_cycle(g, cycle);
        nlohmann::json j = to_json(c);
        j.update(to_json(pattern_of(g, c, threshold)));
        return dump(j);
      },
      py::arg("graph"), py::arg("cycle"), py::arg("threshold"));

  m.def("is_prime", &is_prime);
  m.def(
      "verify_bk",
      [](const std::vector<std::uint64_t>& elements, std::uint64_t modulus, int k) {
        return verify_bk(elements, modulus, k);
      },
      py::arg("elements"), py::arg("modulus"), py::arg("k"));
  m.def(
      "bose_chowla",
      [](std::uint32_t q, int k) {
        const BkSet s = bose_chowla(q, k);
        return py::make_tuple(s.elements, s.modulus);
      },
      py::arg("q"), py::arg("k"));

  m.def(
      "_theorem_exponent",
      [](const std::string& target, int t) {
        const Rational r = theorem_exponent(Target::parse(target), t);
        return std::make_pair(r.num, r.den);
      },
      py::arg("target"), py::arg("forbidden"));
  m.def(
      "_run_scaling",
      [](const std::string& construction, const std::map<std::string, std::int64_t>& fixed,
         const std::string& sweep_key, const std::vector<std::int64_t>& sweep, const std::string& target,
         std::optional<int> forbidden, std::optional<std::pair<std::int64_t, std::int64_t>> expected,
         std::optional<double> tolerance, unsigned j) {
        ScalingRequest req{make_family(construction, fixed, sweep_key, sweep), Target::parse(target), forbidden, {},
                           tolerance};
        if (expected) req.expected = Rational::make(expected->first, expected->second);
        py::gil_scoped_release nogil;
        return dump(to_json(run_scaling(req, options(j, std::nullopt))));
      });
  m.def("_check_p2_linearity",
        [](const std::string& construction, const std::map<std::string, std::int64_t>& fixed,
           const std::string& sweep_key, const std::vector<std::int64_t>& sweep, int forbidden, unsigned j) {
          py::gil_scoped_release nogil;
          return dump(to_json(check_p2_linearity(make_family(construction, fixed, sweep_key, sweep), forbidden,
                                                 options(j, std::nullopt))));
        });
  m.def("_exhaustive_extremal", [](int n, const std::string& target, int forbidden, unsigned j) {
    py::gil_scoped_release nogil;
    return dump(to_json(exhaustive_extremal(n, Target::parse(target), forbidden, options(j, std::nullopt))));
  });
}
