#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "nearbound/bounds.hpp"
#include "nearbound/errors.hpp"
#include "nearbound/extremal.hpp"
#include "nearbound/io.hpp"
#include "nearbound/kernel.hpp"
#include "nearbound/oracle.hpp"
#include "nearbound/pipeline.hpp"
#include "nearbound/report.hpp"
#include "nearbound/vertex_cover.hpp"

namespace py = pybind11;
using namespace nearbound;

namespace {

// Results cross the boundary as JSON-shaped dicts, same layout as the CLI.
py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(_nearbound, m) {
  m.doc() = "Upper bounds, kernels and certified decisions for alpha(G) <= p - k";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ParameterError>(m, "ParameterError", PyExc_ValueError);
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<Edge>& edges) { return Graph::from_edges(n, edges); }),
           py::arg("n"), py::arg("edges") = std::vector<Edge>{})
      .def_property_readonly("n", &Graph::order)
      .def_property_readonly("m", &Graph::size)
      .def("degree", &Graph::degree)
      .def("adjacent", &Graph::adjacent)
      .def("edges", &Graph::edges)
      .def("complement", &Graph::complement)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + ">";
      });

  m.def("empty", &gen::empty);
  m.def("complete", &gen::complete);
  m.def("cycle", &gen::cycle);
  m.def("path", &gen::path);
  m.def("join", &gen::join);
  m.def("disjoint_union", &gen::disjoint_union);
  m.def("h_np", &gen::h_np, py::arg("n"), py::arg("p"));
  m.def("gnp", &gen::gnp, py::arg("n"), py::arg("prob"), py::arg("seed"));

  m.def("degree_sequence", [](const Graph& g) { return degree_sequence(g).ascending; });
  m.def("complement_edge_count", &complement_edge_count);

  m.def("bound_p", &bound_p);
  m.def("bound_p1", &bound_p1);
  m.def("bound_p2", &bound_p2);
  m.def("bound_wp_chromatic", &bound_wp_chromatic);
  m.def("neighborhood_union_sequence", [](const Graph& g, Vertex u) { return neighborhood_union_sequence(g, u).values; });
  m.def("bounds_report", [](const Graph& g, bool with_p2) { return to_py(bounds_to_json(bounds_report(g, with_p2))); },
        py::arg("g"), py::arg("with_p2") = false);

  m.def("kernelize", [](const Graph& g, std::size_t k) { return to_py(kernel_to_json(kernelize(g, k))); });

  m.def(
      "vertex_cover_decide",
      [](const Graph& g, std::int64_t t, std::uint64_t node_budget) {
        const auto r = vertex_cover_decide(g, t, VcOptions{node_budget});
        py::dict d;
        d["covered"] = r.covered;
        d["cover"] = r.cover ? py::cast(*r.cover) : py::none();
        d["nodes_explored"] = r.nodes_explored;
        return d;
      },
      py::arg("g"), py::arg("t"), py::arg("node_budget") = VcOptions{}.node_budget);
  m.def("max_independent_set_at_least",
        [](const Graph& g, std::int64_t s) { return max_independent_set_at_least(g, s); });

  m.def(
      "decide",
      [](const Graph& g, std::size_t k, bool skip_bound_steps) {
        DecideOptions o;
        o.skip_bound_steps = skip_bound_steps;
        return to_py(decision_to_json(decide(g, k, o)));
      },
      py::arg("g"), py::arg("k"), py::arg("skip_bound_steps") = false);
  m.def("decide_many", [](const Graph& g) {
    json list = json::array();
    for (const auto& [k, d] : decide_many(g)) list.push_back(decision_to_json(d));
    return to_py(list);
  });

  m.def("exact_alpha", [](const Graph& g, std::size_t cap) { return to_py(exact_to_json(oracle::exact_alpha(g, cap))); },
        py::arg("g"), py::arg("cap") = oracle::kDefaultCap);
  m.def("exact_min_vc", [](const Graph& g, std::size_t cap) { return to_py(exact_to_json(oracle::exact_min_vc(g, cap))); },
        py::arg("g"), py::arg("cap") = oracle::kDefaultCap);
  m.def("is_augmenting_set", &oracle::is_augmenting_set);
  m.def("has_augmenting_set_upto", &oracle::has_augmenting_set_upto);

  m.def("e_star_budget", &extremal::e_star_budget);
  m.def("r_range", [](std::size_t p, std::size_t k) {
    const auto r = extremal::r_range(p, k);
    return std::make_pair(r.lo, r.hi);
  });
  m.def(
      "generate_extremal",
      [](const std::string& tag, std::size_t p, const std::string& member, std::uint64_t seed) {
        extremal::Member which = extremal::Member::Lower;
        if (member == "upper")
          which = extremal::Member::Upper;
        else if (member == "random")
          which = extremal::Member::Random;
        else if (member != "lower")
          throw InputError("member must be lower, upper or random, got '" + member + "'");
        return extremal::generate_extremal(extremal::tag_from_string(tag), p, which, seed);
      },
      py::arg("tag"), py::arg("p"), py::arg("member") = "lower", py::arg("seed") = 0);
  m.def("classify_extremal", [](const Graph& g, std::size_t p, std::size_t k) {
    return to_py(extremal_to_json(extremal::classify_extremal(g, p, k)));
  });

  m.def("parse_graph", [](const std::string& text, const std::string& format) {
    std::istringstream in(text);
    auto parsed = io::parse_graph(in, io::format_from_string(format));
    return std::make_pair(std::move(parsed.graph), std::move(parsed.external_ids));
  });
  m.def(
      "write_graph",
      [](const Graph& g, const std::string& format) {
        std::ostringstream out;
        io::write_graph(out, g, io::format_from_string(format));
        return out.str();
      },
      py::arg("g"), py::arg("format") = "edgelist");
}
