#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "geodex/canonical.hpp"
#include "geodex/constructions.hpp"
#include "geodex/counting.hpp"
#include "geodex/digraph6.hpp"
#include "geodex/geodecity.hpp"
#include "geodex/search.hpp"
#include "geodex/version.hpp"

namespace py = pybind11;
using namespace geodex;

namespace {

// Unbounded counts cross into Python as exact ints.
py::int_ bigint_to_py(const BigInt& v) {
  std::string s = v.str();
  PyObject* obj = PyLong_FromString(s.c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

py::object witness_to_py(const GeodecityReport& r) {
  if (!r.witness) return py::none();
  return py::make_tuple(r.witness->first.vertices, r.witness->second.vertices);
}

}  // namespace

PYBIND11_MODULE(_geodex, m) {
  m.doc() = "k-geodetic digraph toolkit: geodecity checks, constructions, counting, and exhaustive census search";
  m.attr("__version__") = kVersion;

  py::class_<Digraph>(m, "Digraph")
      .def(py::init<int>(), py::arg("n"))
      .def_property_readonly("n", &Digraph::n)
      .def_property_readonly("m", &Digraph::m)
      .def("add_arc", &Digraph::add_arc, py::arg("u"), py::arg("v"))
      .def("remove_arc", &Digraph::remove_arc, py::arg("u"), py::arg("v"))
      .def("has_arc", &Digraph::has_arc, py::arg("u"), py::arg("v"))
      .def("out_degree", &Digraph::out_degree, py::arg("v"))
      .def("in_degree", &Digraph::in_degree, py::arg("v"))
      .def("out_neighbors", &Digraph::out_neighbors, py::arg("v"))
      .def("in_neighbors", &Digraph::in_neighbors, py::arg("v"))
      .def("converse", &Digraph::converse)
      .def("is_strongly_connected", &Digraph::is_strongly_connected)
      .def("directed_girth", [](const Digraph& g) { return g.directed_girth(); })
      .def("sources_and_sinks", &Digraph::sources_and_sinks)
      .def(py::self == py::self)
      .def("__repr__", [](const Digraph& g) {
        return "Digraph(n=" + std::to_string(g.n()) + ", m=" + std::to_string(g.m()) + ")";
      });

  m.def("parse_digraph6", &parse_digraph6, py::arg("line"));
  m.def("emit_digraph6", &emit_digraph6, py::arg("g"));

  m.def(
      "is_k_geodetic",
      [](const Digraph& g, int k) {
        GeodecityReport r = is_k_geodetic(g, k);
        py::dict d;
        d["is_k_geodetic"] = r.is_k_geodetic;
        d["k"] = r.k;
        d["witness"] = witness_to_py(r);
        return d;
      },
      py::arg("g"), py::arg("k"),
      "Verdict dict with a two-walk witness when the digraph is not k-geodetic");
  m.def(
      "geodetic_girth", [](const Digraph& g) { return geodetic_girth(g); }, py::arg("g"),
      "Largest k for which g is k-geodetic; None when unbounded");

  m.def(
      "canonical_form",
      [](const Digraph& g) {
        std::vector<std::uint8_t> b = canonical_form(g).bytes();
        return py::bytes(reinterpret_cast<const char*>(b.data()), b.size());
      },
      py::arg("g"), "Relabeling-invariant fingerprint; equal bytes iff isomorphic");
  m.def("are_isomorphic", &are_isomorphic, py::arg("a"), py::arg("b"));

  m.def(
      "count_directed_cycles",
      [](const Digraph& g, int length) {
        CountReport r = count_directed_cycles(g, length);
        py::dict d;
        d["length"] = r.length;
        d["count"] = bigint_to_py(r.count);
        d["per_arc_max"] = r.per_arc_max;
        return d;
      },
      py::arg("g"), py::arg("length"));
  m.def(
      "count_directed_paths",
      [](const Digraph& g, int length) {
        CountReport r = count_directed_paths(g, length);
        py::dict d;
        d["length"] = r.length;
        d["count"] = bigint_to_py(r.count);
        d["per_arc_max"] = r.per_arc_max;
        return d;
      },
      py::arg("g"), py::arg("length"));
  m.def("triangle_upper_bound", &triangle_upper_bound, py::arg("n"));
  m.def(
      "cycle_count_upper_bound", [](int n, int k) { return bigint_to_py(cycle_count_upper_bound(n, k)); },
      py::arg("n"), py::arg("k"));
  m.def("min_out_degree_bound_check", &min_out_degree_bound_check, py::arg("g"), py::arg("k"));
  m.def("moore_bound", &moore_bound, py::arg("d"), py::arg("k"));

  py::class_<LabeledDigraph>(m, "LabeledDigraph")
      .def_readonly("digraph", &LabeledDigraph::digraph)
      .def_readonly("labels", &LabeledDigraph::labels);
  m.def("permutation_digraph", &permutation_digraph, py::arg("d"), py::arg("k"));
  m.def("oriented_bipartite", &oriented_bipartite, py::arg("a"), py::arg("b"), py::arg("t"));
  m.def("triangle_expansion", &triangle_expansion, py::arg("r"));
  m.def("family_a", &family_a, py::arg("r"));
  m.def("family_b", &family_b, py::arg("r"), py::arg("t"));
  m.def("family_b_prime", &family_b_prime, py::arg("r"), py::arg("t"));
  m.def("family_c", &family_c, py::arg("r"));
  m.def("family_d", &family_d, py::arg("r"));
  m.def("g_construction", &g_construction, py::arg("n"), py::arg("k"),
        py::arg("variant_rule3_to_first_column") = false);

  py::class_<SearchConstraints>(m, "SearchConstraints")
      .def(py::init([](int n, int k, bool require_strong, bool forbid_sources_sinks,
                       std::optional<long long> min_size) {
             SearchConstraints c;
             c.n = n;
             c.k = k;
             c.require_strong = require_strong;
             c.forbid_sources_sinks = forbid_sources_sinks;
             c.min_size = min_size;
             return c;
           }),
           py::arg("n"), py::arg("k"), py::arg("require_strong") = false, py::arg("forbid_sources_sinks") = false,
           py::arg("min_size") = py::none())
      .def_readwrite("n", &SearchConstraints::n)
      .def_readwrite("k", &SearchConstraints::k)
      .def_readwrite("require_strong", &SearchConstraints::require_strong)
      .def_readwrite("forbid_sources_sinks", &SearchConstraints::forbid_sources_sinks)
      .def_readwrite("min_size", &SearchConstraints::min_size);

  py::class_<SearchOptions>(m, "SearchOptions")
      .def(py::init<>())
      .def_readwrite("threads", &SearchOptions::threads)
      .def_readwrite("split_depth", &SearchOptions::split_depth)
      .def_readwrite("max_nodes", &SearchOptions::max_nodes)
      .def_readwrite("max_seconds", &SearchOptions::max_seconds)
      .def_readwrite("prune_size_ceiling", &SearchOptions::prune_size_ceiling)
      .def_readwrite("prune_walk_budget", &SearchOptions::prune_walk_budget)
      .def_readwrite("prune_degree_cap", &SearchOptions::prune_degree_cap)
      .def_readwrite("prune_dead_vertex", &SearchOptions::prune_dead_vertex)
      .def_readwrite("checkpoint_path", &SearchOptions::checkpoint_path);

  py::class_<CensusRecord>(m, "CensusRecord")
      .def_readonly("constraints", &CensusRecord::constraints)
      .def_readonly("max_size", &CensusRecord::max_size)
      .def_readonly("class_count", &CensusRecord::class_count)
      .def_readonly("representatives", &CensusRecord::representatives)
      .def_readonly("nodes_explored", &CensusRecord::nodes_explored)
      .def_readonly("wall_seconds", &CensusRecord::wall_seconds)
      .def_readonly("complete", &CensusRecord::complete)
      .def_readonly("status", &CensusRecord::status);

  m.def("extremal_search", &extremal_search, py::arg("constraints"), py::arg("options") = SearchOptions{},
        py::call_guard<py::gil_scoped_release>(),
        "Exhaustive census; see CensusRecord.complete/status for budget outcomes");
  m.def("exclusion_bound", &exclusion_bound, py::arg("n"), py::arg("m"), py::arg("known_ex_m"));
  m.def("verify_extremal_witness", &verify_extremal_witness, py::arg("g"), py::arg("constraints"),
        py::arg("claimed_size"));
}
