#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fanspec/canon.hpp"
#include "fanspec/errors.hpp"
#include "fanspec/families.hpp"
#include "fanspec/graph6.hpp"
#include "fanspec/json_io.hpp"

namespace py = pybind11;
using namespace fanspec;

namespace {

// Reports cross the boundary as plain dicts, through the same JSON schema
// the command-line tool emits.
py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::optional<std::vector<int>> witness_or_none(const std::optional<Witness>& w) {
  if (!w) return std::nullopt;
  return w->mapping;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Spectral extremal toolkit for fan-free graphs";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<MoveError>(m, "MoveError", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);
  py::register_exception<ContractError>(m, "ContractError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init<int>(), py::arg("n"))
      .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
             std::vector<Edge> es;
             es.reserve(edges.size());
             for (auto [u, v] : edges) es.push_back({u, v});
             return Graph(n, es);
           }),
           py::arg("n"), py::arg("edges"))
      .def_static("from_graph6", [](const std::string& s) { return graph6_decode(s); })
      .def("to_graph6", [](const Graph& g) { return graph6_encode(g); })
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def("has_edge", &Graph::has_edge)
      .def("degree", &Graph::degree)
      .def("neighbors", [](const Graph& g, int v) { return g.neighbors(v).members(); })
      .def("edges",
           [](const Graph& g) {
             std::vector<std::pair<int, int>> out;
             for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
             return out;
           })
      .def("is_connected", &Graph::is_connected)
      .def("strip_isolated", &Graph::strip_isolated)
      .def("with_edge", &Graph::with_edge)
      .def("without_edge", &Graph::without_edge)
      .def("canonical_label", [](const Graph& g) { return py::bytes(canonical_label(g)); })
      .def("canonical_graph6", [](const Graph& g) { return graph6_encode(canonical_graph(g)); })
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "<Graph n=" + std::to_string(g.order()) + " m=" + std::to_string(g.size()) + " " + graph6_encode(g) + ">";
      });

  m.def("build_family", [](const std::string& spec) { return build_family(parse_family(spec)); }, py::arg("spec"),
        "Named graph, e.g. 'fan:7', 'complete-bipartite:3,3', 'extremal-join:3,33'.");
  m.def("build_extremal", &build_extremal, py::arg("k"), py::arg("m"));
  m.def("join", &join);
  m.def("disjoint_union", &disjoint_union);
  m.def(
      "kelmans_shift",
      [](const Graph& g, int u, int v, const std::vector<int>& s) {
        VertexSet set(g.order());
        for (int w : s) set.insert(w);
        return kelmans_shift(g, u, v, set);
      },
      py::arg("g"), py::arg("u"), py::arg("v"), py::arg("s"));
  m.def("are_isomorphic", &are_isomorphic);

  m.def(
      "spectral_radius", [](const Graph& g) { return to_python(to_json(spectral_radius(g), true)); }, py::arg("g"),
      "Dict with rho, residual, iterations and the max-normalised Perron vector x.");
  m.def("closed_form_bound", &closed_form_bound, py::arg("k"), py::arg("m"));

  m.def(
      "find_forbidden",
      [](const Graph& g, const std::string& forbid) { return witness_or_none(Forbidden::parse(forbid).find(g)); },
      py::arg("g"), py::arg("forbid"), "Witness mapping for 'fan:N', 'c6d' or 'f3', or None when g is free.");
  m.def(
      "is_free", [](const Graph& g, const std::string& forbid) { return Forbidden::parse(forbid).admits(g); },
      py::arg("g"), py::arg("forbid"));
  m.def(
      "subgraph_contains",
      [](const Graph& host, const Graph& pattern) { return witness_or_none(subgraph_contains(host, pattern)); },
      py::arg("host"), py::arg("pattern"));

  m.def(
      "enumerate_graph6",
      [](int edges, const std::string& forbid, bool force) {
        EnumerateOptions o;
        o.m = edges;
        o.forbid = Forbidden::parse(forbid);
        o.force = force;
        std::vector<std::string> out;
        {
          py::gil_scoped_release release;
          enumerate_graphs(o, [&](const Graph& g) { out.push_back(graph6_encode(canonical_graph(g))); });
        }
        return out;
      },
      py::arg("m"), py::arg("forbid") = "none", py::arg("force") = false);
  m.def(
      "extremal_scan",
      [](int edges, const std::string& forbid, int threads, bool force) {
        ScanOptions o;
        o.m = edges;
        o.forbid = Forbidden::parse(forbid);
        o.threads = threads;
        o.force = force;
        ScanReport r;
        {
          py::gil_scoped_release release;
          r = extremal_scan(o);
        }
        return to_python(to_json(r));
      },
      py::arg("m"), py::arg("forbid") = "none", py::arg("threads") = 1, py::arg("force") = false);
  m.def(
      "local_search",
      [](int edges, const std::string& forbid, int restarts, long steps, std::uint64_t seed, bool anneal, int threads) {
        SearchConfig c;
        c.m = edges;
        c.forbid = Forbidden::parse(forbid);
        c.restarts = restarts;
        c.max_steps = steps;
        c.seed = seed;
        c.acceptance = anneal ? Acceptance::anneal : Acceptance::hill_climb;
        c.threads = threads;
        SearchReport r;
        {
          py::gil_scoped_release release;
          r = local_search(c);
        }
        return to_python(to_json(r, false));
      },
      py::arg("m"), py::arg("forbid"), py::arg("restarts") = 16, py::arg("steps") = 20000, py::arg("seed") = 1,
      py::arg("anneal") = false, py::arg("threads") = 1);
  m.def(
      "is_local_max",
      [](const Graph& g, const std::string& forbid) { return to_python(to_json(is_local_max(g, Forbidden::parse(forbid)))); },
      py::arg("g"), py::arg("forbid"));
  m.def(
      "proofcheck",
      [](const Graph& g) {
        const PerronData p = spectral_radius(g);
        const Decomposition d = decompose(g, p);
        Json j{{"rho", p.rho},
               {"decomposition", to_json(d)},
               {"size_identity", d.size_identity_holds(g.size())},
               {"identities", to_json(eigen_identities(g, p, d))},
               {"edge_bound", to_json(eb_bound_check(g, p, d))},
               {"eta", to_json(claim_ceilings(g, p, d))}};
        return to_python(j);
      },
      py::arg("g"), "Decomposition, identities, e(B) bound and eta report for a connected graph.");

  m.attr("__version__") = FANSPEC_VERSION;
}
