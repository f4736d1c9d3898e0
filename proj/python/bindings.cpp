#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gwnc/completion.hpp"
#include "gwnc/constants.hpp"
#include "gwnc/experiments.hpp"
#include "gwnc/fourier.hpp"
#include "gwnc/graph.hpp"
#include "gwnc/montecarlo.hpp"

namespace py = pybind11;
using namespace gwnc;

namespace {

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Edge> es;
  es.reserve(edges.size());
  for (auto [u, v] : edges) es.emplace_back(std::min(u, v), std::max(u, v));
  return Graph(n, std::move(es));
}

std::vector<std::pair<int, int>> edge_list(const std::vector<Edge>& es) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : es) out.emplace_back(e.u, e.v);
  return out;
}

SymmetricMatrix sym(const Matrix& m) { return SymmetricMatrix(m); }

Edge edge(std::pair<int, int> e) { return Edge(std::min(e.first, e.second), std::max(e.first, e.second)); }

}  // namespace

PYBIND11_MODULE(_gwnc, m) {
  m.doc() = "G-Wishart normalising constants: closed forms, Fourier quadrature, Monte Carlo.";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  auto numerical = py::register_exception<NumericalError>(m, "NumericalError", PyExc_ArithmeticError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", numerical.ptr());

  py::class_<Graph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{},
           "Graph on vertices 0..n-1 with the given undirected edges.")
      .def_static("complete", &Graph::complete)
      .def_static("empty", &Graph::empty)
      .def_static("path", &Graph::path)
      .def_static("cycle", &Graph::cycle)
      .def_static("parse", &parse_graph, "Parse 'n m' edge-list text or 'n:4;edges:1-2,...' (1-based).")
      .def_property_readonly("num_vertices", &Graph::num_vertices)
      .def_property_readonly("num_edges", &Graph::num_edges)
      .def_property_readonly("edges", [](const Graph& g) { return edge_list(g.edges()); })
      .def("non_edges", [](const Graph& g) { return edge_list(g.non_edges()); })
      .def("has_edge", [](const Graph& g, std::pair<int, int> e) { return g.has_edge(edge(e)); })
      .def("with_edge", [](const Graph& g, std::pair<int, int> e) { return g.with_edge(edge(e)); })
      .def("without_edge", [](const Graph& g, std::pair<int, int> e) { return g.without_edge(edge(e)); })
      .def("to_inline", &Graph::to_inline)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) { return "Graph('" + g.to_inline() + "')"; });

  m.def("is_chordal", [](const Graph& g) { return is_chordal(g).chordal; });
  m.def("perfect_elimination_ordering", [](const Graph& g) { return is_chordal(g).peo; },
        "A perfect elimination ordering, or None for non-chordal graphs.");
  m.def("clique_decomposition", [](const Graph& g) {
    const auto d = clique_decomposition(g);
    return py::make_tuple(d.cliques, d.separators);
  });
  m.def("maximal_cliques", &maximal_cliques);

  m.def(
      "pd_complete",
      [](const Matrix& d, const Graph& g, double tol, long max_iter) {
        const auto r = pd_complete(sym(d), g, {tol, max_iter});
        return py::make_tuple(Matrix(r.completed.mat()), r.residual, r.iterations);
      },
      py::arg("scale"), py::arg("graph"), py::arg("tol") = 1e-10, py::arg("max_iter") = 10000,
      "PD-completion; returns (completed, residual, iterations).");
  m.def("isserlis", [](const Matrix& d, const Graph& g) { return isserlis(sym(d), g); });
  m.def("isserlis_full", [](const Matrix& d) { return isserlis_full(sym(d)); });

  m.def("log_multigamma", &log_multigamma);
  m.def(
      "chordal_constant",
      [](const Graph& g, double delta, const Matrix& d) { return chordal_constant(g, delta, sym(d)).log_magnitude(); },
      py::arg("graph"), py::arg("delta"), py::arg("scale"), "log C_G(delta, D) for chordal G.");
  m.def(
      "fourier_constant",
      [](const Graph& g_star, std::pair<int, int> e, double delta, const Matrix& d, double rel_tol) {
        QuadratureConfig cfg;
        cfg.rel_tol = rel_tol;
        const auto r = fourier_constant(g_star, edge(e), delta, sym(d), cfg);
        py::dict out;
        out["log_value"] = r.value.log_magnitude();
        out["imag_ratio"] = r.imag_ratio;
        out["refinement_change"] = r.refinement_change;
        out["panels"] = r.panels;
        out["warnings"] = r.warnings;
        return out;
      },
      py::arg("g_star"), py::arg("drop_edge"), py::arg("delta"), py::arg("scale"), py::arg("rel_tol") = 1e-10,
      "log C_G(delta, D) for G = g_star minus drop_edge, g_star chordal.");
  m.def(
      "mc_constant",
      [](const Graph& g, double delta, const Matrix& d, long samples, std::uint64_t seed) {
        const auto r = mc_constant(g, delta, sym(d), samples, seed);
        return py::make_tuple(r.log_value, r.std_error);
      },
      py::arg("graph"), py::arg("delta"), py::arg("scale"), py::arg("samples") = 1000, py::arg("seed") = 1,
      "Monte Carlo estimate; returns (log_value, std_error).");
  m.def(
      "roverato_estimate",
      [](const Graph& g, double delta, const Matrix& d, double log_c_identity) {
        return roverato_estimate(g, delta, sym(d), LogScalar::from_log(log_c_identity)).log_magnitude();
      },
      py::arg("graph"), py::arg("delta"), py::arg("scale"), py::arg("log_c_identity"));
  m.def("path4_identity", [](double delta) { return path4_identity(delta).log_magnitude(); });
  m.def("cycle4_identity", [](double delta) { return cycle4_identity(delta).log_magnitude(); });
  m.def("true_ratio_c4", &true_ratio_c4);
  m.def("approx_ratio", &approx_ratio, py::arg("delta"), py::arg("s") = 0);
  m.def("stirling_rel_error", &stirling_rel_error);

  m.def("nonchordal_graphs_4", &nonchordal_graphs_4);
  m.def(
      "iris_table",
      [](const std::string& data_path, const std::string& centering, long mc_samples, std::uint64_t mc_seed) {
        IrisConfig cfg;
        cfg.data_path = data_path;
        cfg.centering = parse_centering(centering);
        cfg.mc_samples = mc_samples;
        cfg.mc_seed = mc_seed;
        const auto res = resolve_iris_table(cfg);
        if (!res.table) throw NumericalError("no scatter convention reproduces the reference values");
        py::list rows;
        for (const auto& r : res.table->rows) {
          py::dict row;
          row["graph_id"] = r.graph_id;
          row["edges"] = edge_list(r.graph.edges());
          row["exact_log"] = r.exact_log;
          row["conjectured_log"] = r.conjectured_log;
          row["mc_log"] = r.mc.log_value;
          row["mc_stderr"] = r.mc.std_error;
          rows.append(row);
        }
        return py::make_tuple(to_string(res.table->centering), rows);
      },
      py::arg("data_path"), py::arg("centering") = "auto", py::arg("mc_samples") = 1000, py::arg("mc_seed") = 1,
      "Posterior constants for the three Iris 4-cycles; returns (centering, rows).");
}
