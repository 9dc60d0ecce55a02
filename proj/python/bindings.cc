#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cliquedyn/cliques.h"
#include "cliquedyn/covers.h"
#include "cliquedyn/errors.h"
#include "cliquedyn/geometric.h"
#include "cliquedyn/hexgrid.h"
#include "cliquedyn/io.h"
#include "cliquedyn/lemmas.h"
#include "cliquedyn/surface.h"

namespace py = pybind11;
using namespace cliquedyn;

namespace {

py::dict trace_dict(const IterationTrace& t) {
  py::list steps;
  for (const auto& s : t.steps) {
    py::dict d;
    d["n"] = s.n;
    d["vertices"] = s.vertices;
    d["edges"] = s.edges;
    d["digest"] = s.digest;
    steps.append(d);
  }
  py::dict out;
  out["steps"] = steps;
  out["verdict"] = to_string(t.verdict);
  out["converged_n"] = t.converged_n;
  out["period"] = t.period;
  out["message"] = t.message;
  return out;
}

py::dict decision_dict(const Decision& d) {
  py::dict out;
  out["verdict"] = to_string(d.verdict);
  out["reason"] = d.reason;
  out["gates"] = d.gates;
  out["min_degree"] = d.min_degree;
  out["max_degree"] = d.max_degree;
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Clique graph dynamics of triangulated surfaces";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<PreconditionError>(m, "PreconditionError",
                                            PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded",
                                         PyExc_RuntimeError);
  py::register_exception<InjectivityError>(m, "InjectivityError",
                                           PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<Edge>& edges,
                       std::string name) {
             return Graph::with_order(n, edges, std::move(name));
           }),
           py::arg("order"), py::arg("edges"), py::arg("name") = "")
      .def_property_readonly("order", &Graph::order)
      .def_property_readonly("size", &Graph::size)
      .def_property_readonly("name", &Graph::name)
      .def_property_readonly("ids", &Graph::ids)
      .def("edges", &Graph::edges)
      .def("degree", &Graph::degree)
      .def("neighbours", &Graph::neighbours)
      .def("adjacent", &Graph::adjacent)
      .def("min_degree", &Graph::min_degree)
      .def("max_degree", &Graph::max_degree)
      .def("__repr__", [](const Graph& g) {
        return "<Graph " + g.name() + " order=" + std::to_string(g.order()) +
               " size=" + std::to_string(g.size()) + ">";
      });

  m.def("read_graph", [](const std::string& path) {
    return read_graph_file(path).graph;
  });
  m.def("parse_json", [](const std::string& text) {
    return parse_json(text).graph;
  });
  m.def("to_json", [](const Graph& g) { return serialize_json({g, {}}); });
  m.def("to_dot", [](const Graph& g) { return serialize_dot({g, {}}); });

  m.def("hex_patch", [](int r) { return gen_hex_patch(r).graph; },
        py::arg("radius"));
  m.def("delta", [](int k) { return gen_delta(k).graph; }, py::arg("m"));
  m.def("torus", [](int p, int q) { return gen_torus(p, q).graph; },
        py::arg("p"), py::arg("q"));
  m.def("local_hex_graph", [] { return build_lhg().graph; });
  m.def("octahedron", &gen_octahedron);
  m.def("icosahedron", &gen_icosahedron);
  m.def("complete", &gen_complete, py::arg("n"));

  m.def("is_isomorphic", [](const Graph& a, const Graph& b) {
    IsoResult r = is_isomorphic(a, b);
    if (r.outcome == IsoResult::Outcome::kBudgetExceeded) {
      throw BudgetExceeded("isomorphism search budget exhausted");
    }
    return r.isomorphic();
  });
  m.def("canonical_hash", &canonical_hash);
  m.def("is_locally_cyclic",
        [](const Graph& g) { return validate_surface(g).is_locally_cyclic; });
  m.def("facets", &facets);

  m.def("max_cliques", [](const Graph& g) { return max_cliques(g); });
  m.def("clique_graph", [](const Graph& g) { return clique_graph(g).graph; });
  m.def("iterate", [](const Graph& g, int steps) {
          return trace_dict(iterate_k(g, steps));
        },
        py::arg("graph"), py::arg("steps") = 6);
  m.def("decide", [](const Graph& g) { return decision_dict(decide_finite(g)); });

  m.def("geometric_level_counts", [](const Graph& host, int n) {
    GeoGraph gg = build_geo(host, n);
    py::dict out;
    for (int k = n % 2; k <= n; k += 2) out[py::int_(k)] = gg.count_at_level(k);
    return out;
  });
  m.def("verify_equivalence",
        [](const Graph& host, int n, int margin, int jobs) {
          EquivalenceReport r = verify_geometric_equivalence(
              host, n, margin < 0 ? n + 3 : margin, jobs);
          py::dict out;
          out["ok"] = r.ok;
          out["interior_vertices"] = r.interior_vertices;
          out["interior_cliques"] = r.interior_cliques;
          out["failures"] = r.failures;
          return out;
        },
        py::arg("host"), py::arg("n"), py::arg("margin") = -1,
        py::arg("jobs") = 1);

  m.def("cover_ball",
        [](const Graph& g, Vertex base, int radius) {
          CoverBall cb = universal_cover_ball(g, base, radius);
          CoverCheck check =
              validate_covering_map(cb.graph, g, cb.projection, cb.interior);
          py::dict out;
          out["graph"] = cb.graph;
          out["projection"] = cb.projection;
          out["interior"] = cb.interior;
          out["valid"] = check.ok;
          return out;
        },
        py::arg("graph"), py::arg("base") = 0, py::arg("radius") = 3);

  m.def("suite_names", &suite_names);
  m.def("run_suite",
        [](const std::string& name, int mm, int n, int radius, int samples) {
          SuiteOptions o;
          o.m = mm;
          o.n = n;
          o.radius = radius;
          o.samples = samples;
          SuiteResult r = run_suite(name, o);
          py::dict out;
          out["pass"] = r.pass;
          out["detail"] = r.detail;
          out["seconds"] = r.seconds;
          return out;
        },
        py::arg("name"), py::arg("m") = 4, py::arg("n") = 1,
        py::arg("radius") = 10, py::arg("samples") = 100);
}
