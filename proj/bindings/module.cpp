#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "helly/facility.hpp"
#include "helly/generators.hpp"
#include "helly/graph.hpp"
#include "helly/khelly.hpp"
#include "helly/oracle.hpp"
#include "helly/recognition.hpp"

namespace py = pybind11;
using namespace helly;

namespace {

constexpr std::uint64_t default_seed = 1729;

// Value is a 128-bit integer; route through the decimal string for full range.
py::int_ value_to_int(Value v) {
  PyObject* obj = PyLong_FromString(to_string(v).c_str(), nullptr, 10);
  if (!obj) throw py::error_already_set();
  return py::reinterpret_steal<py::int_>(obj);
}

py::list values_to_list(const std::vector<Value>& values) {
  py::list out;
  for (Value v : values) out.append(value_to_int(v));
  return out;
}

CostFn make_costs(const Graph& g, const std::optional<std::vector<Cost>>& costs) {
  if (!costs) return CostFn::unit(g.vertex_count());
  CostFn c(*costs);
  require_matching_costs(g, c);
  return c;
}

SearchOptions make_search_options(std::optional<double> sample_probability, std::optional<std::int64_t> step_budget) {
  SearchOptions opt;
  opt.sample_probability = sample_probability;
  opt.step_budget = step_budget;
  return opt;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Distance problems on Helly and k-Helly graphs: centers, medians, radii";

  py::register_exception<validation_error>(m, "ValidationError", PyExc_ValueError);
  py::register_exception<algorithm_error>(m, "AlgorithmError", PyExc_RuntimeError);

  py::class_<Graph>(m, "Graph")
      .def_static(
          "from_edge_list",
          [](Vertex n, const std::vector<std::pair<Vertex, Vertex>>& edges) { return Graph::from_edge_list(n, edges); },
          py::arg("n"), py::arg("edges"),
          "Build a connected simple graph from 0-indexed edges (duplicates collapse).")
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("neighbors",
           [](const Graph& g, Vertex v) {
             auto nb = g.neighbors(v);
             return std::vector<Vertex>(nb.begin(), nb.end());
           },
           py::arg("v"))
      .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
      .def("bfs", [](const Graph& g, Vertex source) { return bfs(g, source).dist; }, py::arg("source"),
           "Distances from source to every vertex.")
      .def("__repr__", [](const Graph& g) {
        return "Graph(n=" + std::to_string(g.vertex_count()) + ", m=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("ball", [](const Graph& g, Vertex v, std::int64_t r) { return ball(g, v, r).to_vector(); }, py::arg("g"),
        py::arg("v"), py::arg("r"), "Vertices within distance r of v.");

  m.def("eccentricity",
        [](const Graph& g, Vertex v, const std::optional<std::vector<Cost>>& costs) {
          return value_to_int(eccentricity(g, make_costs(g, costs), v));
        },
        py::arg("g"), py::arg("v"), py::arg("costs") = py::none(),
        "Cost-weighted eccentricity max_w c(w) * dist(v, w).");

  m.def("total_distance",
        [](const Graph& g, Vertex v, const std::optional<std::vector<Cost>>& costs) {
          return value_to_int(total_distance(g, make_costs(g, costs), v));
        },
        py::arg("g"), py::arg("v"), py::arg("costs") = py::none(),
        "Cost-weighted total distance sum_w c(w) * dist(v, w).");

  py::class_<CenterResult>(m, "CenterResult")
      .def_readonly("vertex", &CenterResult::vertex)
      .def_property_readonly("value", [](const CenterResult& r) { return value_to_int(r.value); })
      .def_property_readonly("steps", [](const CenterResult& r) { return r.trace.length(); })
      .def_property_readonly("bfs_calls", [](const CenterResult& r) { return r.trace.bfs_calls; })
      .def_property_readonly("visited", [](const CenterResult& r) { return r.trace.visited; })
      .def("__repr__", [](const CenterResult& r) {
        return "CenterResult(vertex=" + std::to_string(r.vertex) + ", value=" + to_string(r.value) + ")";
      });

  py::class_<MedianResult>(m, "MedianResult")
      .def_readonly("medians", &MedianResult::medians)
      .def_property_readonly("value", [](const MedianResult& r) { return value_to_int(r.value); })
      .def_property_readonly("steps", [](const MedianResult& r) { return r.trace.length(); })
      .def_property_readonly("bfs_calls", [](const MedianResult& r) { return r.trace.bfs_calls; })
      .def("__repr__", [](const MedianResult& r) {
        std::string s = "MedianResult(medians=[";
        for (std::size_t i = 0; i < r.medians.size(); ++i) s += (i ? ", " : "") + std::to_string(r.medians[i]);
        return s + "], value=" + to_string(r.value) + ")";
      });

  m.def("find_center",
        [](const Graph& g, const std::optional<std::vector<Cost>>& costs, std::uint64_t seed,
           std::optional<double> sample_probability, std::optional<std::int64_t> step_budget) {
          return find_center(g, make_costs(g, costs), seed, make_search_options(sample_probability, step_budget));
        },
        py::arg("g"), py::arg("costs") = py::none(), py::arg("seed") = default_seed,
        py::arg("sample_probability") = py::none(), py::arg("step_budget") = py::none(),
        "Cost-weighted center by sampled start plus gated descent (exact on Helly graphs).");

  m.def("find_medians",
        [](const Graph& g, const std::optional<std::vector<Cost>>& costs, std::uint64_t seed,
           std::optional<double> sample_probability, std::optional<std::int64_t> step_budget) {
          return find_medians(g, make_costs(g, costs), seed, make_search_options(sample_probability, step_budget));
        },
        py::arg("g"), py::arg("costs") = py::none(), py::arg("seed") = default_seed,
        py::arg("sample_probability") = py::none(), py::arg("step_budget") = py::none(),
        "Cost-weighted median clique by gated descent (complete for positive costs on Helly graphs).");

  py::class_<RadiusResult>(m, "RadiusResult")
      .def_readonly("radius", &RadiusResult::radius)
      .def_readonly("alpha", &RadiusResult::alpha)
      .def_readonly("decision_calls", &RadiusResult::decision_calls)
      .def_readonly("bfs_calls", &RadiusResult::bfs_calls)
      .def("__repr__", [](const RadiusResult& r) {
        return "RadiusResult(radius=" + std::to_string(r.radius) + ", guarantee=[" + std::to_string(r.radius) +
               ", " + std::to_string(r.radius + r.alpha) + "])";
      });

  m.def("radius",
        [](const Graph& g, int k, int alpha, std::uint64_t seed, double eps_scale, int max_restarts) {
          DecideOptions opt;
          opt.eps_scale = eps_scale;
          opt.max_restarts = max_restarts;
          return radius(g, k, alpha, seed, opt);
        },
        py::arg("g"), py::arg("k") = 2, py::arg("alpha") = 0, py::arg("seed") = default_seed,
        py::arg("eps_scale") = 3.0, py::arg("max_restarts") = 1,
        "Randomized radius with guarantee [radius, radius + alpha] under the (k, alpha)-Helly promise.");

  py::class_<HellyReport>(m, "HellyReport")
      .def_readonly("k", &HellyReport::k)
      .def_readonly("alpha", &HellyReport::alpha)
      .def_readonly("holds", &HellyReport::holds)
      .def_property_readonly("witness",
                             [](const HellyReport& r) -> std::optional<std::vector<Vertex>> {
                               if (!r.witness) return std::nullopt;
                               return r.witness->subset;
                             })
      .def("__repr__", [](const HellyReport& r) {
        return std::string("HellyReport(holds=") + (r.holds ? "True" : "False") + ", k=" + std::to_string(r.k) +
               ", alpha=" + std::to_string(r.alpha) + ")";
      });

  m.def("is_k_helly", [](const Graph& g, int k) { return is_k_helly(g, k); }, py::arg("g"), py::arg("k") = 2,
        "Exact ball k-Helly test by (k+1)-subset enumeration (small graphs).");
  m.def("is_k_alpha_helly", [](const Graph& g, int k, int alpha) { return is_k_alpha_helly(g, k, alpha); },
        py::arg("g"), py::arg("k") = 2, py::arg("alpha") = 0,
        "Relaxed variant allowing a +alpha inflation of every ball.");
  m.def("is_chordal", &is_chordal, py::arg("g"));

  py::class_<ApspSummary>(m, "ApspSummary")
      .def_property_readonly("ecc", [](const ApspSummary& s) { return values_to_list(s.ecc); })
      .def_property_readonly("total_dist", [](const ApspSummary& s) { return values_to_list(s.total_dist); })
      .def_readonly("unit_ecc", &ApspSummary::unit_ecc)
      .def_property_readonly("radius", [](const ApspSummary& s) { return value_to_int(s.radius); })
      .def_readonly("diameter", &ApspSummary::diameter)
      .def_readonly("center", &ApspSummary::center)
      .def_readonly("median", &ApspSummary::median)
      .def_readonly("bfs_calls", &ApspSummary::bfs_calls);

  m.def("apsp_summary",
        [](const Graph& g, const std::optional<std::vector<Cost>>& costs, Vertex max_n, int threads) {
          return apsp_summary(g, make_costs(g, costs), max_n, threads);
        },
        py::arg("g"), py::arg("costs") = py::none(), py::arg("max_n") = 5000, py::arg("threads") = 1,
        "Brute-force all-pairs reference: eccentricities, total distances, center, median.");

  m.def("gen_tree", &gen_tree, py::arg("n"), py::arg("seed") = default_seed);
  m.def("gen_interval", &gen_interval, py::arg("n"), py::arg("seed") = default_seed);
  m.def("gen_king_grid", &gen_king_grid, py::arg("rows"), py::arg("cols"));
  m.def("gen_chordal", &gen_chordal, py::arg("n"), py::arg("density") = 0.5, py::arg("seed") = default_seed);
}
