#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <optional>
#include <sstream>

#include "swg/errors.hpp"
#include "swg/expansion.hpp"
#include "swg/graph.hpp"
#include "swg/harness.hpp"
#include "swg/torus.hpp"
#include "swg/walk.hpp"

namespace py = pybind11;
using namespace swg;

namespace {

py::object field_to_py(const FieldValue& v) {
  return std::visit([](const auto& x) -> py::object { return py::cast(x); }, v);
}

py::dict record_to_dict(const ExperimentRecord& rec) {
  py::dict d;
  d["experiment"] = rec.experiment;
  d["version"] = rec.version;
  d["n"] = rec.n;
  d["r"] = rec.r;
  d["replicate"] = rec.replicate;
  d["seed"] = rec.seed;
  d["N"] = rec.vertex_count;
  d["edge_count"] = rec.edge_count;
  d["Z"] = rec.Z;
  for (const auto& [k, v] : rec.fields) d[py::str(k)] = field_to_py(v);
  return d;
}

VertexSet to_set(const SmallWorldGraph& g, const std::vector<Vertex>& members) {
  return VertexSet::from_members(g.vertex_count(), members);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Small-world torus graphs: sampling, lazy walks and expansion";
  m.attr("VERSION") = std::string(kVersionTag);

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<CapacityError>(m, "CapacityError", PyExc_RuntimeError);
  py::register_exception<IoError>(m, "IoError", PyExc_OSError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);

  m.def("compute_Z", [](int n, double r) { return compute_Z(n, r).value; },
        py::arg("n"), py::arg("r"));
  m.def("edge_probability",
        py::overload_cast<int, double, int>(&edge_probability), py::arg("n"),
        py::arg("r"), py::arg("ell"));
  m.def("torus_distance",
        [](int n, int x1, int y1, int x2, int y2) {
          Torus t(n);
          return t.distance(t.index({x1, y1}), t.index({x2, y2}));
        },
        py::arg("n"), py::arg("x1"), py::arg("y1"), py::arg("x2"), py::arg("y2"));

  py::class_<SmallWorldGraph>(m, "Graph")
      .def_property_readonly("n", &SmallWorldGraph::n)
      .def_property_readonly("r", &SmallWorldGraph::r)
      .def_property_readonly("seed", &SmallWorldGraph::seed)
      .def_property_readonly("Z", &SmallWorldGraph::Z)
      .def_property_readonly("vertex_count", &SmallWorldGraph::vertex_count)
      .def_property_readonly("edge_count", &SmallWorldGraph::edge_count)
      .def_property_readonly("long_range_edges", &SmallWorldGraph::long_range_edges)
      .def("degree", &SmallWorldGraph::degree)
      .def("neighbours",
           [](const SmallWorldGraph& g, Vertex v) {
             if (v >= g.vertex_count()) throw DomainError("vertex out of range");
             auto s = g.neighbours(v);
             return std::vector<Vertex>(s.begin(), s.end());
           })
      .def("index",
           [](const SmallWorldGraph& g, int x, int y) {
             return g.torus().index({x, y});
           })
      .def("coord",
           [](const SmallWorldGraph& g, Vertex v) {
             auto c = g.torus().coord(v);
             return py::make_tuple(c.x, c.y);
           })
      .def("__eq__", [](const SmallWorldGraph& a, const SmallWorldGraph& b) {
        return a == b;
      });

  m.def("sample_graph",
        [](int n, double r, std::uint64_t seed) {
          return sample_graph(ModelParams{n, r, seed});
        },
        py::arg("n"), py::arg("r"), py::arg("seed"));
  m.def("torus_graph", &torus_graph, py::arg("n"));
  m.def("save_graph", &save_graph, py::arg("graph"), py::arg("path"));
  m.def("load_graph", &load_graph, py::arg("path"));

  m.def("stationary",
        [](const SmallWorldGraph& g) {
          const ProbabilityVector pi = stationary(g);
          return std::vector<double>(pi.entries().begin(), pi.entries().end());
        });
  m.def("distance_to_stationarity", &distance_to_stationarity, py::arg("graph"),
        py::arg("start"), py::arg("t"));
  m.def("mixing_time",
        [](const SmallWorldGraph& g, std::optional<std::vector<Vertex>> starts,
           double epsilon) {
          MixingOptions opt;
          opt.epsilon = epsilon;
          auto est = starts ? mixing_time(g, *starts, opt) : mixing_time_all(g, opt);
          return py::make_tuple(est.t_mix, est.exact, est.worst_start);
        },
        py::arg("graph"), py::arg("starts") = py::none(), py::arg("epsilon") = 0.25,
        "Returns (t_mix, exact, worst_start).");
  m.def("spectral_gap",
        [](const SmallWorldGraph& g) { return spectral_gap(g); }, py::arg("graph"));

  m.def("diameter", &diameter, py::arg("graph"), py::arg("exact") = true);
  m.def("bfs_distances", &bfs_distances, py::arg("graph"), py::arg("source"));
  m.def("ball_set",
        [](int n, int L) { return ball_set(n, L).members(); }, py::arg("n"),
        py::arg("L"));
  m.def("conductance",
        [](const SmallWorldGraph& g, const std::vector<Vertex>& s) {
          return conductance(g, to_set(g, s));
        },
        py::arg("graph"), py::arg("members"));
  m.def("cut_report",
        [](const SmallWorldGraph& g, const std::vector<Vertex>& s) {
          auto c = cut_report(g, to_set(g, s));
          py::dict d;
          d["set_size"] = c.set_size;
          d["edge_boundary"] = c.edge_boundary;
          d["vertex_boundary"] = c.vertex_boundary;
          d["degree_sum"] = c.degree_sum;
          d["conductance"] = c.conductance;
          d["alpha"] = c.alpha;
          return d;
        },
        py::arg("graph"), py::arg("members"));
  m.def("is_expanding",
        [](const SmallWorldGraph& g, const std::vector<Vertex>& s, double eps,
           double c) { return is_expanding(g, to_set(g, s), eps, c).holds; },
        py::arg("graph"), py::arg("members"), py::arg("epsilon"), py::arg("c"));

  m.def("greedy_route",
        [](const SmallWorldGraph& g, Vertex s, Vertex t, std::size_t cap) {
          auto r = greedy_route(g, s, t, cap);
          return py::make_tuple(r.hops, r.delivered);
        },
        py::arg("graph"), py::arg("source"), py::arg("target"), py::arg("hop_cap"),
        "Returns (hops, delivered).");

  m.def("run_sweep_config",
        [](const std::string& text) {
          std::istringstream in(text);
          auto cfg = parse_config(in);
          cfg.validate();
          std::vector<ExperimentRecord> records;
          {
            py::gil_scoped_release release;
            records = run_experiment(cfg);
          }
          py::list out;
          for (const auto& rec : records) out.append(record_to_dict(rec));
          return out;
        },
        py::arg("config_text"),
        "Runs a sweep described in key = value text; returns a list of dicts.");
}
