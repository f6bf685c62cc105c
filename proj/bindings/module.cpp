#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "motifgraphs/degree.hpp"
#include "motifgraphs/io.hpp"
#include "motifgraphs/ising.hpp"
#include "motifgraphs/motif.hpp"
#include "motifgraphs/oracle.hpp"
#include "motifgraphs/sampling.hpp"
#include "motifgraphs/structure.hpp"
#include "motifgraphs/topology.hpp"
#include "motifgraphs/verification.hpp"

namespace py = pybind11;
using namespace motifgraphs;

PYBIND11_MODULE(_core, m) {
  m.doc() = "hierarchical motif graphs: construction, degree/structure analytics, "
            "annealed spin renormalization";

  py::class_<GraphTopology>(m, "Graph")
      .def_property_readonly("motif", [](const GraphTopology& g) { return to_string(g.motif); })
      .def_readonly("k", &GraphTopology::k)
      .def_property_readonly("node_count", [](const GraphTopology& g) { return g.nodes.size(); })
      .def_property_readonly("basic_edges",
                             [](const GraphTopology& g) { return g.basic_edges; })
      .def_property_readonly("slots",
                             [](const GraphTopology& g) {
                               std::vector<std::tuple<std::uint32_t, std::uint32_t, int>> out;
                               for (const auto& s : g.slots)
                                 out.emplace_back(s.u, s.v, s.creation_level);
                               return out;
                             })
      .def_readonly("external_ids", &GraphTopology::external_ids)
      .def_property_readonly("level_sizes",
                             [](const GraphTopology& g) {
                               std::map<int, std::size_t> out;
                               for (const auto& n : g.nodes) ++out[n.level_class];
                               return out;
                             })
      .def("basic_degrees", [](const GraphTopology& g) { return basic_degrees(g); })
      .def("incident_slot_counts",
           [](const GraphTopology& g) { return incident_slot_counts(g); })
      .def("__repr__", [](const GraphTopology& g) {
        return "Graph(" + to_string(g.motif) + ", k=" + std::to_string(g.k) + ", nodes=" +
               std::to_string(g.nodes.size()) + ")";
      });

  m.def(
      "build_graph",
      [](const std::string& motif, int k) {
        return build_topology(motif_from_string(motif), k);
      },
      py::arg("motif"), py::arg("k"));

  py::class_<DecorationRealization>(m, "Realization")
      .def_readonly("p", &DecorationRealization::p)
      .def_readonly("seed", &DecorationRealization::seed)
      .def_readonly("active", &DecorationRealization::active)
      .def("active_count", &DecorationRealization::active_count);

  m.def("sample", &sample_decorations, py::arg("graph"), py::arg("p"), py::arg("seed"));

  py::class_<MixtureComponent>(m, "MixtureComponent")
      .def_readonly("weight", &MixtureComponent::weight)
      .def_readonly("base", &MixtureComponent::base)
      .def_readonly("slots", &MixtureComponent::slots);

  py::class_<DegreeMixture>(m, "DegreeMixture")
      .def_readonly("components", &DegreeMixture::components)
      .def("pmf", &DegreeMixture::pmf)
      .def("mean", &DegreeMixture::mean)
      .def("raw_moment", &DegreeMixture::raw_moment)
      .def("char_fn", &DegreeMixture::char_fn)
      .def("max_degree", &DegreeMixture::max_degree);

  m.def(
      "mixture_model",
      [](const std::string& motif, int k, double p) {
        return mixture_model(motif_from_string(motif), k, p);
      },
      py::arg("motif"), py::arg("k"), py::arg("p"));
  m.def(
      "mean_degree_closed",
      [](const std::string& motif, int k, double p) {
        return mean_degree_closed(motif_from_string(motif), k, p);
      },
      py::arg("motif"), py::arg("k"), py::arg("p"));
  m.def(
      "second_moment_limit",
      [](const std::string& motif, double p) {
        return second_moment_limit(motif_from_string(motif), p);
      },
      py::arg("motif"), py::arg("p"));
  m.def(
      "char_fn_limit",
      [](const std::string& motif, double p, double t) {
        return char_fn_limit(motif_from_string(motif), p, t);
      },
      py::arg("motif"), py::arg("p"), py::arg("t"));

  py::class_<FitReport>(m, "FitReport")
      .def_readonly("empirical", &FitReport::empirical)
      .def_readonly("model", &FitReport::model)
      .def_readonly("tv_distance", &FitReport::tv_distance)
      .def_readonly("empirical_mean", &FitReport::empirical_mean)
      .def_readonly("empirical_se", &FitReport::empirical_se)
      .def_readonly("closed_mean", &FitReport::closed_mean);

  m.def("degree_fit", &degree_fit, py::arg("graph"), py::arg("p"), py::arg("samples"),
        py::arg("seed"));

  py::class_<StructureReport>(m, "StructureReport")
      .def_readonly("clustering_avg", &StructureReport::clustering_avg)
      .def_readonly("per_level_clustering", &StructureReport::per_level_clustering)
      .def_readonly("diameter", &StructureReport::diameter)
      .def_readonly("boundary_ratio", &StructureReport::boundary_ratio);

  m.def("structure_report", &structure_report, py::arg("graph"), py::arg("realization"));
  m.def("clustering_average", &clustering_average, py::arg("graph"), py::arg("realization"));
  m.def("diameter", &diameter, py::arg("graph"), py::arg("realization"));
  m.def(
      "boundary_ratio_closed",
      [](const std::string& motif, int k) {
        return boundary_ratio_closed(motif_from_string(motif), k);
      },
      py::arg("motif"), py::arg("k"));

  m.def("t_param", &t_param, py::arg("L"), py::arg("p"));
  m.def("phi_map", &phi_map, py::arg("x"));
  m.def("phi_prime", &phi_prime, py::arg("x"));
  m.def(
      "fixed_points",
      [](double t) {
        const FixedPointSet fp = fixed_points(t);
        return std::make_pair(fp.stable, fp.unstable);
      },
      py::arg("t"));
  m.def(
      "iterate_x",
      [](double K, double L, double p, int k_max) {
        return iterate_x({K, L, p}, k_max).x;
      },
      py::arg("K"), py::arg("L"), py::arg("p"), py::arg("k_max"));
  m.def("transfer_matrix", &transfer_matrix, py::arg("x"));
  m.def("dobrushin", &dobrushin, py::arg("matrix"));

  py::class_<IsingTrajectory>(m, "IsingTrajectory")
      .def_readonly("x", &IsingTrajectory::x)
      .def_readonly("y", &IsingTrajectory::y)
      .def_readonly("dobrushin_s", &IsingTrajectory::dobrushin_s)
      .def_readonly("y_range", &IsingTrajectory::y_range)
      .def_readonly("diverged", &IsingTrajectory::diverged)
      .def_property_readonly("verdict",
                             [](const IsingTrajectory& t) { return to_string(t.verdict); });

  m.def(
      "evolve_y",
      [](double K, double L, double p, const Vec3& y1, int k_max) {
        return evolve_y({K, L, p}, y1, k_max);
      },
      py::arg("K"), py::arg("L"), py::arg("p"), py::arg("y1"), py::arg("k_max"));
  m.def(
      "recursion_ab",
      [](double K, double L, double p, int k_max) {
        const ABTrajectory ab = recursion_ab({K, L, p}, k_max);
        return std::make_tuple(ab.log_a, ab.log_b, ab.log_ratio);
      },
      py::arg("K"), py::arg("L"), py::arg("p"), py::arg("k_max"));
  m.def(
      "classify_phase",
      [](double K, double L, double p) { return to_string(classify_phase({K, L, p})); },
      py::arg("K"), py::arg("L"), py::arg("p"));
  m.def("critical_coupling", &critical_coupling, py::arg("L"), py::arg("p"));
  m.def("l_star", &l_star);
  m.def(
      "psi_threshold",
      [](double L) {
        const PsiValue v = psi_threshold(L);
        return std::make_pair(v.value, v.is_probability);
      },
      py::arg("L"));

  m.def(
      "brute_force_partition",
      [](double K, double L, double p, int k, int a, int b, int c) {
        return brute_force_partition({K, L, p}, k, {a, b, c});
      },
      py::arg("K"), py::arg("L"), py::arg("p"), py::arg("k"), py::arg("a"), py::arg("b"),
      py::arg("c"));
  m.def(
      "brute_force_observable",
      [](double K, double L, double p, int k, const SpinObservable& f, int a, int b, int c) {
        return brute_force_observable({K, L, p}, k, f, {a, b, c});
      },
      py::arg("K"), py::arg("L"), py::arg("p"), py::arg("k"), py::arg("f"), py::arg("a"),
      py::arg("b"), py::arg("c"));
  m.def("brute_force_degree_law", &brute_force_degree_law, py::arg("graph"), py::arg("node"),
        py::arg("p"));

  m.def("run_verification", [] {
    std::vector<std::tuple<std::string, bool, std::string>> out;
    for (const auto& line : run_verification())
      out.emplace_back(line.suite, line.pass, line.detail);
    return out;
  });
}
