#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "twopoint/coherent.hpp"
#include "twopoint/correlator.hpp"
#include "twopoint/harness.hpp"
#include "twopoint/position.hpp"
#include "twopoint/sector.hpp"

namespace py = pybind11;
using namespace twopoint;

namespace {

py::dict report_to_dict(const RunReport& report) {
  py::dict metadata;
  for (const auto& [key, value] : report.metadata) {
    metadata[py::str(key)] = py::cast(value);
  }
  py::list rows;
  for (const auto& row : report.rows) {
    py::dict entry;
    for (std::size_t i = 0; i < report.columns.size(); ++i) {
      entry[py::str(report.columns[i])] = py::cast(row[i]);
    }
    rows.append(entry);
  }
  py::dict out;
  out["metadata"] = metadata;
  out["rows"] = rows;
  return out;
}

}  // namespace

PYBIND11_MODULE(_twopoint, m) {
  m.doc() = "Two-point functions in the constrained two-oscillator model";
  m.attr("__version__") = std::string(kToolVersion);

  py::class_<SectorLabel>(m, "SectorLabel")
      .def(py::init<int>(), py::arg("mass"))
      .def_property_readonly("mass", &SectorLabel::mass)
      .def_property_readonly("two_j", &SectorLabel::two_j)
      .def_property_readonly("j", &SectorLabel::j)
      .def_property_readonly("dim", &SectorLabel::dim)
      .def(py::self == py::self)
      .def("__repr__", [](const SectorLabel& s) {
        return "SectorLabel(mass=" + std::to_string(s.mass()) + ")";
      });

  py::class_<CoherentLabel>(m, "CoherentLabel")
      .def(py::init([](cplx alpha, cplx beta) { return CoherentLabel{alpha, beta}; }),
           py::arg("alpha"), py::arg("beta"))
      .def_readwrite("alpha", &CoherentLabel::alpha)
      .def_readwrite("beta", &CoherentLabel::beta)
      .def_property_readonly("weight", &CoherentLabel::weight);

  py::class_<TrajectoryParams>(m, "TrajectoryParams")
      .def(py::init<double, double, double, double, int>(), py::arg("a"), py::arg("b"),
           py::arg("phi_a"), py::arg("phi_b"), py::arg("mass"))
      .def_static("on_shell", &TrajectoryParams::on_shell, py::arg("mass"), py::arg("a_squared"),
                  py::arg("phi_a") = 0.0, py::arg("phi_b") = 0.0)
      .def_property_readonly("a", &TrajectoryParams::a)
      .def_property_readonly("b", &TrajectoryParams::b)
      .def_property_readonly("phi_a", &TrajectoryParams::phi_a)
      .def_property_readonly("phi_b", &TrajectoryParams::phi_b)
      .def_property_readonly("mass", &TrajectoryParams::mass)
      .def_property_readonly("delta_phi", &TrajectoryParams::delta_phi)
      .def("point", [](const TrajectoryParams& t, double tau) { return classical_trajectory(t, {tau}); },
           py::arg("tau"))
      .def("label", [](const TrajectoryParams& t, double tau) { return label_from_trajectory(t, {tau}); },
           py::arg("tau"));

  py::class_<TrajectoryPair>(m, "TrajectoryPair")
      .def(py::init([](const TrajectoryParams& t, double tau1, double tau2) {
             return TrajectoryPair(t, {tau1}, {tau2});
           }),
           py::arg("trajectory"), py::arg("tau1"), py::arg("tau2"))
      .def_property_readonly("delta_tau", &TrajectoryPair::delta_tau)
      .def_property_readonly("label1", &TrajectoryPair::label1)
      .def_property_readonly("label2", &TrajectoryPair::label2);

  py::enum_<Method>(m, "Method")
      .value("BRUTEFORCE", Method::BruteForce)
      .value("CLOSED", Method::ClosedForm)
      .value("TRAJECTORY", Method::Trajectory)
      .value("SEMICLASSICAL", Method::Semiclassical)
      .value("QUADRATURE", Method::Quadrature);

  m.def("overlap", &overlap, py::arg("label2"), py::arg("label1"), py::arg("sector"));
  m.def("gauge_transform", &gauge_transform, py::arg("label"), py::arg("theta"));
  m.def("suppression_exponent", &suppression_exponent, py::arg("offset"), py::arg("sector"),
        py::arg("reference") = 1.0);
  m.def("normalized_coherent",
        [](const CoherentLabel& l, const SectorLabel& s) -> Eigen::VectorXcd {
          return normalized_coherent(l, s).amplitudes();
        },
        py::arg("label"), py::arg("sector"), "Amplitudes indexed by n_b = j + m.");

  m.def("projector", [](int mass, int n_max) -> Eigen::MatrixXcd {
    return projector_spectral(SectorLabel(mass), Truncation(n_max)).entries();
  }, py::arg("mass"), py::arg("n_max"));
  m.def("projector_group_average", [](int mass, int n_max, int steps) -> Eigen::MatrixXcd {
    return projector_group_average(SectorLabel(mass), Truncation(n_max), steps).entries();
  }, py::arg("mass"), py::arg("n_max"), py::arg("steps"));

  m.def("two_point_bruteforce",
        [](const CoherentLabel& l1, const CoherentLabel& l2, const SectorLabel& s, double scale) {
          return two_point_bruteforce(l1, l2, s, scale).value;
        },
        py::arg("label1"), py::arg("label2"), py::arg("sector"), py::arg("scale") = 1.0);
  m.def("two_point_closed_form",
        [](const CoherentLabel& l1, const CoherentLabel& l2, const SectorLabel& s) {
          return two_point_closed_form(l1, l2, s).value;
        },
        py::arg("label1"), py::arg("label2"), py::arg("sector"));
  m.def("two_point_quadrature",
        [](const CoherentLabel& l1, const CoherentLabel& l2, const SectorLabel& s, int order) {
          if (order <= 0) order = quadrature_order_threshold(s);
          return two_point_quadrature(l1, l2, s, gauss_hermite_rule(order)).value;
        },
        py::arg("label1"), py::arg("label2"), py::arg("sector"), py::arg("order") = 0);
  m.def("two_point_trajectory",
        [](const TrajectoryPair& p, const SectorLabel& s) { return two_point_trajectory(p, s).value; },
        py::arg("pair"), py::arg("sector"));
  m.def("two_point_semiclassical",
        [](const TrajectoryPair& p, int mass) { return two_point_semiclassical(p, mass).value; },
        py::arg("pair"), py::arg("mass"));
  m.def("sho_two_point",
        [](double mass, double omega, double t1, double t2) {
          return sho_two_point({mass, omega, t1, t2});
        },
        py::arg("mass") = 1.0, py::arg("omega") = 1.0, py::arg("t1") = 0.0, py::arg("t2") = 0.0);

  m.def("gauss_hermite_rule", [](int order) {
    const auto r = gauss_hermite_rule(order);
    return py::make_tuple(r.nodes, r.weights);
  }, py::arg("order"));
  m.def("hermite_function", &hermite_function, py::arg("n"), py::arg("x"));
  m.def("kernel", &kernel, py::arg("sector"), py::arg("q_a"), py::arg("q_b"), py::arg("qp_a"),
        py::arg("qp_b"));
  m.def("quadrature_order_threshold", &quadrature_order_threshold, py::arg("sector"));

  m.def("correlator_sweep",
        [](int mass, double a_squared, double delta_phi, const std::string& tau,
           const std::vector<std::string>& methods) {
          SweepSpec spec;
          spec.mass = mass;
          spec.a_squared = a_squared;
          spec.delta_phi = delta_phi;
          spec.tau = Range::parse(tau, "tau");
          spec.methods.clear();
          for (const auto& name : methods) spec.methods.push_back(method_from_name(name));
          return report_to_dict(correlator_sweep(spec));
        },
        py::arg("mass"), py::arg("a_squared"), py::arg("delta_phi") = 0.0,
        py::arg("tau") = "0:3.141592653589793:9",
        py::arg("methods") = std::vector<std::string>{"closed"});

  m.def("run_validation", [](int max_mass, std::uint64_t seed, int samples) {
    py::list out;
    for (const auto& r : run_validation({max_mass, seed, 1.0, samples})) {
      py::dict d;
      d["name"] = r.name;
      d["passed"] = r.passed;
      d["observed"] = r.observed;
      d["tolerance"] = r.tolerance;
      d["detail"] = r.detail;
      out.append(d);
    }
    return out;
  }, py::arg("max_mass") = 8, py::arg("seed") = 1, py::arg("samples") = 10);
}
