#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lienard/classical.hpp"
#include "lienard/cli.hpp"
#include "lienard/eigensolver.hpp"
#include "lienard/quantize.hpp"
#include "lienard/susy.hpp"
#include "lienard/verify.hpp"
#include "lienard/wavefn.hpp"

namespace py = pybind11;
using namespace lienard;

namespace {

MomentumGrid sample_grid(const Model& m, std::size_t points) {
  const auto span = verify::check_grid(m, 4, 1e-3);
  return {span.front(), (span.back() - span.front()) / static_cast<double>(points - 1), points};
}

}  // namespace

PYBIND11_MODULE(_lienard, m) {
  m.doc() = "Quantized Lienard oscillator core";
  m.attr("__version__") = LIENARD_VERSION;

  py::register_exception<ConstraintError>(m, "ConstraintError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  py::class_<PhysicalParams>(m, "PhysicalParams")
      .def(py::init([](double k, double omega, double hbar) {
             PhysicalParams p{k, omega, hbar};
             p.validate();
             return p;
           }),
           py::arg("k") = 1.0, py::arg("omega") = 1.0, py::arg("hbar") = 1.0)
      .def_readonly("k", &PhysicalParams::k)
      .def_readonly("omega", &PhysicalParams::omega)
      .def_readonly("hbar", &PhysicalParams::hbar)
      .def("__repr__", [](const PhysicalParams& p) { return "PhysicalParams(" + describe(p, {}) + ")"; });

  py::class_<AmbiguityParams>(m, "AmbiguityParams")
      .def(py::init<double, double>(), py::arg("alpha") = 0.0, py::arg("gamma") = 0.0)
      .def_readonly("alpha", &AmbiguityParams::alpha)
      .def_readonly("gamma", &AmbiguityParams::gamma)
      .def_property_readonly("product", &AmbiguityParams::product);

  py::class_<DerivedParams>(m, "DerivedParams")
      .def_readonly("a_script", &DerivedParams::a_script)
      .def_readonly("lambda_", &DerivedParams::lambda)
      .def_readonly("shift", &DerivedParams::shift)
      .def_readonly("b_coef", &DerivedParams::b_coef)
      .def_readonly("a_coef", &DerivedParams::a_coef)
      .def_readonly("p_max", &DerivedParams::p_max)
      .def("__eq__", [](const DerivedParams& a, const DerivedParams& b) { return a == b; });

  m.def("derive_params", &derive_params, py::arg("phys"), py::arg("amb") = AmbiguityParams{});

  m.def(
      "spectrum",
      [](const PhysicalParams& phys, const AmbiguityParams& amb, unsigned n_max) {
        std::vector<double> e;
        for (const auto& l : susy::spectrum(phys, amb, n_max).levels) e.push_back(l.energy);
        return e;
      },
      py::arg("phys"), py::arg("amb") = AmbiguityParams{}, py::arg("n_max") = 4, "Closed-form levels 0..n_max.");

  m.def(
      "eigensolver_spectrum",
      [](const PhysicalParams& phys, const AmbiguityParams& amb, unsigned n_max, double y_max, std::size_t points) {
        std::vector<double> e;
        for (const auto& r : eigensolver::verify_spectrum(Model::make(phys, amb), n_max,
                                                          eigensolver::YGrid(y_max, points))) {
          e.push_back(r.numeric);
        }
        return e;
      },
      py::arg("phys"), py::arg("amb") = AmbiguityParams{}, py::arg("n_max") = 3, py::arg("y_max") = 150.0,
      py::arg("points") = 6000, "Finite-difference levels in the y variable.");

  m.def(
      "psi",
      [](const PhysicalParams& phys, const AmbiguityParams& amb, unsigned n, const std::vector<double>& p) {
        const auto model = Model::make(phys, amb);
        std::vector<double> out;
        out.reserve(p.size());
        for (double x : p) out.push_back(wavefn::psi(model, n, x));
        return out;
      },
      py::arg("phys"), py::arg("amb"), py::arg("n"), py::arg("p"));

  m.def("effective_potential", &quantize::effective_potential, py::arg("phys"), py::arg("amb"), py::arg("p"));

  m.def(
      "riccati_residual",
      [](const PhysicalParams& phys, const AmbiguityParams& amb, std::size_t points) {
        const auto model = Model::make(phys, amb);
        return susy::riccati_residual(model, sample_grid(model, points));
      },
      py::arg("phys"), py::arg("amb") = AmbiguityParams{}, py::arg("points") = 1000);

  m.def(
      "shape_invariance",
      [](const PhysicalParams& phys, const AmbiguityParams& amb, std::size_t points) {
        const auto model = Model::make(phys, amb);
        const auto st = susy::shape_invariance_remainder(model, sample_grid(model, points));
        return py::make_tuple(st.mean, st.stddev);
      },
      py::arg("phys"), py::arg("amb") = AmbiguityParams{}, py::arg("points") = 1000, "(mean, stddev) of the remainder.");

  m.def(
      "gram_defect",
      [](const PhysicalParams& phys, const AmbiguityParams& amb, unsigned n_max) {
        return wavefn::overlap_matrix(Model::make(phys, amb), n_max).identity_defect();
      },
      py::arg("phys"), py::arg("amb") = AmbiguityParams{}, py::arg("n_max") = 4);

  m.def(
      "limit_deviation",
      [](unsigned n, const std::vector<double>& k_values, double omega, double hbar, const AmbiguityParams& amb) {
        std::vector<double> out;
        for (const auto& r : wavefn::limit_deviation(n, k_values, Model::make({0.0, omega, hbar}, amb))) {
          out.push_back(r.deviation);
        }
        return out;
      },
      py::arg("n"), py::arg("k_values") = std::vector<double>{1e-1, 1e-2, 1e-3}, py::arg("omega") = 1.0,
      py::arg("hbar") = 1.0, py::arg("amb") = AmbiguityParams{});

  m.def(
      "trajectory",
      [](const PhysicalParams& phys, double amplitude, double t_end, double step) {
        const auto t =
            classical::integrate_lienard(phys, classical::analytic_state(phys, amplitude, 0.0, 0.0), t_end, step);
        std::vector<double> exact;
        for (double time : t.times) exact.push_back(classical::analytic_solution(phys, amplitude, 0.0, time));
        return py::dict(py::arg("t") = t.times, py::arg("x_numeric") = t.positions, py::arg("x_analytic") = exact);
      },
      py::arg("phys"), py::arg("amplitude") = 1.0, py::arg("t_end") = 6.283185307179586, py::arg("step") = 1e-3);

  m.def(
      "verify",
      [](const PhysicalParams& phys, const AmbiguityParams& amb, unsigned n_max) {
        verify::Options opt;
        opt.phys = phys;
        opt.amb = amb;
        opt.n_max = n_max;
        std::vector<report::ReportRecord> records;
        {
          py::gil_scoped_release release;
          records = verify::run_all(opt);
        }
        py::list out;
        for (const auto& r : records) {
          out.append(py::dict(py::arg("check") = r.check, py::arg("measured") = r.measured,
                              py::arg("expected") = r.expected, py::arg("tolerance") = r.tolerance,
                              py::arg("rule") = r.rule, py::arg("pass") = r.pass));
        }
        return out;
      },
      py::arg("phys"), py::arg("amb") = AmbiguityParams{}, py::arg("n_max") = 4);

  m.def(
      "run_command",
      [](std::vector<std::string> args) {
        args.insert(args.begin(), "lienard");
        std::ostringstream out, err;
        const int code = cli::run_command(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs a CLI subcommand in-process; returns (exit code, stdout, stderr).");
}
