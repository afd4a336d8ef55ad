#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fracalc/extension.hpp"
#include "fracalc/fracops.hpp"
#include "fracalc/grid.hpp"
#include "fracalc/onesided.hpp"
#include "fracalc/special.hpp"
#include "fracalc/spectral.hpp"
#include "fracalc/verify.hpp"

namespace py = pybind11;
using namespace fracalc;

PYBIND11_MODULE(_fracalc, m) {
  m.doc() = "One-sided fractional operators, extension problem, inversion "
            "kernels, and one-sided weight checks";

  py::enum_<TailKind>(m, "TailKind")
      .value("Zero", TailKind::Zero)
      .value("Constant", TailKind::Constant)
      .value("ExpDecay", TailKind::ExpDecay)
      .value("PowerDecay", TailKind::PowerDecay);

  py::class_<TailModel>(m, "TailModel")
      .def_static("zero", &TailModel::zero, py::arg("valid_from"))
      .def_static("constant", &TailModel::constant, py::arg("value"),
                  py::arg("valid_from"))
      .def_static("exp_decay", &TailModel::exp_decay, py::arg("rate"),
                  py::arg("edge_value"), py::arg("valid_from"))
      .def_static("power_decay", &TailModel::power_decay, py::arg("rate"),
                  py::arg("edge_value"), py::arg("valid_from"))
      .def_readonly("kind", &TailModel::kind)
      .def_readonly("rate", &TailModel::rate)
      .def_readonly("coeff", &TailModel::coeff)
      .def_readonly("valid_from", &TailModel::valid_from);

  py::class_<GridFunction>(m, "GridFunction")
      .def(py::init<double, double, std::vector<double>, TailModel,
                    TailModel>(),
           py::arg("x0"), py::arg("h"), py::arg("values"),
           py::arg("right_tail"), py::arg("left_tail"))
      .def_property_readonly("x0", &GridFunction::x0)
      .def_property_readonly("h", &GridFunction::h)
      .def_property_readonly("x_end", &GridFunction::x_end)
      .def("__len__", &GridFunction::size)
      .def("__call__", &GridFunction::operator(), py::arg("x"))
      .def("node_x", &GridFunction::node_x, py::arg("i"))
      .def("values", &GridFunction::values)
      .def("derivative", &GridFunction::derivative, py::arg("x"));

  py::enum_<OperatorKind>(m, "OperatorKind")
      .value("WeylIntegral", OperatorKind::WeylIntegral)
      .value("RiemannLiouvilleIntegral",
             OperatorKind::RiemannLiouvilleIntegral)
      .value("RightDerivative", OperatorKind::RightDerivative)
      .value("LeftDerivative", OperatorKind::LeftDerivative)
      .value("KAlpha", OperatorKind::KAlpha)
      .value("KAlphaH", OperatorKind::KAlphaH)
      .value("HAlpha", OperatorKind::HAlpha)
      .value("KMinusAlpha", OperatorKind::KMinusAlpha)
      .value("HMinusAlpha", OperatorKind::HMinusAlpha);

  m.def("gamma", &gamma_fn, py::arg("x"));
  m.def("macdonald_k", &macdonald_k, py::arg("nu"), py::arg("z"));

  m.def("make_gaussian", &make_gaussian, py::arg("center"), py::arg("width"),
        py::arg("h") = 0.01, py::arg("n_sigmas") = 12.0);
  m.def("make_one_sided_exp", &make_one_sided_exp, py::arg("rate"),
        py::arg("h") = 0.005, py::arg("x_max") = 40.0);
  m.def("make_bump", &make_bump, py::arg("center"), py::arg("width"),
        py::arg("h") = 0.01);

  auto wrap1 = [](GridFunction (*fn)(const GridFunction&, const Alpha&)) {
    return [fn](const GridFunction& f, double alpha) {
      return fn(f, Alpha(alpha));
    };
  };
  m.def("weyl", wrap1(&weyl), py::arg("f"), py::arg("alpha"));
  m.def("riemann_liouville", wrap1(&riemann_liouville), py::arg("f"),
        py::arg("alpha"));
  m.def("marchaud_right", wrap1(&marchaud_right), py::arg("f"),
        py::arg("alpha"));
  m.def("marchaud_left", wrap1(&marchaud_left), py::arg("f"),
        py::arg("alpha"));
  m.def(
      "marchaud_right_eps",
      [](const GridFunction& f, double alpha, double eps) {
        return marchaud_right_eps(f, Alpha(alpha), eps);
      },
      py::arg("f"), py::arg("alpha"), py::arg("eps"));
  m.def(
      "two_sided",
      [](OperatorKind kind, const GridFunction& f, double alpha) {
        return two_sided(kind, f, Alpha(alpha));
      },
      py::arg("kind"), py::arg("f"), py::arg("alpha"));
  m.def(
      "apply_symbol",
      [](const GridFunction& f, OperatorKind kind, double alpha) {
        return spectral::apply_symbol(f, kind, Alpha(alpha));
      },
      py::arg("f"), py::arg("kind"), py::arg("alpha"));
  m.def(
      "symbol",
      [](OperatorKind kind, double alpha, double xi) {
        return spectral::symbol(kind, alpha, xi);
      },
      py::arg("kind"), py::arg("alpha"), py::arg("xi"));

  m.def(
      "dirichlet_solve",
      [](const GridFunction& f, const GridFunction& g, double alpha) {
        return dirichlet_solve(f, g, Alpha(alpha));
      },
      py::arg("rhs"), py::arg("data"), py::arg("alpha"));

  m.def(
      "extension_value",
      [](const GridFunction& f, double alpha, double x, double t) {
        return extension_value(f, Alpha(alpha), x, t);
      },
      py::arg("f"), py::arg("alpha"), py::arg("x"), py::arg("t"));
  m.def(
      "neumann_trace",
      [](const GridFunction& f, double alpha, double x) {
        return neumann_trace_at(f, Alpha(alpha), x);
      },
      py::arg("f"), py::arg("alpha"), py::arg("x"));
  m.def("multiplier_h", &multiplier_h, py::arg("alpha"), py::arg("t"),
        py::arg("xi"));

  m.def(
      "kernel_mass",
      [](double alpha) { return KernelKTilde(alpha).mass(); },
      py::arg("alpha"));
  m.def(
      "ktilde_convolve",
      [](const GridFunction& f, double alpha, double eps) {
        return ktilde_convolve(f, Alpha(alpha), eps);
      },
      py::arg("f"), py::arg("alpha"), py::arg("eps"));
  m.def("maximal_plus", &maximal_plus, py::arg("f"));
  m.def("maximal_minus", &maximal_minus, py::arg("f"));
  m.def(
      "check_ap_plus",
      [](const GridFunction& w, double s) {
        const WeightReport rep = check_ap_plus(w, s);
        return py::make_tuple(rep.sup_product, rep.arg_anchor,
                              rep.arg_radius);
      },
      py::arg("w"), py::arg("s"));
  m.def(
      "check_ap",
      [](const GridFunction& w, double s) {
        const WeightReport rep = check_ap(w, s);
        return py::make_tuple(rep.sup_product, rep.arg_anchor,
                              rep.arg_radius);
      },
      py::arg("w"), py::arg("s"));

  m.def(
      "run_suite",
      [](const std::string& suite) {
        return verify::report_to_json(verify::run_suite(suite));
      },
      py::arg("suite"),
      "Runs a verification suite and returns the JSON report");
}
