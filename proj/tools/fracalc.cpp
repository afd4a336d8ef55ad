// Command-line front end: batch verification campaigns and plot-ready data.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fracalc/extension.hpp"
#include "fracalc/fracops.hpp"
#include "fracalc/grid.hpp"
#include "fracalc/io.hpp"
#include "fracalc/onesided.hpp"
#include "fracalc/spectral.hpp"
#include "fracalc/verify.hpp"

namespace {

using namespace fracalc;

constexpr int kExitPass = 0;
constexpr int kExitCheckFail = 1;
constexpr int kExitError = 2;

OperatorKind parse_op(std::string name) {
  std::replace(name.begin(), name.end(), '-', '_');
  if (name == "right_derivative") name = "marchaud_right";
  if (name == "left_derivative") name = "marchaud_left";
  return operator_kind_from_string(name);
}

double sup_diff(const GridFunction& a, const GridFunction& b) {
  if (a.size() != b.size()) throw std::runtime_error("grid size mismatch");
  double sup = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    sup = std::max(sup, std::fabs(a.value(i) - b.value(i)));
  return sup;
}

void write_json(const std::string& path, const nlohmann::json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

struct ApplyArgs {
  std::string input, out, oracle;
  std::string op = "weyl";
  double alpha = 0.5;
  double eps = 0.0;  // > 0 selects the truncated derivative
  double tol = 1e-5;
};

int cmd_apply(const ApplyArgs& args) {
  const GridFunction f = io::read_grid(args.input);
  const Alpha a(args.alpha);
  const OperatorKind kind = parse_op(args.op);
  GridFunction g = (args.eps > 0.0 && kind == OperatorKind::RightDerivative)
                       ? marchaud_right_eps(f, a, args.eps)
                       : two_sided(kind, f, a);
  if (!args.out.empty()) io::write_grid(args.out, g);

  nlohmann::json rep{{"schema", 1},
                     {"command", "apply"},
                     {"op", to_string(kind)},
                     {"alpha", args.alpha},
                     {"n", g.size()}};
  int rc = kExitPass;
  if (!args.oracle.empty()) {
    const GridFunction ref = args.oracle == "spectral"
                                 ? spectral::apply_symbol(f, kind, a)
                                 : io::read_grid(args.oracle);
    const double gap = sup_diff(g, ref);
    rep["oracle"] = args.oracle;
    rep["sup_diff"] = gap;
    rep["tol"] = args.tol;
    rep["pass"] = gap <= args.tol;
    if (gap > args.tol) rc = kExitCheckFail;
  }
  if (!args.out.empty()) write_json(args.out + ".report.json", rep);
  std::cout << rep.dump(2) << "\n";
  return rc;
}

struct VerifyArgs {
  std::string suite = "all";
  std::string out;
};

int cmd_verify(const VerifyArgs& args) {
  verify::VerificationReport rep = verify::run_suite(args.suite);
  std::sort(rep.records.begin(), rep.records.end(),
            [](const verify::CheckRecord& a, const verify::CheckRecord& b) {
              return a.name < b.name;
            });
  for (const verify::CheckRecord& r : rep.records)
    std::printf("%-5s %-32s computed=%.10g expected=%.10g tol=%.3g\n",
                r.pass ? "pass" : "FAIL", r.name.c_str(), r.computed,
                r.expected, r.tolerance);
  if (!args.out.empty()) {
    std::ofstream out(args.out);
    if (!out) throw std::runtime_error("cannot write " + args.out);
    out << verify::report_to_json(rep) << "\n";
  }
  return rep.all_pass() ? kExitPass : kExitCheckFail;
}

struct ExtendArgs {
  std::string input, out;
  double alpha = 0.5;
  double x_lo = 0.0;
  double grid_h = 0.05;
  std::size_t grid_n = 21;
};

int cmd_extend(const ExtendArgs& args) {
  const GridFunction f = io::read_grid(args.input);
  const Alpha a(args.alpha);
  const double x_hi = args.x_lo + args.grid_h * double(args.grid_n - 1);
  const double t_lo = args.grid_h;
  const double t_hi = args.grid_h * double(args.grid_n);
  const ExtensionField field = extension_field(f, a, args.x_lo, x_hi,
                                               args.grid_n, t_lo, t_hi,
                                               args.grid_n);
  io::write_field(args.out, field);
  // Neumann-trace column alongside the field: recovers the order-alpha
  // right derivative of the boundary data.
  std::ofstream trace(args.out + ".trace.csv");
  if (!trace) throw std::runtime_error("cannot write " + args.out + ".trace.csv");
  trace << "x,neumann_trace\n";
  char buf[90];
  for (std::size_t i = 0; i < field.nx; ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", field.x(i),
                  neumann_trace_at(f, a, field.x(i)));
    trace << buf;
  }
  return kExitPass;
}

struct DirichletArgs {
  std::string rhs, data, out;
  double alpha = 0.5;
};

int cmd_dirichlet(const DirichletArgs& args) {
  const GridFunction f = io::read_grid(args.rhs);
  const GridFunction g = io::read_grid(args.data);
  io::write_grid(args.out, dirichlet_solve(f, g, Alpha(args.alpha)));
  return kExitPass;
}

struct WeightsArgs {
  std::string input, out;
  double s = 2.0;
  double p = 0.0, q = 0.0;  // both > 0 selects the off-diagonal product
};

int cmd_weights(const WeightsArgs& args) {
  const GridFunction w = io::read_grid(args.input);
  const bool off_diag = args.p > 0.0 && args.q > 0.0;
  const WeightReport one = off_diag ? check_apq_plus(w, args.p, args.q)
                                    : check_ap_plus(w, args.s);
  nlohmann::json rep{{"schema", 1},
                     {"command", "weights"},
                     {"one_sided",
                      {{"sup_product", one.sup_product},
                       {"arg_anchor", one.arg_anchor},
                       {"arg_radius", one.arg_radius}}}};
  if (off_diag) {
    rep["p"] = args.p;
    rep["q"] = args.q;
  } else {
    const WeightReport two = check_ap(w, args.s);
    rep["s"] = args.s;
    rep["two_sided"] = {{"sup_product", two.sup_product},
                        {"arg_anchor", two.arg_anchor},
                        {"arg_radius", two.arg_radius}};
  }
  if (!args.out.empty()) write_json(args.out, rep);
  std::cout << rep.dump(2) << "\n";
  return kExitPass;
}

struct InvertArgs {
  std::string input, out;
  double alpha = 0.5;
  std::vector<double> eps;
  double tol = 1e-3;
};

int cmd_invert(const InvertArgs& args) {
  const GridFunction g = io::read_grid(args.input);
  std::vector<double> eps = args.eps;
  if (eps.empty()) eps = {1e-2, 1e-4, 1e-6};
  const InversionReport inv = fftc_verify(g, Alpha(args.alpha), eps);
  const bool pass = inv.monotone && inv.sup_err.back() <= args.tol;
  nlohmann::json rep{{"schema", 1},
                     {"command", "invert"},
                     {"alpha", args.alpha},
                     {"eps", inv.eps},
                     {"sup_err", inv.sup_err},
                     {"monotone", inv.monotone},
                     {"route_gap", inv.route_gap},
                     {"tol", args.tol},
                     {"pass", pass}};
  if (!args.out.empty()) write_json(args.out, rep);
  std::cout << rep.dump(2) << "\n";
  return pass ? kExitPass : kExitCheckFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"One-sided fractional calculus toolkit"};
  app.set_config("--config", "", "Config file mirroring every flag");
  app.require_subcommand(1);

  ApplyArgs ap;
  CLI::App* apply = app.add_subcommand(
      "apply", "Apply a catalog operator to a sampled function");
  apply->add_option("input", ap.input, "Input grid CSV")->required();
  apply->add_option("--op", ap.op, "Operator name");
  apply->add_option("--alpha", ap.alpha, "Fractional order in (0,1)");
  apply->add_option("--eps", ap.eps, "Truncation for the right derivative");
  apply->add_option("--out", ap.out, "Output grid CSV");
  apply->add_option("--oracle", ap.oracle,
                    "Reference grid CSV, or 'spectral' for the Fourier path");
  apply->add_option("--tol", ap.tol, "Oracle comparison tolerance");

  VerifyArgs ve;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("--suite", ve.suite,
                         "gamma|propositions|extension|fftc|maxprin|weights|all");
  verify_cmd->add_option("--out", ve.out, "JSON report path");

  ExtendArgs ex;
  CLI::App* extend = app.add_subcommand(
      "extend", "Lift boundary data through the degenerate extension");
  extend->add_option("input", ex.input, "Boundary data grid CSV")->required();
  extend->add_option("--alpha", ex.alpha, "Fractional order in (0,1)");
  extend->add_option("--x-lo", ex.x_lo, "Left edge of the rectangle");
  extend->add_option("--grid-h", ex.grid_h, "Spacing in x and t");
  extend->add_option("--grid-n", ex.grid_n, "Nodes per axis");
  extend->add_option("--out", ex.out, "Field CSV path")->required();

  DirichletArgs di;
  CLI::App* dirichlet = app.add_subcommand(
      "dirichlet", "Solve the one-sided Dirichlet problem");
  dirichlet->add_option("rhs", di.rhs, "Right-hand side grid CSV")->required();
  dirichlet->add_option("data", di.data, "Exterior data grid CSV")->required();
  dirichlet->add_option("--alpha", di.alpha, "Fractional order in (0,1)");
  dirichlet->add_option("--out", di.out, "Solution CSV path")->required();

  WeightsArgs we;
  CLI::App* weights = app.add_subcommand(
      "weights", "Forward-interval Muckenhoupt-type product tests");
  weights->add_option("input", we.input, "Weight grid CSV")->required();
  weights->add_option("--s", we.s, "Class exponent");
  weights->add_option("--p", we.p, "Off-diagonal source exponent");
  weights->add_option("--q", we.q, "Off-diagonal target exponent");
  weights->add_option("--out", we.out, "JSON report path");

  InvertArgs in;
  CLI::App* invert = app.add_subcommand(
      "invert", "Truncated inversion of the order-alpha integral");
  invert->add_option("input", in.input, "Grid CSV of an order-alpha integral")
      ->required();
  invert->add_option("--alpha", in.alpha, "Fractional order in (0,1)");
  invert->add_option("--eps", in.eps, "Truncation sequence (repeatable)");
  invert->add_option("--tol", in.tol, "Final sup-error bound");
  invert->add_option("--out", in.out, "JSON report path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitError;
  }

  try {
    if (apply->parsed()) return cmd_apply(ap);
    if (verify_cmd->parsed()) return cmd_verify(ve);
    if (extend->parsed()) return cmd_extend(ex);
    if (dirichlet->parsed()) return cmd_dirichlet(di);
    if (weights->parsed()) return cmd_weights(we);
    if (invert->parsed()) return cmd_invert(in);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
