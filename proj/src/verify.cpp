#include "fracalc/verify.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

#include <json.hpp>

#include "fracalc/extension.hpp"
#include "fracalc/fracops.hpp"
#include "fracalc/grid.hpp"
#include "fracalc/onesided.hpp"
#include "fracalc/quadrature.hpp"
#include "fracalc/special.hpp"
#include "fracalc/spectral.hpp"

namespace fracalc {
namespace verify {

namespace {

CheckRecord make_record(std::string name, std::string anchor, double computed,
                        double expected, double tol) {
  CheckRecord r;
  r.name = std::move(name);
  r.anchor = std::move(anchor);
  r.computed = computed;
  r.expected = expected;
  r.tolerance = tol;
  r.pass = std::fabs(computed - expected) <= tol;
  return r;
}

double sup_node_diff(const GridFunction& a, const GridFunction& b,
                     double window) {
  double sup = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::fabs(a.node_x(i)) <= window)
      sup = std::max(sup, std::fabs(a.value(i) - b.value(i)));
  return sup;
}

VerificationReport suite_gamma() {
  VerificationReport rep;
  rep.suite = "gamma";
  rep.records.push_back(make_record(
      "gamma_half", "gamma(1/2) = sqrt(pi)", gamma_fn(0.5),
      1.7724538509055160273, 1e-12));
  rep.records.push_back(make_record(
      "gamma_neg_half", "gamma(-1/2) = -2 sqrt(pi)", gamma_fn(-0.5),
      -3.5449077018110320546, 1e-12));
  rep.records.push_back(make_record(
      "reflection", "gamma(x) gamma(1-x) sin(pi x) = pi at x = 0.3",
      gamma_fn(0.3) * gamma_fn(0.7) * std::sin(M_PI * 0.3), M_PI, 1e-12));
  rep.records.push_back(make_record(
      "duplication",
      "gamma(x) gamma(x+1/2) = 2^(1-2x) sqrt(pi) gamma(2x) at x = 0.7",
      gamma_fn(0.7) * gamma_fn(1.2) /
          (std::pow(2.0, 1.0 - 1.4) * std::sqrt(M_PI) * gamma_fn(1.4)),
      1.0, 1e-12));
  rep.records.push_back(make_record(
      "macdonald_half", "K_(1/2)(1) = sqrt(pi/2) exp(-1)",
      macdonald_k(0.5, 1.0), 0.46106850444789455, 1e-10));
  // Dual representation: K_nu(z) = (1/2)(z/2)^nu int exp(-r - z^2/4r)
  // r^(-1-nu) dr.
  {
    const double nu = 0.25, z = 1.3;
    auto g = [&](double r) {
      return std::exp(-r - z * z / (4.0 * r)) * std::pow(r, -1.0 - nu);
    };
    double integral = integrate_geometric_down(g, 1.0, 1e-16, 16);
    integral += integrate_geometric_up(g, 1.0, 1e-16, 16);
    const double dual = 0.5 * std::pow(0.5 * z, nu) * integral;
    rep.records.push_back(make_record(
        "macdonald_dual", "cosh-integral and Laplace forms of K agree",
        macdonald_k(nu, z) - dual, 0.0, 1e-11));
  }
  return rep;
}

VerificationReport suite_propositions() {
  VerificationReport rep;
  rep.suite = "propositions";
  const Alpha a(0.5);
  const GridFunction f = make_gaussian(0.0, 1.0, 0.02, 30.0);
  const double window = 10.0;
  const double tol = 1e-4;

  struct Pair {
    const char* name;
    const char* anchor;
    OperatorKind kind;
  };
  const Pair pairs[] = {
      {"prop1_i", "even-kernel average matches cot(pi a/2) |xi|^-a",
       OperatorKind::KAlpha},
      {"prop1_ii", "normalized even-kernel average matches |xi|^-a",
       OperatorKind::KAlphaH},
      {"prop1_iii",
       "half difference of lateral integrals matches i sgn(xi) |xi|^-a",
       OperatorKind::HAlpha},
      {"prop2_i", "symmetrized difference quotient matches |xi|^a",
       OperatorKind::KMinusAlpha},
      {"prop2_ii",
       "half difference of lateral derivatives matches i sgn(xi) |xi|^a",
       OperatorKind::HMinusAlpha},
  };
  for (const Pair& p : pairs) {
    const GridFunction phys = two_sided(p.kind, f, a);
    const GridFunction spec = spectral::apply_symbol(f, p.kind, a);
    rep.records.push_back(
        make_record(p.name, p.anchor, sup_node_diff(phys, spec, window), 0.0,
                    tol));
  }
  // Symbol-level algebra for the two families, checked on a xi sweep.
  {
    double worst_int = 0.0, worst_der = 0.0;
    const double half_sin = std::sin(0.5 * M_PI * a.alpha);
    for (double xi : {-7.3, -2.0, -0.31, 0.11, 1.0, 4.7, 19.0}) {
      const std::complex<double> sum_int =
          spectral::symbol(OperatorKind::WeylIntegral, a.alpha, xi) +
          spectral::symbol(OperatorKind::RiemannLiouvilleIntegral, a.alpha,
                           xi);
      worst_int = std::max(
          worst_int,
          std::abs(sum_int / (2.0 * half_sin) -
                   spectral::symbol(OperatorKind::KAlpha, a.alpha, xi)));
      const std::complex<double> diff_der =
          spectral::symbol(OperatorKind::RightDerivative, a.alpha, xi) -
          spectral::symbol(OperatorKind::LeftDerivative, a.alpha, xi);
      worst_der = std::max(
          worst_der,
          std::abs(-diff_der / (2.0 * half_sin) -
                   spectral::symbol(OperatorKind::HMinusAlpha, a.alpha, xi)));
    }
    rep.records.push_back(make_record(
        "prop1_iv",
        "lateral integral symbols recombine into the even-kernel symbol",
        worst_int, 0.0, 1e-12));
    rep.records.push_back(make_record(
        "prop2_iii",
        "lateral derivative symbols recombine into the odd-kernel symbol",
        worst_der, 0.0, 1e-12));
  }
  {
    const GridFunction mid = two_sided(OperatorKind::KAlphaH, f, a);
    const GridFunction back = two_sided(OperatorKind::KMinusAlpha, mid, a);
    rep.records.push_back(make_record(
        "composition_kk",
        "symmetrized difference quotient inverts the even-kernel average",
        sup_node_diff(back, f, window), 0.0, tol));
  }
  {
    const GridFunction mid = two_sided(OperatorKind::HMinusAlpha, f, a);
    const GridFunction back = two_sided(OperatorKind::HAlpha, mid, a);
    const GridFunction minus_f = lin_comb(-1.0, f, 0.0, f);
    rep.records.push_back(make_record(
        "composition_hh", "the two odd-kernel operators compose to minus one",
        sup_node_diff(back, minus_f, window), 0.0, tol));
  }
  return rep;
}

VerificationReport suite_extension() {
  VerificationReport rep;
  rep.suite = "extension";
  const GridFunction f = make_one_sided_exp(1.0, 0.005, 40.0);
  {
    const Alpha a(0.5);
    const double u = extension_value(f, a, 1.0, 0.75);
    rep.records.push_back(make_record(
        "half_closed_form",
        "order-1/2 lift of exp(-x) is exp(-x-t)", u,
        std::exp(-1.75), 1e-9));
    const double res = pde_residual_at(f, a, 1.0, 0.5, 1e-3, 1e-3);
    rep.records.push_back(make_record(
        "pde_residual", "lifted function solves the degenerate equation",
        res, 0.0, 1e-3));
    rep.records.push_back(make_record(
        "neumann_trace",
        "weighted boundary flux recovers the lateral derivative",
        neumann_trace_at(f, a, 1.0) - marchaud_right_at(f, a, 1.0), 0.0,
        1e-3));
    const std::complex<double> H = multiplier_h(0.5, 1.0, 1.0);
    const std::complex<double> closed =
        std::exp(-std::sqrt(std::complex<double>(0.0, -1.0)));
    rep.records.push_back(make_record(
        "multiplier_half",
        "height multiplier at order 1/2 is exp(-t sqrt(-i xi))",
        std::abs(H - closed), 0.0, 1e-8));
  }
  {
    const Alpha a(0.25);
    const double t = 0.7, x = 1.0;
    const double expect = std::exp(-x) * std::pow(2.0, 0.75) / a.gamma_pos *
                          std::pow(t, 0.25) * macdonald_k(0.25, t);
    rep.records.push_back(make_record(
        "macdonald_closed_form",
        "lift of exp(-x) matches the Macdonald-function profile",
        extension_value(f, a, x, t), expect, 1e-9));
    rep.records.push_back(make_record(
        "multiplier_bound", "height multiplier has modulus at most one",
        std::max(0.0, std::abs(multiplier_h(0.25, 2.0, 10.0)) - 1.0), 0.0,
        1e-12));
  }
  return rep;
}

VerificationReport suite_fftc() {
  VerificationReport rep;
  rep.suite = "fftc";
  const Alpha a(0.5);
  const GridFunction f = make_one_sided_exp(2.0, 0.005, 40.0);
  rep.records.push_back(make_record(
      "integral_eigen", "order-a integral scales exp(-l x) by l^-a",
      weyl_at(f, a, 1.0), std::pow(2.0, -0.5) * std::exp(-2.0), 1e-8));
  rep.records.push_back(make_record(
      "derivative_eigen", "order-a derivative scales exp(-l x) by l^a",
      marchaud_right_at(f, a, 1.0), std::pow(2.0, 0.5) * std::exp(-2.0),
      1e-6));
  for (double al : {0.25, 0.5, 0.75})
    rep.records.push_back(make_record(
        "kernel_mass_" + std::to_string(al).substr(0, 4),
        "inversion kernel has unit mass", KernelKTilde(al).mass(), 1.0,
        1e-8));
  const GridFunction g = make_one_sided_exp(1.0, 0.005, 40.0);
  const InversionReport inv = fftc_verify(g, a, {1e-2, 1e-4, 1e-6});
  rep.records.push_back(make_record(
      "inversion_limit", "truncated inversion converges back to the input",
      inv.sup_err.back(), 0.0, 1e-3));
  rep.records.push_back(make_record(
      "inversion_monotone", "truncation error decreases with eps",
      inv.monotone ? 1.0 : 0.0, 1.0, 0.0));
  rep.records.push_back(make_record(
      "inversion_routes", "direct and kernel-convolution routes agree",
      inv.route_gap, 0.0, 1e-6));
  return rep;
}

VerificationReport suite_maxprin() {
  VerificationReport rep;
  rep.suite = "maxprin";
  const Alpha a(0.5);
  const GridFunction bump = make_bump(3.0, 1.0, 0.005);
  const MaxPrincipleReport mp = max_principle_check(bump, 1.0, a);
  rep.records.push_back(make_record(
      "sign_at_null_min",
      "derivative is nonpositive where the function vanishes under its "
      "right tail",
      std::max(mp.value, 0.0) +
          (mp.verdict == MaxPrincipleReport::Verdict::Violated ? 1.0 : 0.0),
      0.0, 1e-9));
  // exp(-x) solves the one-step scheme with rhs exp(-x); first-order
  // convergence and positivity of the solution.
  auto solve_err = [&](double h) {
    const std::size_t n_in = static_cast<std::size_t>(std::lround(2.0 / h));
    std::vector<double> fv(n_in);
    for (std::size_t i = 0; i < n_in; ++i) fv[i] = std::exp(-h * double(i));
    GridFunction f(0.0, h, std::move(fv), TailModel::zero(2.0 - h));
    const GridFunction gdat = make_exp_on(1.0, 2.0, 12.0, h);
    const GridFunction u = dirichlet_solve(f, gdat, a);
    double err = 0.0, min_u = 1e300;
    for (std::size_t i = 0; i < u.size(); ++i) {
      err = std::max(err, std::fabs(u.value(i) - std::exp(-u.node_x(i))));
      min_u = std::min(min_u, u.value(i));
    }
    return std::pair<double, double>(err, min_u);
  };
  const auto [e1, m1] = solve_err(0.01);
  const auto [e2, m2] = solve_err(0.005);
  rep.records.push_back(make_record(
      "scheme_positivity", "nonnegative data gives a nonnegative solution",
      std::min(m1, m2) < -1e-8 ? 1.0 : 0.0, 0.0, 0.0));
  rep.records.push_back(make_record(
      "scheme_first_order", "halving the step halves the error", e1 / e2, 2.0,
      0.3));
  return rep;
}

VerificationReport suite_weights() {
  VerificationReport rep;
  rep.suite = "weights";
  const double h = 0.002, x0 = -2.0;
  const std::size_t n = 2001;
  std::vector<double> wv(n);
  for (std::size_t i = 0; i < n; ++i) wv[i] = std::exp(x0 + h * double(i));
  const double xe = x0 + h * double(n - 1);
  GridFunction w(x0, h, std::move(wv), TailModel::zero(xe),
                 TailModel::zero(x0));
  const WeightReport one = check_ap_plus(w, 2.0);
  rep.records.push_back(make_record(
      "exp_one_sided", "exp(x) passes the forward-interval product test",
      one.sup_product, 1.0, 1e-3));
  const WeightReport two = check_ap(w, 2.0);
  rep.records.push_back(make_record(
      "exp_two_sided",
      "exp(x) fails the centered product test (sinh growth)",
      two.sup_product, std::sinh(2.0) / 2.0, 2e-2));
  // Nondecreasing weights dominate their left-interval averages.
  std::vector<double> sv(n);
  for (std::size_t i = 0; i < n; ++i)
    sv[i] = 1.0 + (w.node_x(i) > -0.5 ? 2.0 : 0.0) + (w.node_x(i) > 1.0 ? 3.0 : 0.0);
  GridFunction step(x0, h, std::move(sv), TailModel::zero(xe),
                    TailModel::zero(x0));
  const GridFunction mminus = maximal_minus(step);
  double worst = 0.0;
  for (std::size_t i = 0; i < step.size(); ++i)
    worst = std::max(worst, mminus.value(i) - step.value(i));
  rep.records.push_back(make_record(
      "step_backward_maximal",
      "backward maximal of a nondecreasing weight stays below the weight",
      std::max(worst, 0.0), 0.0, 1e-12));
  return rep;
}

}  // namespace

bool VerificationReport::all_pass() const {
  for (const CheckRecord& r : records)
    if (!r.pass) return false;
  return true;
}

std::vector<std::string> suite_names() {
  return {"gamma", "propositions", "extension", "fftc", "maxprin", "weights"};
}

VerificationReport run_suite(const std::string& suite) {
  if (suite == "gamma") return suite_gamma();
  if (suite == "propositions") return suite_propositions();
  if (suite == "extension") return suite_extension();
  if (suite == "fftc") return suite_fftc();
  if (suite == "maxprin") return suite_maxprin();
  if (suite == "weights") return suite_weights();
  if (suite == "all") {
    VerificationReport rep;
    rep.suite = "all";
    for (const std::string& name : suite_names()) {
      VerificationReport sub = run_suite(name);
      for (CheckRecord& r : sub.records) {
        r.name = sub.suite + "." + r.name;
        rep.records.push_back(std::move(r));
      }
    }
    return rep;
  }
  throw std::invalid_argument("unknown suite: " + suite);
}

std::string report_to_json(const VerificationReport& rep) {
  nlohmann::json out;
  out["schema"] = 1;
  out["suite"] = rep.suite;
  out["all_pass"] = rep.all_pass();
  out["checks"] = nlohmann::json::array();
  for (const CheckRecord& r : rep.records)
    out["checks"].push_back({{"name", r.name},
                             {"anchor", r.anchor},
                             {"computed", r.computed},
                             {"expected", r.expected},
                             {"tolerance", r.tolerance},
                             {"pass", r.pass}});
  return out.dump(2);
}

}  // namespace verify
}  // namespace fracalc
