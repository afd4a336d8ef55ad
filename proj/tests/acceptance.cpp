// Acceptance gate: one line per criterion, exit 0 iff all pass.

#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "fracalc/extension.hpp"
#include "fracalc/fracops.hpp"
#include "fracalc/grid.hpp"
#include "fracalc/onesided.hpp"
#include "fracalc/spectral.hpp"
#include "fracalc/verify.hpp"

using namespace fracalc;

namespace {

int g_failures = 0;

void report(int id, const char* what, bool pass, const std::string& detail) {
  std::printf("%s criterion %d: %s (%s)\n", pass ? "PASS" : "FAIL", id, what,
              detail.c_str());
  if (!pass) ++g_failures;
}

std::string fmt(const char* label, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s %.3g", label, v);
  return buf;
}

// smooth bump supported on (c-w, c+w), peak 1 at c
double bump_value(double x, double c, double w) {
  const double u = (x - c) / w;
  if (std::fabs(u) >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - u * u));
}

void criterion_eigen() {
  double worst = 0.0;
  for (double lambda : {0.5, 1.0, 2.0}) {
    const double x_max = 20.0 / lambda;
    GridFunction f = make_one_sided_exp(lambda, 0.01, x_max);
    for (double al : {0.25, 0.5, 0.75}) {
      const Alpha a(al);
      GridFunction w = weyl(f, a);
      GridFunction d = marchaud_right(f, a);
      for (std::size_t i = 0; i < f.size(); ++i) {
        const double x = f.node_x(i);
        if (x > 0.75 * x_max) break;
        const double e = std::exp(-lambda * x);
        worst = std::max(worst, std::fabs(w.value(i) / (std::pow(lambda, -al) * e) - 1.0));
        worst = std::max(worst, std::fabs(d.value(i) / (std::pow(lambda, al) * e) - 1.0));
      }
    }
  }
  report(1,
         "exp(-l x) is an eigenfunction of the order-a integral (factor l^-a) "
         "and derivative (factor l^a)",
         worst < 1e-5, fmt("max rel err", worst));
}

void criterion_inversion_limit() {
  const Alpha a(0.5);
  bool pass = true;
  double worst_final = 0.0, worst_route = 0.0;
  for (int which = 0; which < 2; ++which) {
    GridFunction f = which == 0 ? make_gaussian(0.0, 1.0, 0.02, 25.0)
                                : make_one_sided_exp(1.0, 0.005, 40.0);
    InversionReport rep = fftc_verify(f, a, {1e-2, 1e-4, 1e-6});
    pass = pass && rep.monotone && rep.sup_err.back() < 1e-3 &&
           rep.route_gap < 1e-6;
    worst_final = std::max(worst_final, rep.sup_err.back());
    worst_route = std::max(worst_route, rep.route_gap);
  }
  report(2,
         "truncated derivative of the order-a integral converges back to the "
         "input, and both computation routes agree",
         pass, fmt("final sup err", worst_final) + ", " +
                   fmt("route gap", worst_route));
}

void criterion_kernel_mass() {
  double worst = 0.0;
  for (double al : {0.1, 0.25, 0.5, 0.75, 0.9})
    worst = std::max(worst, std::fabs(KernelKTilde(al).mass() - 1.0));
  report(3, "inversion kernel has unit mass", worst < 1e-8,
         fmt("max |mass-1|", worst));
}

void criterion_extension() {
  GridFunction e = make_one_sided_exp(1.0, 0.005, 40.0);
  // closed form at order 1/2
  const Alpha half(0.5);
  ExtensionField field = extension_field(e, half, 0.0, 2.0, 11, 0.1, 1.1, 11);
  double worst_field = 0.0;
  for (std::size_t i = 0; i < field.nx; ++i)
    for (std::size_t j = 0; j < field.nt; ++j)
      worst_field = std::max(
          worst_field,
          std::fabs(field.at(i, j) - std::exp(-field.x(i) - field.t(j))));
  // residual and boundary flux on a gaussian
  GridFunction g = make_gaussian(0.0, 1.0, 0.01, 14.0);
  double worst_res = 0.0, worst_trace = 0.0;
  for (double al : {0.25, 0.5, 0.75}) {
    const Alpha a(al);
    worst_res = std::max(
        worst_res, std::fabs(pde_residual_at(g, a, 0.4, 0.6, 1e-3, 1e-3)));
    for (double x : {-0.5, 0.8})
      worst_trace = std::max(worst_trace,
                             std::fabs(neumann_trace_at(g, a, x) -
                                       marchaud_right_at(g, a, x)));
  }
  report(4,
         "subordination lift matches exp(-x-t) at order 1/2, solves the "
         "degenerate equation, and its weighted flux recovers the derivative",
         worst_field < 1e-6 && worst_res < 1e-3 && worst_trace < 1e-3,
         fmt("field err", worst_field) + ", " + fmt("residual", worst_res) +
             ", " + fmt("trace gap", worst_trace));
}

void criterion_multiplier() {
  // multiplier route vs subordination route at two orders
  double worst_gap = 0.0;
  const double t = 1.0;
  for (double al : {0.25, 0.75}) {
    const Alpha a(al);
    GridFunction f = make_gaussian(0.0, 1.0, 0.05, 20.0);
    auto m = [&](double xi) { return multiplier_h(al, t, xi); };
    std::vector<double> u = spectral::apply_multiplier(f, m);
    for (std::size_t i = 0; i < f.size(); i += 25) {
      const double x = f.node_x(i);
      if (std::fabs(x) > 10.0) continue;
      worst_gap =
          std::max(worst_gap, std::fabs(u[i] - extension_value(f, a, x, t)));
    }
  }
  // closed form at order 1/2
  double worst_closed = 0.0;
  for (double xi : {1e-3, 0.05, 0.3, 1.0, 4.0, 30.0, 200.0}) {
    const std::complex<double> ref =
        std::exp(-std::sqrt(std::complex<double>(0.0, -xi)));
    worst_closed = std::max(worst_closed,
                            std::abs(multiplier_h(0.5, 1.0, xi) - ref));
  }
  report(5,
         "height multiplier applied in frequency reproduces the lift, and at "
         "order 1/2 equals exp(-t sqrt(-i xi))",
         worst_gap < 1e-5 && worst_closed < 1e-8,
         fmt("route gap", worst_gap) + ", " + fmt("closed form", worst_closed));
}

void criterion_unification() {
  verify::VerificationReport rep = verify::run_suite("propositions");
  double worst = 0.0;
  bool pass = rep.records.size() == 9;
  for (const auto& r : rep.records) {
    pass = pass && r.pass && r.tolerance <= 1e-4;
    worst = std::max(worst, std::fabs(r.computed - r.expected));
  }
  report(6,
         "all nine two-sided identity checks pass, including both "
         "compositions",
         pass, fmt("max err", worst));
}

void criterion_max_principle() {
  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> center(1.5, 14.0);
  std::uniform_real_distribution<double> width(0.3, 1.5);
  std::uniform_real_distribution<double> height(0.1, 2.0);
  std::uniform_int_distribution<int> nbumps(1, 3);
  std::uniform_int_distribution<int> alpha_pick(0, 2);
  const double alphas[3] = {0.25, 0.5, 0.75};

  int violations = 0;
  const double h = 0.01;
  const std::size_t n = 2001;  // window [0, 20]
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> v(n, 0.0);
    const int nb = nbumps(rng);
    for (int b = 0; b < nb; ++b) {
      const double c = center(rng), w = width(rng), amp = height(rng);
      for (std::size_t i = 0; i < n; ++i)
        v[i] += amp * bump_value(h * double(i), c, w);
    }
    GridFunction phi(0.0, h, std::move(v), TailModel::zero(h * double(n - 1)),
                     TailModel::zero(0.0));
    const Alpha a(alphas[alpha_pick(rng)]);
    if (max_principle_check(phi, 0.0, a).verdict ==
        MaxPrincipleReport::Verdict::Violated)
      ++violations;
  }

  // nonnegative rhs with zero exterior data keeps the solution nonnegative
  double min_u = 0.0;
  const Alpha a(0.5);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n_in = 200;
    std::vector<double> fv(n_in, 0.0);
    const double c = 0.3 + 1.4 * (trial / 10.0), w = 0.2 + 0.05 * trial;
    for (std::size_t i = 0; i < n_in; ++i)
      fv[i] = bump_value(h * double(i), c, w);
    GridFunction f(0.0, h, std::move(fv),
                   TailModel::zero(h * double(n_in - 1)));
    const std::size_t n_z = 501;
    GridFunction z(h * double(n_in), h, std::vector<double>(n_z, 0.0),
                   TailModel::zero(h * double(n_in + n_z - 1)));
    GridFunction u = dirichlet_solve(f, z, a);
    for (std::size_t i = 0; i < u.size(); ++i)
      min_u = std::min(min_u, u.value(i));
  }

  // first-order convergence of the eigenfunction recovery
  auto solve_err = [&](double step) {
    const std::size_t n_in = static_cast<std::size_t>(std::lround(2.0 / step));
    std::vector<double> fv(n_in);
    for (std::size_t i = 0; i < n_in; ++i) fv[i] = std::exp(-step * double(i));
    GridFunction f(0.0, step, std::move(fv),
                   TailModel::zero(step * double(n_in - 1)));
    GridFunction gdat = make_exp_on(1.0, 2.0, 12.0, step);
    GridFunction u = dirichlet_solve(f, gdat, a);
    double err = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i)
      err = std::max(err, std::fabs(u.value(i) - std::exp(-u.node_x(i))));
    return err;
  };
  const double ratio = solve_err(0.01) / solve_err(0.005);

  report(7,
         "200 random nonnegative test functions give a nonpositive derivative "
         "at their vanishing minimum; the scheme preserves positivity and "
         "converges at first order",
         violations == 0 && min_u >= -1e-8 && ratio > 1.7 && ratio < 2.3,
         fmt("violations", violations) + ", " + fmt("min u", min_u) + ", " +
             fmt("h-ratio", ratio));
}

void criterion_weights() {
  const double h = 0.002;
  auto sampled = [&](double lo, double hi, auto&& fn) {
    const std::size_t n = static_cast<std::size_t>(std::lround((hi - lo) / h)) + 1;
    std::vector<double> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = fn(lo + h * double(i));
    return GridFunction(lo, h, std::move(v), TailModel::zero(hi),
                        TailModel::zero(lo));
  };
  GridFunction w = sampled(-2.0, 2.0, [](double x) { return std::exp(x); });
  const double one_sided = check_ap_plus(w, 2.0).sup_product;
  const bool pass_one = one_sided >= 1.0 - 1e-3 && one_sided <= 1.0;
  // centered products grow with the window: evaluated on nested windows
  GridFunction w_small = sampled(-1.0, 1.0, [](double x) { return std::exp(x); });
  const double two_small = check_ap(w_small, 2.0).sup_product;
  const double two_large = check_ap(w, 2.0).sup_product;
  const bool pass_two = two_large > two_small && two_large > 1.5;

  GridFunction c = make_constant(4.0, -2.0, 2.0, 0.01);
  const bool pass_const =
      std::fabs(check_ap_plus(c, 2.0).sup_product - 1.0) < 1e-12 &&
      std::fabs(check_ap(c, 2.0).sup_product - 1.0) < 1e-12;

  // nondecreasing step weights: backward averages never exceed the weight
  std::mt19937 rng(711);
  std::uniform_real_distribution<double> jump(0.0, 2.0);
  std::uniform_int_distribution<std::size_t> where(1, 399);
  double worst_excess = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> v(401, 0.1 + jump(rng));
    for (int s = 0; s < 4; ++s) {
      const std::size_t at = where(rng);
      const double by = jump(rng);
      for (std::size_t i = at; i < v.size(); ++i) v[i] += by;
    }
    GridFunction sw(0.0, 0.01, std::move(v), TailModel::zero(4.0),
                    TailModel::zero(0.0));
    GridFunction m = maximal_minus(sw);
    for (std::size_t i = 0; i < sw.size(); ++i)
      worst_excess = std::max(worst_excess, m.value(i) - sw.value(i));
  }
  const bool pass_steps = worst_excess < 1e-10;

  report(8,
         "exp(x) passes the forward-interval class test but fails the "
         "centered one; constants pass both; nondecreasing weights dominate "
         "their backward averages",
         pass_one && pass_two && pass_const && pass_steps,
         fmt("one-sided sup", one_sided) + ", " +
             fmt("centered sup", two_large) + ", " +
             fmt("step excess", worst_excess));
}

void criterion_duality() {
  const Alpha a(0.5);
  std::mt19937 rng(90210);
  std::uniform_real_distribution<double> center(-2.0, 2.0);
  std::uniform_real_distribution<double> width(0.5, 1.5);
  const double h = 0.01, lo = -20.0;
  const std::size_t n = 4001;
  double worst = 0.0;
  for (int pair = 0; pair < 20; ++pair) {
    const double c1 = center(rng), w1 = width(rng);
    const double c2 = center(rng), w2 = width(rng);
    std::vector<double> pv(n), qv(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double x = lo + h * double(i);
      pv[i] = std::exp(-0.5 * (x - c1) * (x - c1) / (w1 * w1));
      qv[i] = std::exp(-0.5 * (x - c2) * (x - c2) / (w2 * w2));
    }
    GridFunction phi(lo, h, std::move(pv), TailModel::zero(-lo),
                     TailModel::zero(lo));
    GridFunction psi(lo, h, std::move(qv), TailModel::zero(-lo),
                     TailModel::zero(lo));
    const double lhs = inner_product(marchaud_right(phi, a), psi);
    const double rhs = inner_product(phi, marchaud_left(psi, a));
    worst = std::max(worst, std::fabs(lhs - rhs) / std::fabs(lhs));
  }
  report(9,
         "the right and left derivatives are adjoint in the L2 pairing over "
         "20 random gaussian pairs",
         worst < 1e-6, fmt("max rel gap", worst));
}

}  // namespace

int main() {
  criterion_eigen();
  criterion_inversion_limit();
  criterion_kernel_mass();
  criterion_extension();
  criterion_multiplier();
  criterion_unification();
  criterion_max_principle();
  criterion_weights();
  criterion_duality();
  if (g_failures == 0) {
    std::printf("acceptance: all 9 criteria pass\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", g_failures);
  return 1;
}
