#include "fracalc/extension.hpp"

#include <cmath>
#include <stdexcept>

#include "fracalc/parallel.hpp"
#include "fracalc/quadrature.hpp"

namespace fracalc {

namespace {

/// int_0^inf exp(-r) g(t^2/(4r)) r^(alpha+shift-1) dr for g = f or f'.
template <class G>
double subordination_integral(G&& eval, const Alpha& a, double x, double t,
                              double power) {
  const double q = 0.25 * t * t;
  auto g = [&](double r) {
    return std::exp(-r) * eval(x + q / r) * std::pow(r, power);
  };
  double total = integrate_geometric_down(g, 1.0, 1e-16, 16);
  total += integrate_geometric_up(g, 1.0, 1e-13, 16, 2000, nullptr, 40.0, 0.5);
  return total;
}

}  // namespace

double extension_value(const GridFunction& f, const Alpha& a, double x,
                       double t) {
  if (t < 0.0) throw std::invalid_argument("extension_value: t must be >= 0");
  if (t == 0.0) return f(x);
  auto eval = [&](double y) { return f(y); };
  return subordination_integral(eval, a, x, t, a.alpha - 1.0) / a.gamma_pos;
}

ExtensionField extension_field(const GridFunction& f, const Alpha& a,
                               double x_lo, double x_hi, std::size_t nx,
                               double t_lo, double t_hi, std::size_t nt) {
  if (nx < 2 || nt < 2)
    throw std::invalid_argument("extension_field: need at least a 2x2 grid");
  ExtensionField field;
  field.alpha = a.alpha;
  field.x0 = x_lo;
  field.hx = (x_hi - x_lo) / static_cast<double>(nx - 1);
  field.t0 = t_lo;
  field.ht = (t_hi - t_lo) / static_cast<double>(nt - 1);
  field.nx = nx;
  field.nt = nt;
  field.values.resize(nx * nt);
  parallel_for(nx * nt, [&](std::size_t idx) {
    const std::size_t i = idx % nx, j = idx / nx;
    field.values[idx] = extension_value(f, a, field.x(i), field.t(j));
  });
  return field;
}

double pde_residual_at(const GridFunction& f, const Alpha& a, double x,
                       double t, double dx, double dt) {
  if (t - dt <= 0.0)
    throw std::invalid_argument("pde_residual_at: need t > dt");
  const double uxp = extension_value(f, a, x + dx, t);
  const double uxm = extension_value(f, a, x - dx, t);
  const double u0 = extension_value(f, a, x, t);
  const double utp = extension_value(f, a, x, t + dt);
  const double utm = extension_value(f, a, x, t - dt);
  const double ux = (uxp - uxm) / (2.0 * dx);
  const double ut = (utp - utm) / (2.0 * dt);
  const double utt = (utp - 2.0 * u0 + utm) / (dt * dt);
  return ux + (1.0 - 2.0 * a.alpha) / t * ut + utt;
}

double neumann_trace_at(const GridFunction& f, const Alpha& a, double x) {
  auto flux = [&](double t) {
    // t^(1-2 alpha) U_t from the differentiated representation:
    // U_t = Gamma(alpha)^-1 (t/2) int exp(-r) f'(x + t^2/4r) r^(alpha-2) dr
    auto deval = [&](double y) { return f.derivative(y); };
    const double integral =
        subordination_integral(deval, a, x, t, a.alpha - 2.0);
    return -a.c_alpha * std::pow(t, 2.0 - 2.0 * a.alpha) * 0.5 * integral /
           a.gamma_pos;
  };
  const double t1 = 0.1;
  std::vector<double> seq = {flux(t1), flux(0.5 * t1), flux(0.25 * t1)};
  return richardson(std::move(seq), {2.0 - 2.0 * a.alpha, 2.0});
}

std::complex<double> multiplier_h(double alpha, double t, double xi) {
  if (alpha <= 0.0 || alpha >= 1.0)
    throw std::invalid_argument("multiplier_h: alpha must be in (0,1)");
  const double c = 0.25 * xi * t * t;
  if (c == 0.0) return {1.0, 0.0};
  if (c < 0.0) return std::conj(multiplier_h(alpha, t, -xi));

  // After u = 1/r the integral is int_0^inf exp(-1/u) exp(i c u) u^(-1-alpha)
  // du; the essential zero at u = 0 replaces the endpoint singularity.
  const GaussRule& rule = gauss_rule(16);
  auto integrand = [&](std::complex<double> z) {
    return std::exp(-1.0 / z) * std::exp(std::complex<double>(0.0, c) * z) *
           std::pow(z, std::complex<double>(-1.0 - alpha, 0.0));
  };
  std::complex<double> total(0.0, 0.0);
  // Real axis [u_floor, 2], panel width capped against the oscillation.
  const double cap = std::min(0.5, 3.0 / c);
  const double u_floor = 1.0 / 700.0;  // exp(-1/u) underflows below this
  for (double hi = 2.0; hi > u_floor;) {
    const double lo = std::max(hi / 2.0, hi - cap);
    const double mid = 0.5 * (lo + hi), halfw = 0.5 * (hi - lo);
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      const double u = mid + halfw * rule.nodes[q];
      total += rule.weights[q] * halfw * integrand({u, 0.0});
    }
    hi = lo;
  }
  // Continue along the real axis to U1 = max(2, 2/c) so the rotation point
  // sits beyond the slow oscillation; panel widths grow geometrically but
  // stay below ~3 radians of exp(i c u).
  const double U1 = std::max(2.0, 2.0 / c);
  for (double lo = 2.0; lo < U1;) {
    const double hi = std::min(U1, lo + std::min(lo, 3.0 / c));
    const double mid = 0.5 * (lo + hi), halfw = 0.5 * (hi - lo);
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      const double u = mid + halfw * rule.nodes[q];
      total += rule.weights[q] * halfw * integrand({u, 0.0});
    }
    lo = hi;
  }
  // Tail rotated onto the contour U1 + i v, where exp(i c z) decays as
  // exp(-c v) with no oscillation and the algebraic factor varies on the
  // scale U1 >= panel width.
  const double vw = 1.0 / c;
  for (int k = 0; k < 60; ++k) {
    const double lo = vw * k, hi = vw * (k + 1);
    const double mid = 0.5 * (lo + hi), halfw = 0.5 * (hi - lo);
    std::complex<double> panel(0.0, 0.0);
    for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
      const double v = mid + halfw * rule.nodes[q];
      panel += rule.weights[q] * halfw * integrand({U1, v});
    }
    total += std::complex<double>(0.0, 1.0) * panel;
    if (std::abs(panel) < 1e-18) break;
  }
  return total / gamma_fn(alpha);
}

}  // namespace fracalc
