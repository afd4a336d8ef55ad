#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "fracalc/grid.hpp"
#include "fracalc/special.hpp"

namespace fracalc {

/// Sampled solution of the degenerate extension problem on a rectangle
/// [x0, x0+(nx-1)hx] x [t0, t0+(nt-1)ht], row-major in t.
struct ExtensionField {
  double alpha = 0.0;
  double x0 = 0.0, hx = 0.0;
  double t0 = 0.0, ht = 0.0;
  std::size_t nx = 0, nt = 0;
  std::vector<double> values;

  double at(std::size_t i, std::size_t j) const { return values[j * nx + i]; }
  double x(std::size_t i) const { return x0 + hx * static_cast<double>(i); }
  double t(std::size_t j) const { return t0 + ht * static_cast<double>(j); }
};

/// U(x,t) = Gamma(alpha)^-1 int_0^inf exp(-r) f(x + t^2/(4r)) r^(alpha-1) dr.
double extension_value(const GridFunction& f, const Alpha& a, double x,
                       double t);

ExtensionField extension_field(const GridFunction& f, const Alpha& a,
                               double x_lo, double x_hi, std::size_t nx,
                               double t_lo, double t_hi, std::size_t nt);

/// Pointwise residual of the extension equation
///   U_x + ((1-2 alpha)/t) U_t + U_tt = 0
/// by central differences of step dx, dt on freshly computed values.
double pde_residual_at(const GridFunction& f, const Alpha& a, double x,
                       double t, double dx, double dt);

/// -c_alpha lim_{t->0} t^(1-2 alpha) U_t(x,t), computed from the
/// differentiated integral representation at two small heights and
/// extrapolated in t^(2-2 alpha). Recovers the order-alpha right
/// derivative of f.
double neumann_trace_at(const GridFunction& f, const Alpha& a, double x);

/// Fourier multiplier H(t, xi) of the extension at height t:
/// Gamma(alpha)^-1 int_0^inf exp(-r) exp(i xi t^2/(4r)) r^(alpha-1) dr.
/// At alpha = 1/2 it reduces to exp(-t sqrt(-i xi)).
std::complex<double> multiplier_h(double alpha, double t, double xi);

}  // namespace fracalc
