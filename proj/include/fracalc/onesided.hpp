#pragma once

#include <cstddef>
#include <vector>

#include "fracalc/grid.hpp"
#include "fracalc/special.hpp"

namespace fracalc {

/// Kernel of the truncated inversion identity, supported on (-inf, 0):
/// nonnegative, nondecreasing, and of total mass one. In terms of y = -x,
///   k(x) = C y^(alpha-1)               for 0 < y < 1,
///   k(x) = C (y^alpha - (y-1)^alpha)/y for y > 1,
/// with C = sin(pi alpha)/pi; the two branches meet continuously at y = 1.
struct KernelKTilde {
  double alpha;
  double c;

  explicit KernelKTilde(double alpha_);
  double operator()(double x) const;
  /// Total mass computed by quadrature (equals 1 analytically).
  double mass() const;
};

/// (f * k_eps)(x) with k_eps(x) = eps^-1 k(x/eps); equals the
/// eps-truncated derivative of the order-alpha integral of f.
GridFunction ktilde_convolve(const GridFunction& f, const Alpha& a,
                             double eps);

/// Convergence report for the truncated inversion of the order-alpha
/// integral: sup over the window of |D_eps(W f) - f| for each eps, plus
/// the gap between the direct route and the kernel-convolution route at
/// the smallest eps.
struct InversionReport {
  std::vector<double> eps;
  std::vector<double> sup_err;
  double route_gap = 0.0;
  bool monotone = false;
};

InversionReport fftc_verify(const GridFunction& f, const Alpha& a,
                            std::vector<double> eps_list);

/// One-sided Hardy-Littlewood maximal function sup_h h^-1 int_x^(x+h) |f|,
/// evaluated on the nodes over window-aligned intervals (tail models
/// extend the candidates past the window).
GridFunction maximal_plus(const GridFunction& f);
GridFunction maximal_minus(const GridFunction& f);
/// Fractional variant with h^(alpha-1) int_x^(x+h) |f|.
GridFunction maximal_plus_frac(const GridFunction& f, const Alpha& a);

/// One-sided Muckenhoupt-type product at anchor a and radius h:
///   (h^-1 int_{a-h}^a w)^(1/s) (h^-1 int_a^{a+h} w^(1-s'))^(1/s')
/// maximized over anchors and radii inside the window.
struct WeightReport {
  double sup_product = 0.0;
  double arg_anchor = 0.0;
  double arg_radius = 0.0;
};

WeightReport check_ap_plus(const GridFunction& w, double s);
/// Two-sided counterpart over centered intervals, for contrast.
WeightReport check_ap(const GridFunction& w, double s);
/// Off-diagonal product
///   (h^-1 int_{a-h}^a w^q)^(1/q) (h^-1 int_a^{a+h} w^(-p'))^(1/p').
WeightReport check_apq_plus(const GridFunction& w, double p, double q);

/// Fitted decay of the sampled values on the right end of the window.
struct DecayDiagnostic {
  TailKind fitted_kind = TailKind::Zero;
  double rate = 0.0;

  /// Integrability against the t^(alpha-1) kernel at infinity.
  bool ok_for_integral(double alpha) const;
};

DecayDiagnostic integrability_diagnostic(const GridFunction& f);

/// Probes whether g behaves like an order-alpha integral: the truncated
/// derivatives at shrinking eps must form a Cauchy sequence.
struct RangeDiagnostic {
  std::vector<double> eps;
  std::vector<double> step_gap;
  bool converging = false;
};

RangeDiagnostic range_diagnostic(const GridFunction& g, const Alpha& a);

}  // namespace fracalc
