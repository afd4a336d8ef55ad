#pragma once

#include <stdexcept>

namespace fracalc {

/// Gamma function for real non-pole arguments.
/// For x in (-1,0) the value is obtained through Gamma(x) = Gamma(x+1)/x.
double gamma_fn(double x);

/// log |Gamma(x)| for x > 0.
double lgamma_pos(double x);

/// Macdonald function (modified Bessel function of the third kind) K_nu(z),
/// z > 0, via the cosh-integral representation
///   K_nu(z) = int_0^inf exp(-z cosh u) cosh(nu u) du
/// evaluated with a doubly exponential rule. Symmetric in nu.
double macdonald_k(double nu, double z);

/// Fractional order in (0,1) together with the constants that show up in
/// every operator of the catalog.
struct Alpha {
  double alpha;
  double gamma_pos;  // Gamma(alpha) > 0
  double gamma_neg;  // Gamma(-alpha) < 0
  double c_alpha;    // 4^(alpha-1/2) Gamma(alpha) / Gamma(1-alpha)

  explicit Alpha(double a);

  double value() const { return alpha; }
};

}  // namespace fracalc
