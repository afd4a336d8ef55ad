#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

namespace fracalc {

/// Gauss-Legendre rule on [-1,1]; rules are computed once and cached.
struct GaussRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

const GaussRule& gauss_rule(int n);

template <class F>
auto integrate_panel(F&& f, double a, double b, int n) -> decltype(f(a)) {
  const GaussRule& r = gauss_rule(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  decltype(f(a)) acc{};
  for (std::size_t i = 0; i < r.nodes.size(); ++i)
    acc += r.weights[i] * f(mid + half * r.nodes[i]);
  return acc * half;
}

/// Composite integration over [t0, +inf) on geometrically growing panels
/// [t0 2^j, t0 2^(j+1)]. Stops when panel contributions fall below abs_tol
/// and keep shrinking. Throws if the contributions fail to decay. Panels
/// below t_min are always accumulated: neither the stopping nor the
/// divergence test engages before the integrand's active window (which may
/// start with a run of zero panels) has been covered. Inside that window
/// panel widths are capped at width_cap so distant sharp features stay
/// resolved; past it the integrand follows a smooth tail model and the
/// geometric growth resumes.
template <class F>
double integrate_geometric_up(F&& f, double t0, double abs_tol, int n,
                              int max_levels = 2000, bool* warn = nullptr,
                              double t_min = 0.0,
                              double width_cap =
                                  std::numeric_limits<double>::infinity()) {
  double total = 0.0, a = t0;
  int growing = 0, done = 0;
  double prev = std::numeric_limits<double>::infinity();
  for (int j = 0; j < max_levels; ++j) {
    const double b = a < t_min ? std::min(2.0 * a, a + width_cap) : 2.0 * a;
    const double c = integrate_panel(f, a, b, n);
    total += c;
    if (b < t_min) {
      a = b;
      continue;
    }
    const double mag = std::fabs(c);
    if (mag >= prev && mag > abs_tol) {
      if (++growing > 12)
        throw std::runtime_error("integrate_geometric_up: divergent tail integral");
    } else {
      growing = 0;
    }
    prev = mag;
    if (mag < abs_tol) {
      if (++done > 3) return total;
    } else {
      done = 0;
    }
    a = b;
    if (a > 1e290) break;
  }
  if (warn) *warn = true;
  return total;
}

/// Composite integration over (0, t0] on geometrically shrinking panels
/// [t0 2^-(j+1), t0 2^-j]. Requires an integrable singularity at 0, i.e.
/// |integrand| <~ t^sigma with sigma > -1, so contributions decay geometrically.
template <class F>
double integrate_geometric_down(F&& f, double t0, double abs_tol, int n,
                                int max_levels = 900, bool* warn = nullptr) {
  double total = 0.0, b = t0;
  int growing = 0, done = 0;
  double prev = std::numeric_limits<double>::infinity();
  for (int j = 0; j < max_levels; ++j) {
    const double a = 0.5 * b;
    const double c = integrate_panel(f, a, b, n);
    total += c;
    const double mag = std::fabs(c);
    if (mag >= prev && mag > abs_tol) {
      if (++growing > 12)
        throw std::runtime_error(
            "integrate_geometric_down: non-integrable singularity");
    } else {
      growing = 0;
    }
    prev = mag;
    if (mag < abs_tol) {
      if (++done > 3) return total;
    } else {
      done = 0;
    }
    b = a;
    if (b < 1e-290) break;
  }
  if (warn) *warn = true;
  return total;
}

/// Richardson extrapolation for a sequence v(eps_i) = v0 + sum_k c_k eps^p_k
/// with known exponents p_k; eps_i halves between entries. `values` is
/// ordered from the largest eps to the smallest.
double richardson(std::vector<double> values, const std::vector<double>& exponents);

}  // namespace fracalc
