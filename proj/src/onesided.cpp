#include "fracalc/onesided.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "fracalc/fracops.hpp"
#include "fracalc/parallel.hpp"
#include "fracalc/quadrature.hpp"

namespace fracalc {

KernelKTilde::KernelKTilde(double alpha_) : alpha(alpha_) {
  if (alpha <= 0.0 || alpha >= 1.0)
    throw std::invalid_argument("KernelKTilde: alpha must be in (0,1)");
  c = std::sin(M_PI * alpha) / M_PI;
}

double KernelKTilde::operator()(double x) const {
  if (x >= 0.0) return 0.0;
  const double y = -x;
  if (y < 1.0) return c * std::pow(y, alpha - 1.0);
  // (y^a - (y-1)^a)/y, written through expm1 so the cancellation for
  // large y stays fully accurate.
  return c * std::pow(y, alpha - 1.0) * (-std::expm1(alpha * std::log1p(-1.0 / y)));
}

double KernelKTilde::mass() const {
  auto g = [&](double y) { return (*this)(-y); };
  // Graded panels into both endpoint singularities: y^(alpha-1) at 0 and
  // the (y-1)^alpha branch point at 1, approached from either side.
  double total = integrate_geometric_down(g, 1.0, 1e-13, 16);
  total += integrate_geometric_down([&](double z) { return g(1.0 + z); }, 1.0,
                                    1e-13, 16);
  total += integrate_geometric_up(g, 2.0, 1e-13, 16);
  return total;
}

GridFunction ktilde_convolve(const GridFunction& f, const Alpha& a,
                             double eps) {
  if (eps <= 0.0)
    throw std::invalid_argument("ktilde_convolve: eps must be > 0");
  const KernelKTilde kt(a.alpha);
  auto kernel = [&](double u) { return kt(-u / eps) / eps; };
  QuadratureSpec spec = default_spec(f);
  spec.eps = std::min(spec.eps, 0.5 * eps);
  spec.tail_cut = 1e-12;
  std::vector<double> v(f.size());
  // The kernel switches branch at u = eps with only Hoelder regularity, so
  // the panels are graded into that point from both sides before the
  // smooth far region takes over.
  parallel_for(f.size(), [&](std::size_t i) {
    const double x = f.node_x(i);
    auto g = [&](double u) { return f(x + u) * kernel(u); };
    double total = integrate_geometric_down(g, eps, spec.tail_cut * 1e-3,
                                            spec.nodes_per_panel);
    total += integrate_geometric_down([&](double z) { return g(eps + z); },
                                      eps, spec.tail_cut * 1e-3,
                                      spec.nodes_per_panel);
    total += integrate_geometric_up(g, 2.0 * eps, spec.tail_cut,
                                    spec.nodes_per_panel, 2000, nullptr,
                                    std::max(0.0, f.x_end() - x),
                                    spec.width_cap);
    v[i] = total;
  });
  // The kernel has unit mass, so tails map onto themselves up to the
  // Laplace-type factor picked up by an exponential rate.
  TailModel right = f.tail();
  if (right.kind == TailKind::ExpDecay) {
    auto damped = [&](double u) {
      return std::exp(-right.rate * u) * kernel(u);
    };
    double scale = integrate_geometric_down(damped, std::max(spec.eps, 1e-12),
                                            1e-15, 16);
    scale += integrate_geometric_up(damped, std::max(spec.eps, 1e-12), 1e-15,
                                    16, 2000, nullptr, 60.0 / right.rate, 0.5);
    right = right.scaled(scale);
  }
  return f.with_values(std::move(v), right, TailModel::zero(f.x0()));
}

InversionReport fftc_verify(const GridFunction& f, const Alpha& a,
                            std::vector<double> eps_list) {
  if (eps_list.empty())
    throw std::invalid_argument("fftc_verify: need at least one eps");
  InversionReport rep;
  rep.eps = std::move(eps_list);
  const GridFunction g = weyl(f, a);
  GridFunction last = f;  // placeholder, overwritten below
  for (double eps : rep.eps) {
    last = marchaud_right_eps(g, a, eps);
    double sup = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
      sup = std::max(sup, std::fabs(last.value(i) - f.value(i)));
    rep.sup_err.push_back(sup);
  }
  rep.monotone = true;
  for (std::size_t k = 0; k + 1 < rep.sup_err.size(); ++k)
    if (rep.sup_err[k + 1] >= rep.sup_err[k]) rep.monotone = false;
  const GridFunction conv = ktilde_convolve(f, a, rep.eps.back());
  for (std::size_t i = 0; i < f.size(); ++i)
    rep.route_gap =
        std::max(rep.route_gap, std::fabs(last.value(i) - conv.value(i)));
  return rep;
}

namespace {

/// int over [valid_from, valid_from + s] of |tail|.
double tail_mass(const TailModel& t, double s) {
  switch (t.kind) {
    case TailKind::Zero:
      return 0.0;
    case TailKind::Constant:
      return std::fabs(t.coeff) * s;
    case TailKind::ExpDecay:
      return std::fabs(t.coeff) / t.rate * (-std::expm1(-t.rate * s));
    case TailKind::PowerDecay: {
      const double y0 = std::fabs(t.valid_from), y1 = y0 + s;
      if (std::fabs(t.rate - 1.0) < 1e-12)
        return std::fabs(t.coeff) * std::log(y1 / y0);
      return std::fabs(t.coeff) *
             (std::pow(y1, 1.0 - t.rate) - std::pow(y0, 1.0 - t.rate)) /
             (1.0 - t.rate);
    }
  }
  return 0.0;
}

std::vector<double> abs_prefix(const GridFunction& f) {
  std::vector<double> T(f.size(), 0.0);
  for (std::size_t i = 1; i < f.size(); ++i)
    T[i] = T[i - 1] +
           0.5 * f.h() * (std::fabs(f.value(i - 1)) + std::fabs(f.value(i)));
  return T;
}

/// sup over intervals [x, x+d] of d^expo int |f|; expo = -1 is the
/// classical maximal function, expo = alpha - 1 the fractional one.
GridFunction maximal_plus_impl(const GridFunction& f, double expo) {
  const std::vector<double> T = abs_prefix(f);
  const double h = f.h();
  const std::size_t n = f.size();
  std::vector<double> out(n);
  parallel_for(n, [&](std::size_t i) {
    double best = expo == -1.0 ? std::fabs(f.value(i)) : 0.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = h * static_cast<double>(j - i);
      best = std::max(best, (T[j] - T[i]) * std::pow(d, expo));
    }
    // Intervals reaching past the window, resolved through the tail model.
    const double base = T[n - 1] - T[i];
    const double to_edge = f.x_end() - f.node_x(i);
    for (int k = 0; k < 60; ++k) {
      const double s = h * std::pow(2.0, k);
      const double d = to_edge + s;
      best = std::max(best,
                      (base + tail_mass(f.tail(), s)) * std::pow(d, expo));
      if (f.tail().kind == TailKind::Zero && k > 4) break;
    }
    out[i] = best;
  });
  return f.with_values(std::move(out), TailModel::zero(f.x_end()),
                       TailModel::zero(f.x0()));
}

struct Prefix {
  std::vector<double> T;
  double h;
  double avg(std::size_t lo, std::size_t hi) const {
    return (T[hi] - T[lo]) / (h * static_cast<double>(hi - lo));
  }
};

Prefix power_prefix(const GridFunction& w, double expo) {
  Prefix p;
  p.h = w.h();
  p.T.assign(w.size(), 0.0);
  auto val = [&](std::size_t i) {
    const double v = w.value(i);
    if (v <= 0.0)
      throw std::domain_error("weight values must be strictly positive");
    return std::pow(v, expo);
  };
  for (std::size_t i = 1; i < w.size(); ++i)
    p.T[i] = p.T[i - 1] + 0.5 * p.h * (val(i - 1) + val(i));
  return p;
}

WeightReport weight_sup(const GridFunction& w, const Prefix& left,
                        double left_expo, const Prefix& right,
                        double right_expo, bool centered) {
  WeightReport rep;
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t k_max = centered ? std::min(i, n - 1 - i)
                                       : std::min(i, n - 1 - i);
    for (std::size_t k = 1; k <= k_max; ++k) {
      const double la = centered ? left.avg(i - k, i + k) : left.avg(i - k, i);
      const double ra =
          centered ? right.avg(i - k, i + k) : right.avg(i, i + k);
      const double prod =
          std::pow(la, left_expo) * std::pow(ra, right_expo);
      if (prod > rep.sup_product) {
        rep.sup_product = prod;
        rep.arg_anchor = w.node_x(i);
        rep.arg_radius = w.h() * static_cast<double>(k);
      }
    }
  }
  return rep;
}

}  // namespace

GridFunction maximal_plus(const GridFunction& f) {
  return maximal_plus_impl(f, -1.0);
}

GridFunction maximal_minus(const GridFunction& f) {
  return reflect(maximal_plus(reflect(f)));
}

GridFunction maximal_plus_frac(const GridFunction& f, const Alpha& a) {
  return maximal_plus_impl(f, a.alpha - 1.0);
}

WeightReport check_ap_plus(const GridFunction& w, double s) {
  if (s <= 1.0) throw std::invalid_argument("check_ap_plus: need s > 1");
  const double sp = s / (s - 1.0);
  const Prefix pw = power_prefix(w, 1.0);
  const Prefix ps = power_prefix(w, 1.0 - sp);
  return weight_sup(w, pw, 1.0 / s, ps, 1.0 / sp, false);
}

WeightReport check_ap(const GridFunction& w, double s) {
  if (s <= 1.0) throw std::invalid_argument("check_ap: need s > 1");
  const double sp = s / (s - 1.0);
  const Prefix pw = power_prefix(w, 1.0);
  const Prefix ps = power_prefix(w, 1.0 - sp);
  return weight_sup(w, pw, 1.0 / s, ps, 1.0 / sp, true);
}

WeightReport check_apq_plus(const GridFunction& w, double p, double q) {
  if (p <= 1.0 || q <= 0.0)
    throw std::invalid_argument("check_apq_plus: need p > 1, q > 0");
  const double pp = p / (p - 1.0);
  const Prefix pq = power_prefix(w, q);
  const Prefix pdual = power_prefix(w, -pp);
  return weight_sup(w, pq, 1.0 / q, pdual, 1.0 / pp, false);
}

bool DecayDiagnostic::ok_for_integral(double alpha) const {
  switch (fitted_kind) {
    case TailKind::Zero:
      return true;
    case TailKind::ExpDecay:
      return rate > 0.0;
    case TailKind::PowerDecay:
      return rate > alpha;
    case TailKind::Constant:
      return false;
  }
  return false;
}

DecayDiagnostic integrability_diagnostic(const GridFunction& f) {
  DecayDiagnostic d;
  // Fit the right quarter of the window.
  const std::size_t lo = (3 * f.size()) / 4;
  std::vector<double> xs, ls;
  for (std::size_t i = lo; i < f.size(); ++i) {
    const double v = std::fabs(f.value(i));
    if (v > 1e-280) {
      xs.push_back(f.node_x(i));
      ls.push_back(std::log(v));
    }
  }
  if (xs.size() < 8) {
    d.fitted_kind = TailKind::Zero;
    return d;
  }
  auto fit = [](const std::vector<double>& x, const std::vector<double>& y,
                double& slope) {
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      sx += x[i];
      sy += y[i];
      sxx += x[i] * x[i];
      sxy += x[i] * y[i];
    }
    slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const double icpt = (sy - slope * sx) / n;
    double rss = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double r = y[i] - slope * x[i] - icpt;
      rss += r * r;
    }
    return rss;
  };
  double exp_slope = 0.0;
  const double exp_rss = fit(xs, ls, exp_slope);
  double pow_slope = 0.0;
  double pow_rss = std::numeric_limits<double>::infinity();
  if (xs.front() > 0.0) {
    std::vector<double> lx(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) lx[i] = std::log(xs[i]);
    pow_rss = fit(lx, ls, pow_slope);
  }
  if (std::fabs(exp_slope) < 1e-8 && exp_rss < 1e-12) {
    d.fitted_kind = TailKind::Constant;
    d.rate = 0.0;
  } else if (exp_rss <= pow_rss) {
    d.fitted_kind = TailKind::ExpDecay;
    d.rate = -exp_slope;
  } else {
    d.fitted_kind = TailKind::PowerDecay;
    d.rate = -pow_slope;
  }
  return d;
}

RangeDiagnostic range_diagnostic(const GridFunction& g, const Alpha& a) {
  RangeDiagnostic rep;
  const double h = g.h();
  rep.eps = {8.0 * h, 4.0 * h, 2.0 * h, h, 0.5 * h};
  std::vector<double> probes;
  for (int k = 1; k <= 16; ++k)
    probes.push_back(g.x0() + (g.x_end() - g.x0()) * k / 17.0);
  std::vector<std::vector<double>> vals(rep.eps.size(),
                                        std::vector<double>(probes.size()));
  for (std::size_t e = 0; e < rep.eps.size(); ++e)
    for (std::size_t p = 0; p < probes.size(); ++p)
      vals[e][p] = marchaud_right_eps_at(g, a, rep.eps[e], probes[p]);
  for (std::size_t e = 0; e + 1 < rep.eps.size(); ++e) {
    double gap = 0.0;
    for (std::size_t p = 0; p < probes.size(); ++p)
      gap = std::max(gap, std::fabs(vals[e + 1][p] - vals[e][p]));
    rep.step_gap.push_back(gap);
  }
  rep.converging = true;
  for (std::size_t k = 0; k + 1 < rep.step_gap.size(); ++k)
    if (rep.step_gap[k + 1] >= rep.step_gap[k] + 1e-12) rep.converging = false;
  return rep;
}

}  // namespace fracalc
