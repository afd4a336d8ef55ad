#include "fracalc/fracops.hpp"

#include <cmath>
#include <stdexcept>

#include "fracalc/parallel.hpp"
#include "fracalc/quadrature.hpp"

namespace fracalc {

namespace {

void require_decaying(const TailModel& t, double alpha, const char* op) {
  if (t.kind == TailKind::Constant)
    throw std::domain_error(std::string(op) +
                            ": non-decaying tail, integral diverges");
  if (t.kind == TailKind::PowerDecay && t.rate <= alpha)
    throw std::domain_error(std::string(op) +
                            ": tail decays too slowly for order alpha");
}

double weyl_node(const GridFunction& f, const Alpha& a, double x,
                 const QuadratureSpec& spec) {
  const double am1 = a.alpha - 1.0;
  auto kernel = [am1](double t) { return std::pow(t, am1); };
  return integrate_right_tail(f, x, kernel, spec) / a.gamma_pos;
}

/// Truncated difference quotient integral over [eps, inf), divided by the
/// (negative) gamma factor.
double marchaud_trunc_node(const GridFunction& u, const Alpha& a, double eps,
                           double x) {
  const double ux = u(x);
  const double m1a = -1.0 - a.alpha;
  auto g = [&](double t) { return (u(x + t) - ux) * std::pow(t, m1a); };
  const double integral = integrate_geometric_up(
      g, eps, 1e-14, 8, 2000, nullptr, std::max(0.0, u.x_end() - x), 0.5);
  return integral / a.gamma_neg;
}

double marchaud_node(const GridFunction& u, const Alpha& a, double x) {
  const double h = u.h();
  std::vector<double> seq = {marchaud_trunc_node(u, a, h, x),
                             marchaud_trunc_node(u, a, 0.5 * h, x),
                             marchaud_trunc_node(u, a, 0.25 * h, x)};
  return richardson(std::move(seq), {1.0 - a.alpha, 2.0 - a.alpha});
}

/// Factor s such that the eps-truncated derivative of c exp(-lambda x)
/// equals s * c exp(-lambda x).
double exp_trunc_scale(const Alpha& a, double lambda, double eps) {
  const double m1a = -1.0 - a.alpha;
  auto g = [&](double t) {
    return (std::exp(-lambda * t) - 1.0) * std::pow(t, m1a);
  };
  return integrate_geometric_up(g, eps, 1e-16, 8, 2000, nullptr,
                                60.0 / lambda, 0.5) /
         a.gamma_neg;
}

TailModel weyl_tail(const TailModel& t, const Alpha& a) {
  switch (t.kind) {
    case TailKind::Zero:
      return t;
    case TailKind::ExpDecay:
      return t.scaled(std::pow(t.rate, -a.alpha));
    case TailKind::PowerDecay: {
      TailModel out = t;
      out.rate = t.rate - a.alpha;
      out.coeff = t.coeff * gamma_fn(t.rate - a.alpha) / gamma_fn(t.rate);
      return out;
    }
    case TailKind::Constant:
      break;
  }
  throw std::domain_error("weyl: non-decaying tail, integral diverges");
}

/// Tail of the order-alpha derivative. For the truncated variant pass
/// eps > 0; the exponential scale then carries the truncation, while the
/// power-tail constant keeps its limiting value.
TailModel marchaud_tail(const TailModel& t, const Alpha& a, double eps) {
  switch (t.kind) {
    case TailKind::Zero:
      return t;
    case TailKind::Constant:
      return TailModel::zero(t.valid_from);
    case TailKind::ExpDecay: {
      const double s = eps > 0.0 ? exp_trunc_scale(a, t.rate, eps)
                                 : std::pow(t.rate, a.alpha);
      return t.scaled(s);
    }
    case TailKind::PowerDecay: {
      TailModel out = t;
      out.rate = t.rate + a.alpha;
      out.coeff = t.coeff * gamma_fn(t.rate + a.alpha) / gamma_fn(t.rate);
      return out;
    }
  }
  return TailModel::zero(t.valid_from);
}

GridFunction marchaud_right_impl(const GridFunction& u, const Alpha& a,
                                 double eps, bool extrapolate) {
  std::vector<double> v(u.size());
  parallel_for(u.size(), [&](std::size_t i) {
    v[i] = extrapolate ? marchaud_node(u, a, u.node_x(i))
                       : marchaud_trunc_node(u, a, eps, u.node_x(i));
  });
  TailModel right = marchaud_tail(u.tail(), a, extrapolate ? 0.0 : eps);
  // The behaviour of the output to the left of the window is not modelled.
  return u.with_values(std::move(v), right, TailModel::zero(u.x0()));
}

/// int_0^inf (f(x+t) + f(x-t)) t^(alpha-1) dt
double symmetric_integral_node(const GridFunction& f, double x, double alpha,
                               const QuadratureSpec& spec) {
  const double am1 = alpha - 1.0;
  auto g = [&](double t) { return (f(x + t) + f(x - t)) * std::pow(t, am1); };
  const double cover = std::max({0.0, f.x_end() - x, x - f.x0()});
  double total = integrate_geometric_down(g, spec.eps, spec.tail_cut * 1e-3,
                                          spec.nodes_per_panel);
  total += integrate_geometric_up(g, spec.eps, spec.tail_cut,
                                  spec.nodes_per_panel, 2000, nullptr, cover,
                                  spec.width_cap);
  return total;
}

/// int_0^inf (2 u(x) - u(x+t) - u(x-t)) t^(-1-alpha) dt
double symmetric_difference_node(const GridFunction& u, double x, double alpha,
                                 const QuadratureSpec& spec) {
  const double ux2 = 2.0 * u(x);
  const double m1a = -1.0 - alpha;
  // Below ~1e-7 the symmetric difference is round-off and the kernel blows
  // it up; the part dropped is O(|u''| t_floor^(2-alpha)).
  constexpr double t_floor = 1e-7;
  auto g = [&](double t) {
    if (t < t_floor) return 0.0;
    return (ux2 - u(x + t) - u(x - t)) * std::pow(t, m1a);
  };
  const double cover = std::max({0.0, u.x_end() - x, x - u.x0()});
  double total = integrate_geometric_down(g, spec.eps, spec.tail_cut * 1e-3,
                                          spec.nodes_per_panel);
  total += integrate_geometric_up(g, spec.eps, spec.tail_cut,
                                  spec.nodes_per_panel, 2000, nullptr, cover,
                                  spec.width_cap);
  return total;
}

/// Continuity-matched power tails of the given exponent on both sides.
GridFunction with_power_tails(const GridFunction& grid, std::vector<double> v,
                              double beta) {
  const double first = v.front(), last = v.back();
  TailModel right = std::fabs(grid.x_end()) > 1e-9
                        ? TailModel::power_decay(beta, last, grid.x_end())
                        : TailModel::zero(grid.x_end());
  TailModel left = std::fabs(grid.x0()) > 1e-9
                       ? TailModel::power_decay(beta, first, grid.x0())
                       : TailModel::zero(grid.x0());
  return grid.with_values(std::move(v), right, left);
}

}  // namespace

std::string to_string(OperatorKind k) {
  switch (k) {
    case OperatorKind::WeylIntegral: return "weyl";
    case OperatorKind::RiemannLiouvilleIntegral: return "riemann_liouville";
    case OperatorKind::RightDerivative: return "marchaud_right";
    case OperatorKind::LeftDerivative: return "marchaud_left";
    case OperatorKind::KAlpha: return "k_alpha";
    case OperatorKind::KAlphaH: return "k_alpha_h";
    case OperatorKind::HAlpha: return "h_alpha";
    case OperatorKind::KMinusAlpha: return "k_minus_alpha";
    case OperatorKind::HMinusAlpha: return "h_minus_alpha";
  }
  return "unknown";
}

OperatorKind operator_kind_from_string(const std::string& name) {
  for (OperatorKind k :
       {OperatorKind::WeylIntegral, OperatorKind::RiemannLiouvilleIntegral,
        OperatorKind::RightDerivative, OperatorKind::LeftDerivative,
        OperatorKind::KAlpha, OperatorKind::KAlphaH, OperatorKind::HAlpha,
        OperatorKind::KMinusAlpha, OperatorKind::HMinusAlpha})
    if (to_string(k) == name) return k;
  throw std::invalid_argument("unknown operator: " + name);
}

GridFunction weyl(const GridFunction& f, const Alpha& a) {
  require_decaying(f.tail(), a.alpha, "weyl");
  const QuadratureSpec spec = default_spec(f);
  std::vector<double> v(f.size());
  parallel_for(f.size(),
               [&](std::size_t i) { v[i] = weyl_node(f, a, f.node_x(i), spec); });
  return f.with_values(std::move(v), weyl_tail(f.tail(), a),
                       TailModel::zero(f.x0()));
}

GridFunction riemann_liouville(const GridFunction& f, const Alpha& a) {
  return reflect(weyl(reflect(f), a));
}

double weyl_at(const GridFunction& f, const Alpha& a, double x) {
  require_decaying(f.tail(), a.alpha, "weyl");
  return weyl_node(f, a, x, default_spec(f));
}

GridFunction marchaud_right_eps(const GridFunction& u, const Alpha& a,
                                double eps) {
  if (eps <= 0.0)
    throw std::invalid_argument("marchaud_right_eps: eps must be > 0");
  return marchaud_right_impl(u, a, eps, false);
}

GridFunction marchaud_right(const GridFunction& u, const Alpha& a) {
  return marchaud_right_impl(u, a, 0.0, true);
}

GridFunction marchaud_left_eps(const GridFunction& u, const Alpha& a,
                               double eps) {
  return reflect(marchaud_right_eps(reflect(u), a, eps));
}

GridFunction marchaud_left(const GridFunction& u, const Alpha& a) {
  return reflect(marchaud_right(reflect(u), a));
}

double marchaud_right_eps_at(const GridFunction& u, const Alpha& a, double eps,
                             double x) {
  if (eps <= 0.0)
    throw std::invalid_argument("marchaud_right_eps_at: eps must be > 0");
  return marchaud_trunc_node(u, a, eps, x);
}

double marchaud_right_at(const GridFunction& u, const Alpha& a, double x) {
  return marchaud_node(u, a, x);
}

GridFunction two_sided(OperatorKind kind, const GridFunction& f,
                       const Alpha& a) {
  const double half_sin = std::sin(0.5 * M_PI * a.alpha);
  switch (kind) {
    case OperatorKind::WeylIntegral:
      return weyl(f, a);
    case OperatorKind::RiemannLiouvilleIntegral:
      return riemann_liouville(f, a);
    case OperatorKind::RightDerivative:
      return marchaud_right(f, a);
    case OperatorKind::LeftDerivative:
      return marchaud_left(f, a);
    case OperatorKind::KAlpha:
    case OperatorKind::KAlphaH: {
      require_decaying(f.tail(), a.alpha, "two_sided");
      require_decaying(f.left_tail(), a.alpha, "two_sided");
      const double c = kind == OperatorKind::KAlpha
                           ? 1.0 / (2.0 * a.gamma_pos * half_sin)
                           : gamma_fn(1.0 - a.alpha) * half_sin / M_PI;
      const QuadratureSpec spec = default_spec(f);
      std::vector<double> v(f.size());
      parallel_for(f.size(), [&](std::size_t i) {
        v[i] = c * symmetric_integral_node(f, f.node_x(i), a.alpha, spec);
      });
      return with_power_tails(f, std::move(v), 1.0 - a.alpha);
    }
    case OperatorKind::HAlpha: {
      const GridFunction w = weyl(f, a);
      const GridFunction r = riemann_liouville(f, a);
      std::vector<double> v(f.size());
      const double c = 1.0 / (2.0 * half_sin);
      for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = c * (w.value(i) - r.value(i));
      return with_power_tails(f, std::move(v), 1.0 - a.alpha);
    }
    case OperatorKind::KMinusAlpha: {
      const double c = gamma_fn(1.0 + a.alpha) * half_sin / M_PI;
      const QuadratureSpec spec = default_spec(f);
      std::vector<double> v(f.size());
      parallel_for(f.size(), [&](std::size_t i) {
        v[i] = c * symmetric_difference_node(f, f.node_x(i), a.alpha, spec);
      });
      return with_power_tails(f, std::move(v), 1.0 + a.alpha);
    }
    case OperatorKind::HMinusAlpha: {
      const GridFunction dr = marchaud_right(f, a);
      const GridFunction dl = marchaud_left(f, a);
      std::vector<double> v(f.size());
      const double c = -1.0 / (2.0 * half_sin);
      for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = c * (dr.value(i) - dl.value(i));
      return with_power_tails(f, std::move(v), 1.0 + a.alpha);
    }
  }
  throw std::invalid_argument("two_sided: unknown operator kind");
}

MaxPrincipleReport max_principle_check(const GridFunction& phi, double x0,
                                       const Alpha& a) {
  MaxPrincipleReport rep;
  rep.value = marchaud_right_at(phi, a, x0);
  double right_sup = 0.0;
  for (std::size_t i = 0; i < phi.size(); ++i)
    if (phi.node_x(i) >= x0)
      right_sup = std::max(right_sup, std::fabs(phi.value(i)));
  if (phi.tail().kind != TailKind::Zero)
    right_sup = std::max(right_sup, std::fabs(phi.tail().coeff));
  if (right_sup < 1e-13)
    rep.verdict = MaxPrincipleReport::Verdict::ZeroAndFlat;
  else if (rep.value <= 1e-9)
    rep.verdict = MaxPrincipleReport::Verdict::NonPositive;
  else
    rep.verdict = MaxPrincipleReport::Verdict::Violated;
  return rep;
}

std::vector<double> grunwald_weights(double alpha, std::size_t n) {
  std::vector<double> g(n);
  if (n == 0) return g;
  g[0] = 1.0;
  for (std::size_t k = 1; k < n; ++k)
    g[k] = g[k - 1] * (static_cast<double>(k) - 1.0 - alpha) /
           static_cast<double>(k);
  return g;
}

GridFunction dirichlet_solve(const GridFunction& f, const GridFunction& g,
                             const Alpha& a) {
  const double h = f.h();
  if (std::fabs(g.h() - h) > 1e-14)
    throw std::invalid_argument("dirichlet_solve: mismatched spacings");
  if (std::fabs(g.x0() - (f.x_end() + h)) > 1e-9)
    throw std::invalid_argument(
        "dirichlet_solve: data must start one step past the interior");
  if (g.tail().kind == TailKind::Constant)
    throw std::invalid_argument(
        "dirichlet_solve: non-decaying exterior data is not supported");

  // Extent past which the data (grid values plus tail) is negligible.
  double x_cut = g.x_end();
  const TailModel& tail = g.tail();
  if (tail.kind == TailKind::ExpDecay && std::fabs(tail.coeff) > 1e-18)
    x_cut = tail.valid_from +
            std::log(std::fabs(tail.coeff) / 1e-18) / tail.rate;
  else if (tail.kind == TailKind::PowerDecay && std::fabs(tail.coeff) > 0.0)
    x_cut = std::max(
        x_cut, std::pow(std::fabs(tail.coeff) / 1e-14, 1.0 / tail.rate));

  const std::size_t n = f.size();
  const std::size_t k_max = std::min<std::size_t>(
      2000000, static_cast<std::size_t>(std::ceil((x_cut - f.x0()) / h)) + 2);
  const std::vector<double> w = grunwald_weights(a.alpha, k_max + 1);
  const double h_alpha = std::pow(h, a.alpha);

  std::vector<double> u(n);
  for (std::size_t ii = n; ii-- > 0;) {
    double acc = h_alpha * f.value(ii);
    for (std::size_t k = 1; k <= k_max; ++k) {
      const std::size_t j = ii + k;
      const double uj = j < n ? u[j] : g(f.x0() + h * static_cast<double>(j));
      if (uj != 0.0) acc -= w[k] * uj;
      if (f.x0() + h * static_cast<double>(j) > x_cut) break;
    }
    u[ii] = acc;  // w[0] = 1
  }
  // The continuation past the interior window is the supplied data, which a
  // tail model cannot hold; the output window therefore ends with zero tails.
  return f.with_values(std::move(u), TailModel::zero(f.x_end()),
                       TailModel::zero(f.x0()));
}

}  // namespace fracalc
