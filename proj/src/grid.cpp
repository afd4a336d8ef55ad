#include "fracalc/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fracalc/quadrature.hpp"

namespace fracalc {

TailModel TailModel::zero(double from) {
  TailModel t;
  t.kind = TailKind::Zero;
  t.valid_from = from;
  return t;
}

TailModel TailModel::constant(double value, double from) {
  TailModel t;
  t.kind = TailKind::Constant;
  t.coeff = value;
  t.valid_from = from;
  return t;
}

TailModel TailModel::exp_decay(double lambda, double edge_value, double from) {
  if (lambda <= 0.0) throw std::invalid_argument("TailModel: rate must be > 0");
  TailModel t;
  t.kind = TailKind::ExpDecay;
  t.rate = lambda;
  t.coeff = edge_value;
  t.valid_from = from;
  return t;
}

TailModel TailModel::power_decay(double beta, double edge_value, double from) {
  if (beta <= 0.0) throw std::invalid_argument("TailModel: exponent must be > 0");
  if (std::fabs(from) < 1e-12)
    throw std::invalid_argument("TailModel: power tail needs |valid_from| > 0");
  TailModel t;
  t.kind = TailKind::PowerDecay;
  t.rate = beta;
  t.coeff = edge_value * std::pow(std::fabs(from), beta);
  t.valid_from = from;
  return t;
}

double TailModel::eval_right(double x) const {
  switch (kind) {
    case TailKind::Zero:
      return 0.0;
    case TailKind::Constant:
      return coeff;
    case TailKind::ExpDecay:
      return coeff * std::exp(-rate * (x - valid_from));
    case TailKind::PowerDecay:
      return coeff * std::pow(std::fabs(x), -rate);
  }
  return 0.0;
}

double TailModel::eval_left(double x) const {
  switch (kind) {
    case TailKind::Zero:
      return 0.0;
    case TailKind::Constant:
      return coeff;
    case TailKind::ExpDecay:
      return coeff * std::exp(-rate * (valid_from - x));
    case TailKind::PowerDecay:
      return coeff * std::pow(std::fabs(x), -rate);
  }
  return 0.0;
}

TailModel TailModel::scaled(double s) const {
  TailModel t = *this;
  t.coeff *= s;
  return t;
}

GridFunction::GridFunction(double x0, double h, std::vector<double> values,
                           TailModel right_tail, TailModel left_tail)
    : x0_(x0), h_(h), values_(std::move(values)), tail_(right_tail),
      left_tail_(left_tail) {
  if (h_ <= 0.0) throw std::invalid_argument("GridFunction: spacing must be > 0");
  if (values_.size() < 8)
    throw std::invalid_argument("GridFunction: need at least 8 samples");
  for (double v : values_)
    if (!std::isfinite(v))
      throw std::invalid_argument("GridFunction: non-finite sample");
}

GridFunction::GridFunction(double x0, double h, std::vector<double> values,
                           TailModel right_tail)
    : GridFunction(x0, h, std::move(values), right_tail, TailModel::zero(x0)) {}

double GridFunction::operator()(double x) const {
  const double xe = x_end();
  if (x > xe) return tail_.eval_right(x);
  if (x < x0_) return left_tail_.eval_left(x);
  const double u = (x - x0_) / h_;
  long j = static_cast<long>(std::floor(u));
  long base = std::clamp<long>(j - 1, 0, static_cast<long>(values_.size()) - 4);
  const double s = u - base;  // in node units relative to the stencil start
  // cubic Lagrange through nodes base..base+3
  const double d0 = s, d1 = s - 1.0, d2 = s - 2.0, d3 = s - 3.0;
  const double w0 = -d1 * d2 * d3 / 6.0;
  const double w1 = d0 * d2 * d3 / 2.0;
  const double w2 = -d0 * d1 * d3 / 2.0;
  const double w3 = d0 * d1 * d2 / 6.0;
  return w0 * values_[base] + w1 * values_[base + 1] + w2 * values_[base + 2] +
         w3 * values_[base + 3];
}

double GridFunction::derivative(double x) const {
  const double xe = x_end();
  if (x > xe || x < x0_) {
    const TailModel& t = x > xe ? tail_ : left_tail_;
    const double v = x > xe ? t.eval_right(x) : t.eval_left(x);
    switch (t.kind) {
      case TailKind::Zero:
      case TailKind::Constant:
        return 0.0;
      case TailKind::ExpDecay:
        return x > xe ? -t.rate * v : t.rate * v;
      case TailKind::PowerDecay:
        return -t.rate * v / x;
    }
    return 0.0;
  }
  const double u = (x - x0_) / h_;
  long j = static_cast<long>(std::floor(u));
  long base = std::clamp<long>(j - 1, 0, static_cast<long>(values_.size()) - 4);
  const double s = u - base;
  const double d0 = s, d1 = s - 1.0, d2 = s - 2.0, d3 = s - 3.0;
  const double w0 = -(d1 * d2 + d1 * d3 + d2 * d3) / 6.0;
  const double w1 = (d0 * d2 + d0 * d3 + d2 * d3) / 2.0;
  const double w2 = -(d0 * d1 + d0 * d3 + d1 * d3) / 2.0;
  const double w3 = (d0 * d1 + d0 * d2) / 6.0 + d1 * d2 / 6.0;
  return (w0 * values_[base] + w1 * values_[base + 1] + w2 * values_[base + 2] +
          w3 * values_[base + 3]) /
         h_;
}

GridFunction GridFunction::with_values(std::vector<double> v, TailModel right,
                                       TailModel left) const {
  return GridFunction(x0_, h_, std::move(v), right, left);
}

QuadratureSpec default_spec(const GridFunction& f) {
  QuadratureSpec s;
  s.eps = f.h() / 4.0;
  return s;
}

double integrate_right_tail(const GridFunction& f, double x,
                            const std::function<double(double)>& kernel,
                            const QuadratureSpec& spec, double t_lo,
                            bool* accuracy_warning) {
  if (spec.eps <= 0.0)
    throw std::invalid_argument("integrate_right_tail: eps must be > 0");
  auto g = [&](double t) { return f(x + t) * kernel(t); };
  bool warn = false;
  double total = 0.0;
  const double pivot = std::max(spec.eps, t_lo);
  if (t_lo < pivot)
    total += integrate_geometric_down(
        [&](double t) { return t >= t_lo ? g(t) : 0.0; }, pivot,
        spec.tail_cut * 1e-3, spec.nodes_per_panel, 900, &warn);
  total += integrate_geometric_up(g, pivot, spec.tail_cut,
                                  spec.nodes_per_panel, 2000, &warn,
                                  std::max(0.0, f.x_end() - x),
                                  spec.width_cap);
  if (accuracy_warning) *accuracy_warning = warn;
  return total;
}

GridFunction make_gaussian(double center, double width, double h,
                           double n_sigmas) {
  if (width <= 0.0) throw std::invalid_argument("make_gaussian: width must be > 0");
  const double a = center - n_sigmas * width, b = center + n_sigmas * width;
  const std::size_t n = static_cast<std::size_t>(std::ceil((b - a) / h)) + 1;
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = a + h * i;
    v[i] = std::exp(-0.5 * (x - center) * (x - center) / (width * width));
  }
  const double xe = a + h * (n - 1);
  return GridFunction(a, h, std::move(v), TailModel::zero(xe),
                      TailModel::zero(a));
}

GridFunction make_one_sided_exp(double lambda, double h, double x_max) {
  if (lambda <= 0.0)
    throw std::invalid_argument("make_one_sided_exp: rate must be > 0");
  const std::size_t n = static_cast<std::size_t>(std::ceil(x_max / h)) + 1;
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = std::exp(-lambda * h * i);
  const double xe = h * (n - 1);
  TailModel right = TailModel::exp_decay(lambda, v.back(), xe);
  return GridFunction(0.0, h, std::move(v), right, TailModel::zero(0.0));
}

GridFunction make_bump(double center, double width, double h) {
  if (width <= 0.0) throw std::invalid_argument("make_bump: width must be > 0");
  const double a = center - 2.0 * width, b = center + 2.0 * width;
  const std::size_t n = static_cast<std::size_t>(std::ceil((b - a) / h)) + 1;
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = (a + h * i - center) / width;
    v[i] = std::fabs(u) < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - u * u)) : 0.0;
  }
  const double xe = a + h * (n - 1);
  return GridFunction(a, h, std::move(v), TailModel::zero(xe),
                      TailModel::zero(a));
}

GridFunction make_shifted_square_decay(double x0c, double h, double halfwidth) {
  const double a = x0c - halfwidth, b = x0c + halfwidth;
  const std::size_t n = static_cast<std::size_t>(std::ceil((b - a) / h)) + 1;
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a + h * i - x0c;
    v[i] = 1.0 / (1.0 + d * d);
  }
  const double xe = a + h * (n - 1);
  TailModel right = TailModel::power_decay(2.0, v.back(), xe);
  TailModel left = TailModel::power_decay(2.0, v.front(), a);
  return GridFunction(a, h, std::move(v), right, left);
}

GridFunction make_exp_on(double lambda, double a, double b, double h) {
  if (lambda <= 0.0) throw std::invalid_argument("make_exp_on: rate must be > 0");
  const std::size_t n = static_cast<std::size_t>(std::ceil((b - a) / h)) + 1;
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = std::exp(-lambda * (a + h * i));
  const double xe = a + h * (n - 1);
  TailModel right = TailModel::exp_decay(lambda, v.back(), xe);
  return GridFunction(a, h, std::move(v), right, TailModel::zero(a));
}

GridFunction make_constant(double c, double a, double b, double h) {
  const std::size_t n = static_cast<std::size_t>(std::ceil((b - a) / h)) + 1;
  std::vector<double> v(n, c);
  const double xe = a + h * (n - 1);
  return GridFunction(a, h, std::move(v), TailModel::constant(c, xe),
                      TailModel::constant(c, a));
}

GridFunction reflect(const GridFunction& f) {
  std::vector<double> v(f.values().rbegin(), f.values().rend());
  const double new_x0 = -f.x_end();
  TailModel right = f.left_tail();
  TailModel left = f.tail();
  right.valid_from = -right.valid_from;
  left.valid_from = -left.valid_from;
  return GridFunction(new_x0, f.h(), std::move(v), right, left);
}

GridFunction lin_comb(double a, const GridFunction& f, double b,
                      const GridFunction& g) {
  if (f.size() != g.size() || std::fabs(f.x0() - g.x0()) > 1e-12 ||
      std::fabs(f.h() - g.h()) > 1e-15)
    throw std::invalid_argument("lin_comb: incompatible grids");
  std::vector<double> v(f.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    v[i] = a * f.value(i) + b * g.value(i);
  TailModel right = TailModel::zero(f.x_end());
  TailModel left = TailModel::zero(f.x0());
  if (f.tail().kind == TailKind::Zero && g.tail().kind == TailKind::Zero)
    right = TailModel::zero(f.x_end());
  else if (f.tail().kind == TailKind::ExpDecay &&
           g.tail().kind == TailKind::Zero)
    right = f.tail().scaled(a);
  else if (f.tail().kind == TailKind::Zero &&
           g.tail().kind == TailKind::ExpDecay)
    right = g.tail().scaled(b);
  else if (f.tail().kind == TailKind::ExpDecay &&
           g.tail().kind == TailKind::ExpDecay &&
           std::fabs(f.tail().rate - g.tail().rate) < 1e-12) {
    right = f.tail().scaled(a);
    right.coeff += b * g.tail().eval_right(right.valid_from);
  }
  return GridFunction(f.x0(), f.h(), std::move(v), right, left);
}

double inner_product(const GridFunction& f, const GridFunction& g) {
  if (f.size() != g.size() || std::fabs(f.x0() - g.x0()) > 1e-12)
    throw std::invalid_argument("inner_product: incompatible grids");
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f.value(i) * g.value(i);
  return s * f.h();
}

double sup_norm(const GridFunction& f) {
  double m = 0.0;
  for (double v : f.values()) m = std::max(m, std::fabs(v));
  return m;
}

}  // namespace fracalc
