#pragma once

#include <functional>
#include <string>
#include <vector>

namespace fracalc {

enum class TailKind { Zero, Constant, ExpDecay, PowerDecay };

/// Decay model for the part of a function that lives beyond the sampled
/// window. ExpDecay: v(x) = coeff * exp(-rate * |x - valid_from|).
/// PowerDecay: v(x) = coeff * |x|^(-rate), anchored at the origin, which
/// requires |valid_from| > 0. Coefficients are matched to the last grid
/// value at construction so the model is continuous.
struct TailModel {
  TailKind kind = TailKind::Zero;
  double rate = 0.0;
  double coeff = 0.0;
  double valid_from = 0.0;

  static TailModel zero(double from);
  static TailModel constant(double value, double from);
  static TailModel exp_decay(double lambda, double edge_value, double from);
  static TailModel power_decay(double beta, double edge_value, double from);

  double eval_right(double x) const;  // x >= valid_from
  double eval_left(double x) const;   // x <= valid_from

  TailModel scaled(double s) const;
};

/// Uniformly sampled real function with tail models on both sides.
/// Evaluation between samples uses 4-point (cubic) Lagrange interpolation.
class GridFunction {
 public:
  GridFunction(double x0, double h, std::vector<double> values,
               TailModel right_tail, TailModel left_tail);
  GridFunction(double x0, double h, std::vector<double> values,
               TailModel right_tail);

  double x0() const { return x0_; }
  double h() const { return h_; }
  double x_end() const { return x0_ + h_ * (values_.size() - 1); }
  std::size_t size() const { return values_.size(); }
  double node_x(std::size_t i) const { return x0_ + h_ * i; }
  double value(std::size_t i) const { return values_[i]; }
  const std::vector<double>& values() const { return values_; }
  const TailModel& tail() const { return tail_; }
  const TailModel& left_tail() const { return left_tail_; }

  double operator()(double x) const;

  /// Derivative of the interpolant (or of the tail model beyond the window).
  double derivative(double x) const;

  /// Same grid, transformed values (tails must be supplied by the caller).
  GridFunction with_values(std::vector<double> v, TailModel right,
                           TailModel left) const;

 private:
  double x0_;
  double h_;
  std::vector<double> values_;
  TailModel tail_;
  TailModel left_tail_;
};

/// Truncation / grading parameters for the singular-integral engine.
struct QuadratureSpec {
  double eps;
  int graded_levels = 40;
  int nodes_per_panel = 8;
  double tail_cut = 1e-10;
  double width_cap = 0.5;  // max panel width inside the sampled window
};

QuadratureSpec default_spec(const GridFunction& f);

/// int_0^inf f(x+t) k(t) dt on geometrically graded panels around
/// spec.eps, plus the tail resolved through the function's tail model.
/// Set t_lo > 0 to integrate over [t_lo, inf) instead (truncated form).
double integrate_right_tail(const GridFunction& f, double x,
                            const std::function<double(double)>& kernel,
                            const QuadratureSpec& spec, double t_lo = 0.0,
                            bool* accuracy_warning = nullptr);

// Test-function library (peak-normalized).
GridFunction make_gaussian(double center, double width, double h = 0.01,
                           double n_sigmas = 12.0);
GridFunction make_one_sided_exp(double lambda, double h = 0.005,
                                double x_max = 40.0);
GridFunction make_bump(double center, double width, double h = 0.01);
GridFunction make_shifted_square_decay(double x0, double h = 0.01,
                                       double halfwidth = 30.0);
/// exp(-lambda x) sampled on [a,b] with the exact exponential right tail.
GridFunction make_exp_on(double lambda, double a, double b, double h);
/// Constant value c on [a,b] with constant tails on both sides.
GridFunction make_constant(double c, double a, double b, double h);

/// Mirror x -> -x; swaps the two tails.
GridFunction reflect(const GridFunction& f);

GridFunction lin_comb(double a, const GridFunction& f, double b,
                      const GridFunction& g);

/// Riemann inner product h * sum f_i g_i over the common grid.
double inner_product(const GridFunction& f, const GridFunction& g);

double sup_norm(const GridFunction& f);

}  // namespace fracalc
