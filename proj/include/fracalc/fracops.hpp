#pragma once

#include <string>
#include <vector>

#include "fracalc/grid.hpp"
#include "fracalc/special.hpp"

namespace fracalc {

enum class OperatorKind {
  WeylIntegral,
  RiemannLiouvilleIntegral,
  RightDerivative,
  LeftDerivative,
  KAlpha,
  KAlphaH,
  HAlpha,
  KMinusAlpha,
  HMinusAlpha,
};

std::string to_string(OperatorKind k);
OperatorKind operator_kind_from_string(const std::string& name);

// Fractional integrals.
GridFunction weyl(const GridFunction& f, const Alpha& a);
GridFunction riemann_liouville(const GridFunction& f, const Alpha& a);
double weyl_at(const GridFunction& f, const Alpha& a, double x);

// Marchaud-type derivatives (order-alpha powers of the lateral derivative).
GridFunction marchaud_right_eps(const GridFunction& u, const Alpha& a,
                                double eps);
GridFunction marchaud_right(const GridFunction& u, const Alpha& a);
GridFunction marchaud_left_eps(const GridFunction& u, const Alpha& a,
                               double eps);
GridFunction marchaud_left(const GridFunction& u, const Alpha& a);
double marchaud_right_eps_at(const GridFunction& u, const Alpha& a, double eps,
                             double x);
double marchaud_right_at(const GridFunction& u, const Alpha& a, double x);

/// Two-sided catalog operators assembled from the one-sided primitives or by
/// principal-value quadrature, with their exact normalizing constants.
GridFunction two_sided(OperatorKind kind, const GridFunction& f,
                       const Alpha& a);

struct MaxPrincipleReport {
  enum class Verdict { NonPositive, ZeroAndFlat, Violated };
  double value = 0.0;
  Verdict verdict = Verdict::Violated;
};

/// Evaluates the right derivative of order alpha at a point x0 where
/// phi vanishes and phi >= 0 to the right of x0.
MaxPrincipleReport max_principle_check(const GridFunction& phi, double x0,
                                       const Alpha& a);

/// Grunwald-Letnikov weights (-1)^k C(alpha,k), k = 0..n-1.
std::vector<double> grunwald_weights(double alpha, std::size_t n);

/// Solves the one-sided Dirichlet problem on [a,b) with data prescribed on
/// [b, inf) through g (including its tail model). f and g must share the
/// spacing h and be aligned; the Grunwald system is upper triangular and is
/// solved by back substitution from the right.
GridFunction dirichlet_solve(const GridFunction& f, const GridFunction& g,
                             const Alpha& a);

}  // namespace fracalc
