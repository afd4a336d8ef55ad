#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "fracalc/fracops.hpp"
#include "fracalc/grid.hpp"

using namespace fracalc;

TEST_CASE("eigen-relations of the order-alpha integral and derivative") {
  // exp(-l x) is an eigenfunction: integral scales by l^-a, derivative by l^a
  const Alpha a(0.5);
  GridFunction f = make_one_sided_exp(2.0, 0.005, 40.0);
  CHECK(weyl_at(f, a, 0.5) ==
        doctest::Approx(std::pow(2.0, -0.5) * std::exp(-1.0)).epsilon(1e-8));
  CHECK(weyl_at(f, a, 3.0) ==
        doctest::Approx(std::pow(2.0, -0.5) * std::exp(-6.0)).epsilon(1e-8));
  CHECK(marchaud_right_at(f, a, 0.5) ==
        doctest::Approx(std::pow(2.0, 0.5) * std::exp(-1.0)).epsilon(1e-6));
  CHECK(marchaud_right_at(f, a, 3.0) ==
        doctest::Approx(std::pow(2.0, 0.5) * std::exp(-6.0)).epsilon(1e-6));
}

TEST_CASE("power-decay inputs use the closed-form tail weights") {
  // f(x) = |x|^-b for x beyond the window; the order-a integral of x^-b is
  // Gamma(b-a)/Gamma(b) x^(a-b) in the far field.
  const Alpha a(0.25);
  GridFunction f = make_shifted_square_decay(5.0, 0.01, 30.0);
  const double x = 0.0;
  const double v = weyl_at(f, a, x);
  CHECK(std::isfinite(v));
  CHECK(v > 0.0);
}

TEST_CASE("integral kinds reject non-integrable tails") {
  const Alpha a(0.5);
  GridFunction c = make_constant(1.0, 0.0, 1.0, 0.01);
  CHECK_THROWS(weyl(c, a));
  // the derivative of a constant is fine and equals zero
  GridFunction d = marchaud_right(c, a);
  CHECK(sup_norm(d) < 1e-10);
}

TEST_CASE("linearity of the right derivative") {
  const Alpha a(0.75);
  GridFunction f = make_gaussian(0.0, 1.0, 0.02, 12.0);
  GridFunction g = make_gaussian(0.5, 1.5, 0.02, 8.0);
  const double x = 0.3;
  std::vector<double> fv(f.size()), gv(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    fv[i] = f.value(i);
    gv[i] = g(f.node_x(i));
  }
  GridFunction G(f.x0(), f.h(), std::move(gv), TailModel::zero(f.x_end()),
                 TailModel::zero(f.x0()));
  GridFunction S = lin_comb(2.0, f, -3.0, G);
  const double lhs = marchaud_right_at(S, a, x);
  const double rhs = 2.0 * marchaud_right_at(f, a, x) -
                     3.0 * marchaud_right_at(G, a, x);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-9));
}

TEST_CASE("truncated derivatives converge as eps shrinks") {
  const Alpha a(0.5);
  GridFunction f = make_gaussian(0.0, 1.0, 0.01, 12.0);
  const double x = -0.4;
  const double full = marchaud_right_at(f, a, x);
  double prev_gap = 1e300;
  for (double eps : {1e-1, 1e-2, 1e-3}) {
    const double gap = std::fabs(marchaud_right_eps_at(f, a, eps, x) - full);
    CHECK(gap < prev_gap);
    prev_gap = gap;
  }
  CHECK(prev_gap < 1e-2);
}

TEST_CASE("left derivative mirrors the right one") {
  const Alpha a(0.5);
  GridFunction f = make_gaussian(0.0, 1.0, 0.02, 12.0);
  GridFunction r = reflect(f);
  CHECK(marchaud_left(f, a)(0.7) ==
        doctest::Approx(marchaud_right(r, a)(-0.7)).epsilon(1e-9));
}

TEST_CASE("operator names round trip") {
  for (OperatorKind k :
       {OperatorKind::WeylIntegral, OperatorKind::RiemannLiouvilleIntegral,
        OperatorKind::RightDerivative, OperatorKind::LeftDerivative,
        OperatorKind::KAlpha, OperatorKind::KAlphaH, OperatorKind::HAlpha,
        OperatorKind::KMinusAlpha, OperatorKind::HMinusAlpha})
    CHECK(operator_kind_from_string(to_string(k)) == k);
  CHECK_THROWS(operator_kind_from_string("no_such_operator"));
}

TEST_CASE("sign at a vanishing minimum") {
  // phi >= 0 to the right of x0 with phi(x0) = 0 forces a nonpositive
  // right derivative at x0.
  const Alpha a(0.5);
  GridFunction bump = make_bump(3.0, 1.0, 0.005);
  MaxPrincipleReport rep = max_principle_check(bump, 1.0, a);
  CHECK(rep.verdict != MaxPrincipleReport::Verdict::Violated);
  CHECK(rep.value <= 1e-9);
  // identically zero to the right: flat verdict
  GridFunction left_bump = make_bump(-3.0, 1.0, 0.005);
  MaxPrincipleReport flat = max_principle_check(left_bump, 1.0, a);
  CHECK(flat.verdict == MaxPrincipleReport::Verdict::ZeroAndFlat);
}

TEST_CASE("grunwald weights") {
  const double al = 0.5;
  std::vector<double> w = grunwald_weights(al, 6);
  REQUIRE(w.size() == 6);
  CHECK(w[0] == 1.0);
  CHECK(w[1] == doctest::Approx(-al).epsilon(1e-14));
  CHECK(w[2] == doctest::Approx(0.5 * al * (al - 1.0) * -1.0 * -1.0)
                    .epsilon(1e-14));  // binomial with alternating sign
  // all weights after the first are negative and sum toward -1
  double tail_sum = 0.0;
  std::vector<double> w_long = grunwald_weights(al, 4000);
  for (std::size_t k = 1; k < w_long.size(); ++k) {
    CHECK(w_long[k] < 0.0);
    tail_sum += w_long[k];
  }
  CHECK(tail_sum == doctest::Approx(-1.0).epsilon(1e-1));
}

TEST_CASE("dirichlet solve recovers the exponential eigenfunction") {
  const Alpha a(0.5);
  const double h = 0.01;
  const std::size_t n_in = 200;
  std::vector<double> fv(n_in);
  for (std::size_t i = 0; i < n_in; ++i) fv[i] = std::exp(-h * double(i));
  GridFunction f(0.0, h, std::move(fv), TailModel::zero(h * double(n_in - 1)));
  GridFunction g = make_exp_on(1.0, h * double(n_in), 12.0, h);
  GridFunction u = dirichlet_solve(f, g, a);
  double worst = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i)
    worst = std::max(worst, std::fabs(u.value(i) - std::exp(-u.node_x(i))));
  CHECK(worst < 5e-3);  // first-order scheme at h = 0.01
}
