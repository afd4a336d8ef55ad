#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>

#include "fracalc/extension.hpp"
#include "fracalc/fracops.hpp"
#include "fracalc/grid.hpp"
#include "fracalc/special.hpp"

using namespace fracalc;

TEST_CASE("order one-half lift of the exponential") {
  const Alpha a(0.5);
  GridFunction f = make_one_sided_exp(1.0, 0.005, 40.0);
  for (double x : {0.0, 0.7, 2.0}) {
    for (double t : {0.1, 0.5, 1.5}) {
      CHECK(extension_value(f, a, x, t) ==
            doctest::Approx(std::exp(-x - t)).epsilon(1e-8));
    }
  }
  CHECK(extension_value(f, a, 0.5, 0.0) == doctest::Approx(f(0.5)));
  CHECK_THROWS(extension_value(f, a, 0.0, -1.0));
}

TEST_CASE("general order lift matches the macdonald profile") {
  // lift of exp(-x): exp(-x) 2^(1-a)/Gamma(a) t^a K_a(t)
  GridFunction f = make_one_sided_exp(1.0, 0.005, 40.0);
  for (double al : {0.25, 0.75}) {
    const Alpha a(al);
    for (double t : {0.4, 1.1}) {
      const double expect = std::exp(-1.0) * std::pow(2.0, 1.0 - al) /
                            a.gamma_pos * std::pow(t, al) *
                            macdonald_k(al, t);
      CHECK(extension_value(f, a, 1.0, t) ==
            doctest::Approx(expect).epsilon(1e-8));
    }
  }
}

TEST_CASE("field sampling matches pointwise evaluation") {
  const Alpha a(0.5);
  GridFunction f = make_one_sided_exp(1.0, 0.005, 40.0);
  ExtensionField field = extension_field(f, a, 0.0, 1.0, 5, 0.2, 1.0, 5);
  CHECK(field.nx == 5);
  CHECK(field.nt == 5);
  for (std::size_t i = 0; i < field.nx; ++i)
    for (std::size_t j = 0; j < field.nt; ++j)
      CHECK(field.at(i, j) ==
            doctest::Approx(std::exp(-field.x(i) - field.t(j)))
                .epsilon(1e-8));
}

TEST_CASE("zero boundary data lifts to the zero field") {
  const Alpha a(0.25);
  GridFunction z = make_constant(0.0, 0.0, 1.0, 0.01);
  CHECK(extension_value(z, a, 0.5, 0.8) == doctest::Approx(0.0));
}

TEST_CASE("lift solves the degenerate equation") {
  GridFunction f = make_gaussian(0.0, 1.0, 0.01, 14.0);
  for (double al : {0.25, 0.5, 0.75}) {
    const Alpha a(al);
    CHECK(std::fabs(pde_residual_at(f, a, 0.4, 0.6, 1e-3, 1e-3)) < 1e-3);
  }
  CHECK_THROWS(pde_residual_at(f, Alpha(0.5), 0.0, 1e-4, 1e-3, 1e-3));
}

TEST_CASE("weighted boundary flux recovers the right derivative") {
  GridFunction f = make_gaussian(0.0, 1.0, 0.01, 14.0);
  for (double al : {0.25, 0.5, 0.75}) {
    const Alpha a(al);
    for (double x : {-0.5, 0.8}) {
      CHECK(neumann_trace_at(f, a, x) ==
            doctest::Approx(marchaud_right_at(f, a, x)).epsilon(1e-3));
    }
  }
}

TEST_CASE("height multiplier oracle values") {
  // frozen value at order 1/2, t = 1, xi = 1: exp(-sqrt(-i))
  const std::complex<double> H = multiplier_h(0.5, 1.0, 1.0);
  CHECK(H.real() == doctest::Approx(0.37485280862038234).epsilon(1e-9));
  CHECK(H.imag() == doctest::Approx(0.32031563543421548).epsilon(1e-9));
  // closed form across a wide xi range
  for (double xi : {1e-4, 1e-2, 0.3, 2.0, 40.0, 500.0}) {
    const std::complex<double> got = multiplier_h(0.5, 1.0, xi);
    const std::complex<double> ref =
        std::exp(-std::sqrt(std::complex<double>(0.0, -xi)));
    CHECK(std::abs(got - ref) < 1e-10);
  }
  // conjugate symmetry and modulus bound
  for (double al : {0.25, 0.6}) {
    for (double xi : {0.5, 7.0}) {
      const std::complex<double> p = multiplier_h(al, 1.3, xi);
      const std::complex<double> m = multiplier_h(al, 1.3, -xi);
      CHECK(std::abs(p - std::conj(m)) < 1e-14);
      CHECK(std::abs(p) <= 1.0 + 1e-12);
    }
  }
  CHECK(std::abs(multiplier_h(0.33, 2.0, 0.0) - 1.0) < 1e-15);
}
