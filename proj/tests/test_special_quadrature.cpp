#include "cftv/quadrature.hpp"
#include "cftv/special.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using namespace cftv;

TEST_CASE("J0, Y0 and I0 against the standard library") {
  for (double x = 0.05; x <= 50.0; x += 0.05) {
    CAPTURE(x);
    CHECK(std::fabs(bessel_j0(x) - std::cyl_bessel_j(0.0, x)) <= 1e-12);
    CHECK(std::fabs(bessel_y0(x) - std::cyl_neumann(0.0, x)) <= 1e-12);
    CHECK(std::fabs(bessel_j0(-x) - bessel_j0(x)) == 0.0);
  }
  CHECK(bessel_j0(0.0) == 1.0);
  for (double x = 0.0; x <= 30.0; x += 0.25) {
    const double ref = std::cyl_bessel_i(0.0, x);
    CHECK(std::fabs(bessel_i0(x) - ref) <= 1e-13 * ref);
  }
  CHECK_THROWS(bessel_y0(0.0));
  CHECK_THROWS(bessel_y0(-1.0));
}

TEST_CASE("J0 zeros and log-gamma") {
  CHECK(std::fabs(bessel_j0(2.404825557695773)) <= 1e-13);
  CHECK(std::fabs(bessel_y0(0.8935769662791675)) <= 1e-13);
  CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-14));
  CHECK(log_gamma(0.5) == doctest::Approx(0.5 * std::log(M_PI)).epsilon(1e-14));
  CHECK(log_gamma(-0.5) == doctest::Approx(std::log(2.0 * std::sqrt(M_PI))).epsilon(1e-14));
  CHECK_THROWS(log_gamma(0.0));
  CHECK_THROWS(log_gamma(-3.0));
  CHECK(special(SpecialKind::J0, 1.5) == bessel_j0(1.5));
  CHECK(special(SpecialKind::Y0, 1.5) == bessel_y0(1.5));
  CHECK(special(SpecialKind::LogGamma, 7.0) == log_gamma(7.0));
}

TEST_CASE("finite and infinite intervals") {
  const auto poly = integrate([](double x) { return x * x; }, {0.0, 3.0});
  CHECK(poly.value == doctest::Approx(9.0).epsilon(1e-13));
  const auto tail = integrate([](double x) { return std::pow(1.0 + x, -4.0); }, {0.0, kInfinity});
  CHECK(std::fabs(tail.value - 1.0 / 3.0) <= 1e-10);
  const auto gauss = integrate([](double x) { return std::exp(-x * x); }, {0.0, kInfinity});
  CHECK(std::fabs(gauss.value - 0.5 * std::sqrt(M_PI)) <= 1e-10);
  CHECK(poly.error >= 0.0);
  CHECK_THROWS(integrate([](double x) { return x; }, {0.0, 1.0}, 0.0));
}

TEST_CASE("Bessel moment against its power series") {
  // int_0^1 J0(2 d q) 2q dq = sum_k (-d^2)^k / (k! (k+1)!).
  for (double d : {0.3, 1.0, 2.5}) {
    double series = 0.0, term = 1.0;
    for (int k = 0; k < 60; ++k) {
      series += term;
      term *= -d * d / ((k + 1.0) * (k + 2.0));
    }
    const auto q = integrate([d](double x) { return bessel_j0(2.0 * d * x) * 2.0 * x; }, {0.0, 1.0}, 1e-13);
    CHECK(std::fabs(q.value - series) <= 1e-11);
  }
}

TEST_CASE("oscillatory integrand converges under a doubled budget") {
  auto f = [](double x) { return std::cos(40.0 * x) * std::exp(-x); };
  const double exact = (1.0 - std::exp(-2.0) * (std::cos(80.0) - 40.0 * std::sin(80.0))) / (1.0 + 1600.0);
  const auto a = integrate(f, {0.0, 2.0}, 1e-10, 12);
  const auto b = integrate(f, {0.0, 2.0}, 1e-10, 24);
  CHECK(std::fabs(a.value - b.value) <= 2e-10);
  CHECK(std::fabs(b.value - exact) <= 1e-10);
}

TEST_CASE("budget exhaustion is reported") {
  auto wild = [](double x) { return std::sin(1.0 / x) / x; };
  CHECK_THROWS_AS(integrate(wild, {1e-6, 1.0}, 1e-14, 3), std::runtime_error);
}

TEST_CASE("two-dimensional integration") {
  // int int (x+y)(x-y)^2 over the unit square = 1/6.
  const auto v = integrate_2d([](double x, double y) { return (x + y) * (x - y) * (x - y); }, {0.0, 1.0}, {0.0, 1.0});
  CHECK(std::fabs(v.value - 1.0 / 6.0) <= 1e-10);
  const auto w = integrate_2d([](double x, double y) { return std::exp(-x - 2.0 * y); }, {0.0, kInfinity},
                              {0.0, kInfinity});
  CHECK(std::fabs(w.value - 0.5) <= 1e-8);
}
