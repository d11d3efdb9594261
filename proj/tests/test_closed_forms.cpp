#include "cftv/closed_forms.hpp"
#include "cftv/quadrature.hpp"
#include "cftv/special.hpp"
#include "cftv/symmetric.hpp"

#include <doctest.h>

#include <cmath>

using namespace cftv;

namespace {

Rational rbeta(int a, int b) { return factorial(a - 1) * factorial(b - 1) / factorial(a + b - 1); }

// Classical Selberg product with gamma = 1.
Rational selberg_classic(int m, int p, int q) {
  Rational v(1);
  for (int j = 0; j < m; ++j)
    v *= factorial(p + j - 1) * factorial(q + j - 1) * factorial(j + 1) / factorial(p + q + m + j - 2);
  return v;
}

double schur2(const Partition& lambda, double x, double y) { return schur_eval(lambda, std::vector<double>{x, y}); }

}  // namespace

TEST_CASE("Selberg constants") {
  CHECK(selberg_constant_bosonic(3, 1, 1) == Rational(1, 2));
  CHECK(selberg_constant_bosonic(3, 2, 1) == Rational(1, 2));
  for (int N = 1; N <= 6; ++N) CHECK(selberg_constant_fermionic(N, 1, 1) == Rational(1, N + 1));
  CHECK(selberg_constant_fermionic(1, 2, 1) == Rational(1, 6));
  CHECK(selberg_constant_bosonic(4, 2, 2) == *schur_selberg_bosonic(Partition{}, 1, 1, 2).exact);
  for (int N = 2; N <= 8; ++N)
    for (int n = 1; n <= N; ++n)
      for (int m = 1; m <= n && n + m <= N; ++m) {
        const Rational c = selberg_constant_bosonic(N, n, m);
        CHECK(c == selberg_classic(m, n - m + 1, N - n - m + 1));
        CHECK(c == *schur_selberg_bosonic(Partition{}, n - m + 1, N - n - m + 1, m).exact);
        CHECK(selberg_constant_fermionic(N, n, m) == *schur_selberg_fermionic(Partition{}, n - m + 1, N + 1, m).exact);
      }
  CHECK_THROWS(selberg_constant_bosonic(3, 2, 2));
  CHECK_THROWS(selberg_constant_bosonic(5, 1, 2));
  CHECK_THROWS(selberg_constant_fermionic(3, 1, 2));
}

TEST_CASE("Schur-Selberg routes agree exactly") {
  for (int m = 1; m <= 3; ++m)
    for (int p = 1; p <= 5; ++p)
      for (int q = 1; q <= 5; ++q)
        for (const auto& lambda : enumerate_partitions(4, m)) {
          const auto b1 = schur_selberg_bosonic(lambda, p, q, m, Derivation::product_form);
          const auto b2 = schur_selberg_bosonic(lambda, p, q, m, Derivation::gram_determinant);
          const auto b3 = schur_selberg_bosonic(lambda, p, q, m, Derivation::reduced_gram);
          REQUIRE(b1.exact);
          CHECK(*b1.exact == *b2.exact);
          CHECK(*b1.exact == *b3.exact);
          CHECK(*b1.exact > 0);
          bool integrable = true;
          for (int f : shifted_parts(lambda, m)) integrable = integrable && q + m - f - 1 > 0;
          if (!integrable) {
            CHECK_THROWS_AS(schur_selberg_fermionic(lambda, p, q, m), std::domain_error);
            continue;
          }
          const auto f1 = schur_selberg_fermionic(lambda, p, q, m, Derivation::product_form);
          const auto f2 = schur_selberg_fermionic(lambda, p, q, m, Derivation::gram_determinant);
          const auto f3 = schur_selberg_fermionic(lambda, p, q, m, Derivation::reduced_gram);
          CHECK(*f1.exact == *f2.exact);
          CHECK(*f1.exact == *f3.exact);
        }
}

TEST_CASE("one-variable reductions to the beta function") {
  for (int k = 0; k <= 5; ++k)
    for (int p = 1; p <= 4; ++p)
      for (int q = 1; q <= 4; ++q) {
        CHECK(*schur_selberg_bosonic(Partition{k}, p, q, 1).exact == rbeta(p + k, q));
        if (q > k) CHECK(*schur_selberg_fermionic(Partition{k}, p, q, 1).exact == rbeta(p + k, q - k));
      }
  const double b = schur_selberg_bosonic(Partition{2}, 1.5, 2.5, 1).value;
  CHECK(b == doctest::Approx(std::exp(log_gamma(3.5) + log_gamma(2.5) - log_gamma(6.0))).epsilon(1e-12));
  CHECK_FALSE(schur_selberg_bosonic(Partition{2}, 1.5, 2.5, 1).exact.has_value());
}

TEST_CASE("two-variable values by direct integration") {
  CHECK(*schur_selberg_bosonic(Partition{1}, 1, 1, 2).exact == Rational(1, 6));
  for (const auto& lambda : {Partition{}, Partition{1}, Partition{2, 1}, Partition{3}}) {
    const double exact = schur_selberg_bosonic(lambda, 2, 3, 2).value;
    const auto quad = integrate_2d(
        [&](double x, double y) { return schur2(lambda, x, y) * x * y * (1 - x) * (1 - x) * (1 - y) * (1 - y) * (x - y) * (x - y); },
        {0.0, 1.0}, {0.0, 1.0}, 1e-13);
    CHECK(std::fabs(quad.value - exact) <= 1e-10);
  }
  // Fermionic, m = 2, lambda = (1), p = 1, q = 5: weight (1+x)^{-(p+q+2)}.
  const double f = schur_selberg_fermionic(Partition{1}, 1, 5, 2).value;
  const auto fq = integrate_2d(
      [](double x, double y) { return (x + y) * std::pow((1 + x) * (1 + y), -8.0) * (x - y) * (x - y); },
      {0.0, kInfinity}, {0.0, kInfinity}, 1e-10);
  CHECK(std::fabs(fq.value - f) <= 1e-6);
}

TEST_CASE("Schur-Selberg rejects bad input") {
  CHECK_THROWS(schur_selberg_bosonic(Partition{1, 1, 1}, 1, 1, 2));
  CHECK_THROWS(schur_selberg_bosonic(Partition{1}, 0, 1, 1));
  CHECK_THROWS(schur_selberg_bosonic(Partition{1}, 1, -2, 1));
  CHECK_THROWS_AS(schur_selberg_fermionic(Partition{3}, 1, 2, 1), std::domain_error);
}

TEST_CASE("moment right-hand sides") {
  for (int N = 1; N <= 6; ++N)
    for (int n = 1; n <= N; ++n)
      for (int m = 1; m <= N; ++m) CHECK(rhs_schur_moment_bosonic(Partition{1}, N, n, m) == Rational(m * n, N));
  CHECK(rhs_schur_moment_bosonic(Partition{2, 1}, 5, 3, 2) == Rational(2, 5));
  CHECK(rhs_schur_moment_bosonic(Partition{1, 1, 1}, 5, 3, 2) == 0);
  CHECK(rhs_schur_moment_fermionic(Partition{2}, 2, 1, 1) == 1);
  CHECK(rhs_schur_moment_fermionic(Partition{1, 1}, 1, 2, 2) == 1);
  CHECK(rhs_schur_moment_fermionic(Partition{1}, 4, 2, 3) == Rational(6, 4));
  CHECK_THROWS(rhs_schur_moment_fermionic(Partition{3}, 2, 1, 1));
  CHECK_THROWS(rhs_schur_moment_bosonic(Partition{1}, 2, 3, 1));
}

TEST_CASE("moments as ratios of Schur-Selberg integrals") {
  for (int N = 2; N <= 7; ++N)
    for (int n = 1; n <= N; ++n)
      for (int m = 1; m <= n && n + m <= N; ++m)
        for (const auto& lambda : enumerate_partitions(3, m)) {
          const int p = n - m + 1;
          const Rational ratio = *schur_selberg_bosonic(lambda, p, N - n - m + 1, m).exact /
                                 *schur_selberg_bosonic(Partition{}, p, N - n - m + 1, m).exact;
          CHECK(ratio == rhs_schur_moment_bosonic(lambda, N, n, m));
          if (2 * lambda[1] <= N) {
            const Rational fr = *schur_selberg_fermionic(lambda, p, N + 1, m).exact /
                                *schur_selberg_fermionic(Partition{}, p, N + 1, m).exact;
            CHECK(fr == rhs_schur_moment_fermionic(lambda, N, n, m));
          }
        }
}

TEST_CASE("Bessel determinant formula") {
  CHECK(bessel_determinant_formula(4, 2, {0.0, 0.0}) == 1.0);
  CHECK(bessel_determinant_formula(3, 1, {0.0}) == 1.0);
  // m = 1: E J0(2 d |u|) with |u|^2 ~ Beta(1, N-1), as a power series in d.
  for (int N : {2, 3, 5})
    for (double d : {0.2, 1.0, 2.0}) {
      double series = 0.0, term = 1.0;
      for (int k = 0; k < 80; ++k) {
        series += term;
        term *= -d * d / ((k + 1.0) * (N + k));
      }
      CHECK(std::fabs(bessel_determinant_formula(N, 1, {d}) - series) <= 1e-10);
    }
  // Continuous as two singular values approach each other and zero.
  const double near = bessel_determinant_formula(4, 2, {1e-3, 2e-3});
  CHECK(std::fabs(near - 1.0) <= 1e-4);
  CHECK_THROWS(bessel_determinant_formula(3, 2, {0.1, 0.2}));
  CHECK_THROWS(bessel_determinant_formula(4, 2, {0.3, 0.3}));
  CHECK_THROWS(bessel_determinant_formula(4, 2, {0.3}));
}

TEST_CASE("fermionic tilt normaliser") {
  CHECK(fermionic_tilt_normaliser(5, 2, 1, 0) == 1);
  // n = m = 1: masses of (1-y)^b on [0,1] are 1/(b+1).
  for (int N = 1; N <= 5; ++N)
    for (int t = 0; t <= N; ++t) CHECK(fermionic_tilt_normaliser(N, 1, 1, t) == Rational(N + 1, N - t + 1));
  // Reweighted expectation of 1 is 1: E_tilted[prod (1-y)^t] * normaliser = 1, checked by quadrature at m = 1, n = 2.
  const int N = 3, t = 2;
  auto density = [](double y, int b) { return y * std::pow(1.0 - y, b); };
  const double tilted_mass = integrate([&](double y) { return density(y, N - t); }, {0.0, 1.0}).value;
  const double plain_mass = integrate([&](double y) { return density(y, N); }, {0.0, 1.0}).value;
  CHECK(to_double(fermionic_tilt_normaliser(N, 2, 1, t)) == doctest::Approx(tilted_mass / plain_mass).epsilon(1e-12));
  CHECK_THROWS(fermionic_tilt_normaliser(3, 1, 1, 4));
  CHECK_THROWS(fermionic_tilt_normaliser(3, 1, 2, 0));
}
