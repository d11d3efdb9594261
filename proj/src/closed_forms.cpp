#include "cftv/closed_forms.hpp"

#include "cftv/linalg.hpp"
#include "cftv/quadrature.hpp"
#include "cftv/special.hpp"
#include "cftv/symmetric.hpp"

#include <cmath>
#include <stdexcept>

namespace cftv {

std::string to_string(Derivation d) {
  switch (d) {
    case Derivation::product_form:
      return "product-form";
    case Derivation::gram_determinant:
      return "gram-determinant";
    case Derivation::reduced_gram:
      return "reduced-gram";
    case Derivation::quadrature:
      return "quadrature";
  }
  return "unknown";
}

namespace {

struct ExactGamma {
  Rational operator()(const Rational& x) const {
    if (!is_integer(x) || x < 1) throw std::domain_error("Gamma pole or non-integer argument in exact path");
    return factorial(x.convert_to<int>() - 1);
  }
};

struct RealGamma {
  double operator()(double x) const {
    if (x <= 0.0 && std::floor(x) == x) throw std::domain_error("Gamma pole at " + std::to_string(x));
    return std::tgamma(x);
  }
};

template <class T, class Gamma>
T beta(const T& a, const T& b, Gamma gamma) {
  return gamma(a) * gamma(b) / gamma(a + b);
}

template <class T>
T vandermonde(const std::vector<int>& f) {
  T v(1);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j) v *= T(f[i] - f[j]);
  return v;
}

template <class T, class Gamma>
T bosonic(const Partition& lambda, const T& p, const T& q, int m, Derivation route, Gamma gamma) {
  const auto f = shifted_parts(lambda, m);
  const T mfact(factorial(m).convert_to<long>());
  auto fj = [&](int j) { return f[static_cast<std::size_t>(j - 1)]; };
  switch (route) {
    case Derivation::product_form: {
      T acc = mfact * vandermonde<T>(f);
      for (int j = 1; j <= m; ++j)
        acc *= gamma(q + T(j - 1)) * gamma(p + T(fj(j))) / gamma(T(m) + p + q + T(fj(j) - 1));
      return acc;
    }
    case Derivation::gram_determinant:
      return mfact * small_determinant<T>(m, [&](int i, int j) {
               return beta(T(m) + p + T(fj(j + 1) - (i + 1)), q, gamma);
             });
    case Derivation::reduced_gram:
      return mfact * small_determinant<T>(m, [&](int i, int j) {
               return beta(T(m) + p + T(fj(j + 1) - (i + 1)), q + T(i), gamma);
             });
    default:
      throw std::invalid_argument("schur_selberg_bosonic: unsupported derivation");
  }
}

template <class T, class Gamma>
T fermionic(const Partition& lambda, const T& p, const T& q, int m, Derivation route, Gamma gamma) {
  const auto f = shifted_parts(lambda, m);
  const T mfact(factorial(m).convert_to<long>());
  auto fj = [&](int j) { return f[static_cast<std::size_t>(j - 1)]; };
  switch (route) {
    case Derivation::product_form: {
      T acc = mfact * vandermonde<T>(f);
      for (int j = 1; j <= m; ++j)
        acc *= gamma(p + T(fj(j))) * gamma(q + T(m - fj(j) - 1)) / gamma(p + q + T(2 * m - j - 1));
      return acc;
    }
    case Derivation::gram_determinant:
      return mfact * small_determinant<T>(m, [&](int i, int j) {
               return beta(T(m) + p + T(fj(j + 1) - (i + 1)), q + T(m - fj(j + 1) - 2 + (i + 1)), gamma);
             });
    case Derivation::reduced_gram:
      return mfact * small_determinant<T>(m, [&](int i, int j) {
               return beta(T(m) + p + T(fj(j + 1) - (i + 1)), q + T(m - fj(j + 1) - 1), gamma);
             });
    default:
      throw std::invalid_argument("schur_selberg_fermionic: unsupported derivation");
  }
}

bool integral_value(double v) { return std::floor(v) == v && std::fabs(v) < 1e6; }

void require_positive_pq(double p, double q, const char* who) {
  if (!(p > 0.0) || !(q > 0.0)) throw std::domain_error(std::string(who) + ": p and q must be positive");
}

}  // namespace

Rational selberg_constant_bosonic(int N, int n, int m) {
  if (m < 1 || n < m || N < n + m)
    throw std::invalid_argument("selberg_constant_bosonic: need N >= n + m and n >= m >= 1");
  Rational c(1);
  for (int j = 0; j < m; ++j)
    c *= factorial(1 + j) * factorial(n - m + j) * factorial(N - n - m + j) / factorial(N - m + j);
  return c;
}

Rational selberg_constant_fermionic(int N, int n, int m) {
  if (m < 1 || n < m || N < 1)
    throw std::invalid_argument("selberg_constant_fermionic: need n >= m >= 1 and N >= 1");
  Rational c(1);
  for (int j = 0; j < m; ++j)
    c *= factorial(1 + j) * factorial(n - m + j) * factorial(N + j) / factorial(N + n + j);
  return c;
}

ClosedFormValue schur_selberg_bosonic(const Partition& lambda, double p, double q, int m, Derivation route) {
  require_positive_pq(p, q, "schur_selberg_bosonic");
  ClosedFormValue out;
  out.derivation = route;
  if (integral_value(p) && integral_value(q)) {
    out.exact = bosonic<Rational>(lambda, Rational(static_cast<long>(p)), Rational(static_cast<long>(q)), m,
                                  route, ExactGamma{});
    out.value = to_double(*out.exact);
  } else {
    out.value = bosonic<double>(lambda, p, q, m, route, RealGamma{});
  }
  return out;
}

ClosedFormValue schur_selberg_fermionic(const Partition& lambda, double p, double q, int m, Derivation route) {
  require_positive_pq(p, q, "schur_selberg_fermionic");
  const auto f = shifted_parts(lambda, m);
  for (int j = 1; j <= m; ++j)
    if (!(q + m - f[static_cast<std::size_t>(j - 1)] - 1 > 0.0))
      throw std::domain_error("schur_selberg_fermionic: integral diverges, q + m - f_j - 1 <= 0 at j = " +
                              std::to_string(j));
  ClosedFormValue out;
  out.derivation = route;
  if (integral_value(p) && integral_value(q)) {
    out.exact = fermionic<Rational>(lambda, Rational(static_cast<long>(p)), Rational(static_cast<long>(q)), m,
                                    route, ExactGamma{});
    out.value = to_double(*out.exact);
  } else {
    out.value = fermionic<double>(lambda, p, q, m, route, RealGamma{});
  }
  return out;
}

Rational fermionic_tilt_normaliser(int N, int n, int m, int tilt) {
  if (m < 1 || m > n || tilt < 0 || tilt > N)
    throw std::invalid_argument("fermionic_tilt_normaliser: need 1 <= m <= n and 0 <= tilt <= N");
  auto mass = [&](int b) { return *schur_selberg_bosonic(Partition{}, n - m + 1, b + 1, m).exact; };
  return mass(N - tilt) / mass(N);
}

Rational rhs_schur_moment_bosonic(const Partition& lambda, int N, int n, int m) {
  if (m < 1 || n < 1 || m > N || n > N)
    throw std::invalid_argument("rhs_schur_moment_bosonic: need 1 <= m, n <= N");
  if (lambda.length() > std::min(m, n)) return Rational(0);
  return weyl_dimension(lambda, m) * weyl_dimension(lambda, n) / weyl_dimension(lambda, N);
}

Rational rhs_schur_moment_fermionic(const Partition& lambda, int N, int n, int m) {
  if (m < 1 || n < 1 || N < 1) throw std::invalid_argument("rhs_schur_moment_fermionic: need positive N, n, m");
  if (lambda[1] > N)
    throw std::domain_error("rhs_schur_moment_fermionic: lambda_1 > N, the conjugate dimension vanishes");
  if (lambda.length() > std::min(m, n)) return Rational(0);
  return weyl_dimension(lambda, n) * weyl_dimension(lambda, m) / weyl_dimension(conjugate(lambda), N);
}

double bessel_determinant_formula(int N, int m, const std::vector<double>& d) {
  if (m < 1 || 2 * m > N) throw std::invalid_argument("bessel_determinant_formula: need 1 <= m and 2m <= N");
  if (static_cast<int>(d.size()) != m)
    throw std::invalid_argument("bessel_determinant_formula: expected m singular values");
  for (double v : d)
    if (!(v >= 0.0)) throw std::invalid_argument("bessel_determinant_formula: singular values must be >= 0");
  bool all_zero = true;
  for (double v : d) all_zero = all_zero && v == 0.0;
  if (all_zero) return 1.0;
  for (int j = 0; j < m; ++j)
    for (int k = j + 1; k < m; ++k)
      if (d[static_cast<std::size_t>(j)] == d[static_cast<std::size_t>(k)])
        throw std::domain_error("bessel_determinant_formula: coincident singular values");

  const int power = N - 2 * m;
  RMatrix moments(m, m);
  for (int j = 1; j <= m; ++j)
    for (int k = 1; k <= m; ++k) {
      const double dk = d[static_cast<std::size_t>(k - 1)];
      auto f = [&](double q) {
        return bessel_j0(2.0 * q * dk) * std::pow(q, 2 * (m - j) + 1) * std::pow(1.0 - q * q, power);
      };
      moments(j - 1, k - 1) = integrate(f, {0.0, 1.0}, 1e-13).value;
    }
  double vander = 1.0;
  for (int j = 0; j < m; ++j)
    for (int k = j + 1; k < m; ++k) {
      const double a = d[static_cast<std::size_t>(j)], b = d[static_cast<std::size_t>(k)];
      vander *= a * a - b * b;
    }
  // d -> 0 limit of the ratio: with J0(2qd) = sum_r (-1)^r (qd)^{2r}/(r!)^2 the
  // leading term is (-1)^{m(m-1)/2} det A0 with
  // A0_{j,r} = (-1)^r B(r+m-j+1, N-2m+1) / (2 (r!)^2), r = 0..m-1.
  RMatrix a0(m, m);
  for (int j = 1; j <= m; ++j)
    for (int r = 0; r < m; ++r) {
      const double rf = std::tgamma(r + 1.0);
      const double b = std::exp(std::lgamma(r + m - j + 1.0) + std::lgamma(power + 1.0) -
                                std::lgamma(r + m - j + power + 2.0));
      a0(j - 1, r) = (r % 2 == 0 ? 1.0 : -1.0) * 0.5 * b / (rf * rf);
    }
  const double sign = ((m * (m - 1) / 2) % 2 == 0) ? 1.0 : -1.0;
  return moments.determinant() / vander / (sign * a0.determinant());
}

}  // namespace cftv
