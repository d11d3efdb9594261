#include "cftv/special.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cftv {

namespace {

// Power series are summed in long double up to this argument; above it the
// Hankel asymptotic expansion is already accurate to double precision.
constexpr double kSeriesLimit = 17.0;

constexpr long double kEulerGamma = 0.577215664901532860606512090082402431L;

long double j0_series(long double x) {
  const long double q = x * x / 4.0L;
  long double term = 1.0L;
  long double sum = 1.0L;
  for (int k = 1; k < 200; ++k) {
    term *= -q / (static_cast<long double>(k) * k);
    sum += term;
    if (std::fabs(term) < 1e-22L * std::fabs(sum) && k > q) break;
  }
  return sum;
}

// Sum_{k>=1} (-1)^{k+1} H_k q^k / (k!)^2.
long double y0_series_tail(long double x) {
  const long double q = x * x / 4.0L;
  long double term = 1.0L;
  long double harmonic = 0.0L;
  long double sum = 0.0L;
  for (int k = 1; k < 200; ++k) {
    term *= -q / (static_cast<long double>(k) * k);
    harmonic += 1.0L / k;
    sum -= term * harmonic;
    if (std::fabs(term * harmonic) < 1e-22L * (std::fabs(sum) + 1e-300L) && k > q) break;
  }
  return sum;
}

// P and Q of the Hankel expansion for order zero.
void hankel_pq(double x, double& p, double& q) {
  p = 0.0;
  q = 0.0;
  double a = 1.0;
  double previous = INFINITY;
  for (int k = 0; k < 200; ++k) {
    if (k > 0) {
      const double odd = 2.0 * k - 1.0;
      a *= odd * odd / (k * 8.0 * x);
    }
    if (a >= previous) break;
    previous = a;
    // Each factor (4 nu^2 - (2i-1)^2) is negative at nu = 0, which flips the
    // sign of the odd terms.
    const int sign = (k / 2) % 2 == 0 ? 1 : -1;
    if (k % 2 == 0)
      p += sign * a;
    else
      q -= sign * a;
    if (a < 1e-17) break;
  }
}

}  // namespace

double bessel_j0(double x) {
  x = std::fabs(x);
  if (x <= kSeriesLimit) return static_cast<double>(j0_series(x));
  double p, q;
  hankel_pq(x, p, q);
  const double chi = x - std::numbers::pi / 4.0;
  return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

double bessel_y0(double x) {
  if (!(x > 0.0)) throw std::domain_error("bessel_y0: argument must be positive");
  if (x <= kSeriesLimit) {
    const long double lx = x;
    const long double two_over_pi = 2.0L / std::numbers::pi_v<long double>;
    return static_cast<double>(two_over_pi * ((std::log(lx / 2.0L) + kEulerGamma) * j0_series(lx) +
                                              y0_series_tail(lx)));
  }
  double p, q;
  hankel_pq(x, p, q);
  const double chi = x - std::numbers::pi / 4.0;
  return std::sqrt(2.0 / (std::numbers::pi * x)) * (p * std::sin(chi) + q * std::cos(chi));
}

double bessel_i0(double x) {
  const long double q = static_cast<long double>(x) * x / 4.0L;
  long double term = 1.0L;
  long double sum = 1.0L;
  for (int k = 1; k < 400; ++k) {
    term *= q / (static_cast<long double>(k) * k);
    sum += term;
    if (term < 1e-20L * sum) break;
  }
  return static_cast<double>(sum);
}

double log_gamma(double x) {
  if (x <= 0.0 && std::floor(x) == x) throw std::domain_error("log_gamma: pole at non-positive integer");
  return std::lgamma(x);
}

double special(SpecialKind kind, double x) {
  switch (kind) {
    case SpecialKind::J0:
      return bessel_j0(x);
    case SpecialKind::Y0:
      return bessel_y0(x);
    case SpecialKind::LogGamma:
      return log_gamma(x);
  }
  throw std::invalid_argument("special: unknown kind");
}

}  // namespace cftv
