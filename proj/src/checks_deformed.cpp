#include "check_support.hpp"

#include "cftv/ensembles.hpp"
#include "cftv/presets.hpp"
#include "cftv/quadrature.hpp"
#include "cftv/special.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace cftv {

namespace {

using detail::pick;
using detail::require;

// Right-hand side of the m = 1 resolvent formula, up to its global constant:
// int_0^1 dp p (1-p^2)^{N-2} int_R du Im prod_j 1/(eps^2 - p^2 + b_j^2 + 2i eps p cosh u).
// The u-integrand is even, so the u-range is folded onto [0, inf).
double resolvent_quadrature(int N, double eps, const std::vector<double>& b) {
  auto f = [&](double p, double u) {
    cplx prod = 1.0;
    const double c = std::cosh(u);
    for (double bj : b) prod /= cplx(eps * eps - p * p + bj * bj, 2.0 * eps * p * c);
    return 2.0 * p * std::pow(1.0 - p * p, N - 2) * prod.imag();
  };
  return integrate_2d(f, {0.0, 1.0}, {0.0, kInfinity}, 1e-10).value;
}

// E_{U(N)} prod_j f(theta_j) = det(f_{j-k}) for the Fourier coefficients of
// f(phi) = 1/(eps^2 + |1 - b e^{i phi}|^2).
double toeplitz_average(int N, double eps, double b) {
  std::vector<double> coeff(static_cast<std::size_t>(N));
  for (int k = 0; k < N; ++k) {
    auto f = [&](double phi) {
      return std::cos(k * phi) / (eps * eps + 1.0 - 2.0 * b * std::cos(phi) + b * b);
    };
    coeff[static_cast<std::size_t>(k)] = integrate(f, {0.0, std::numbers::pi}, 1e-13).value / std::numbers::pi;
  }
  RMatrix t(N, N);
  for (int j = 0; j < N; ++j)
    for (int k = 0; k < N; ++k) t(j, k) = coeff[static_cast<std::size_t>(std::abs(j - k))];
  return t.determinant();
}

// sum_k (-1)^k d^{2k}/(k!)^2 * B(k+1, N-1): the J0 moment by term-wise integration.
double j0_moment_series(int N, double d) {
  double total = 0.0;
  double coeff = 1.0;  // d^{2k}/(k!)^2 with sign
  for (int k = 0; k < 200; ++k) {
    if (k > 0) coeff *= -d * d / (static_cast<double>(k) * k);
    const double beta = std::exp(std::lgamma(k + 1.0) + std::lgamma(N - 1.0) - std::lgamma(k + N));
    total += coeff * beta;
    if (std::fabs(coeff * beta) < 1e-18 && k > 2 * d) break;
  }
  return total;
}

Estimate resolvent_mc(const CheckConfig& config, int index, int N, double eps, const CMatrix& b) {
  const CMatrix id = CMatrix::Identity(N, N);
  return estimate_means(1, detail::mc_options(config, index), [&](SeededRng& rng, cplx* out) {
           const CMatrix u = sample_haar_unitary(N, rng);
           const CMatrix w = id - b * u;
           out[0] = 1.0 / (eps * eps * id + w * w.adjoint()).determinant().real();
         })[0];
}

std::string describe(double eps, const std::vector<double>& b) {
  std::ostringstream os;
  os << "eps=" << eps << " b=(";
  for (std::size_t j = 0; j < b.size(); ++j) os << (j ? "," : "") << b[j];
  os << ")";
  return os.str();
}

CMatrix diagonal_real(const std::vector<double>& b) {
  std::vector<cplx> entries(b.begin(), b.end());
  return diagonal(entries);
}

}  // namespace

CheckResult check_deformed(const CheckConfig& config) {
  require(config.m == 0 || config.m == 1, "check_deformed: only m = 1 is supported");
  const int N = pick(config.N, 3);
  require(N >= 2, "check_deformed: need N >= 2");
  const double eps = config.scalars.count("eps") ? config.scalars.at("eps") : 0.5;
  require(eps > 0.0, "check_deformed: eps must be positive");
  const double d = config.scalars.count("d") ? config.scalars.at("d") : 1.0;
  require(d > 0.0, "check_deformed: d must be positive");
  std::vector<double> b;
  for (int j = 1; j <= N; ++j) {
    auto it = config.scalars.find("b" + std::to_string(j));
    const double fallback = N == 3 ? std::vector<double>{0.4, 0.2, 0.1}[static_cast<std::size_t>(j - 1)]
                                   : 0.4 / std::pow(2.0, j - 1);
    b.push_back(it != config.scalars.end() ? it->second : fallback);
    require(b.back() >= 0.0 && b.back() < 1.0, "check_deformed: singular values b_j must lie in [0, 1)");
  }

  auto result = detail::make_result("check_deformed", "m=1", detail::echo(config, "check_deformed", N, 1, 1));
  result.config["matrices"]["B"] = detail::matrix_json(diagonal_real(b));
  std::vector<CheckResult> parts;

  // Parity of the Neumann part and doubling of the Bessel part over [-1, 1].
  auto weight = [&](double p) { return p * std::pow(1.0 - p * p, N - 2); };
  const double y0_odd =
      integrate([&](double p) { return p == 0.0 ? 0.0 : bessel_y0(2.0 * std::fabs(p) * d) * weight(p); }, {-1.0, 1.0},
                1e-10)
          .value;
  parts.push_back(detail::within_tolerance("Y0 parity integral vanishes", y0_odd, 0.0, 1e-8));
  const double j0_signed =
      integrate([&](double p) { return (p < 0 ? -1.0 : 1.0) * bessel_j0(2.0 * std::fabs(p) * d) * weight(p); },
                {-1.0, 1.0}, 1e-10)
          .value;
  const double j0_half = integrate([&](double p) { return bessel_j0(2.0 * p * d) * weight(p); }, {0.0, 1.0}, 1e-12).value;
  parts.push_back(detail::within_tolerance("J0 signed integral equals twice the half-range", j0_signed, 2.0 * j0_half, 1e-8));
  parts.push_back(detail::within_tolerance("J0 half-range integral vs term-wise series", j0_half,
                                           0.5 * j0_moment_series(N, d), 1e-10));

  // Exactly solvable points of the left-hand side.
  const Estimate zero = resolvent_mc(config, 0, N, eps, CMatrix::Zero(N, N));
  parts.push_back(detail::versus_value("B=0: Haar average vs (1+eps^2)^-N", zero, cplx(std::pow(1.0 + eps * eps, -N)),
                                       config.z_threshold));
  const double scalar_b = b[0];
  const Estimate scalar = resolvent_mc(config, 1, N, eps, scalar_b * CMatrix::Identity(N, N));
  parts.push_back(detail::versus_value("B=bI: Haar average vs Toeplitz determinant", scalar,
                                       cplx(toeplitz_average(N, eps, scalar_b)), config.z_threshold));

  // Ratio LHS/RHS calibrated at the first sweep point, then checked at the others.
  struct Point {
    double eps;
    std::vector<double> b;
  };
  std::vector<Point> sweep{{eps, b}, {1.6 * eps, b}, {eps, b}};
  for (auto& v : sweep[2].b) v *= 2.0;
  for (const auto& v : sweep[2].b) require(v < 1.0, "check_deformed: sweep doubles b, so b_j must be < 0.5");

  std::vector<Estimate> lhs;
  std::vector<double> rhs;
  for (std::size_t k = 0; k < sweep.size(); ++k) {
    lhs.push_back(resolvent_mc(config, 2 + static_cast<int>(k), N, sweep[k].eps, diagonal_real(sweep[k].b)));
    rhs.push_back(resolvent_quadrature(N, sweep[k].eps, sweep[k].b));
  }
  const double constant = lhs[0].mean.real() / rhs[0];
  for (std::size_t k = 1; k < sweep.size(); ++k) {
    Estimate predicted;
    const double scale = rhs[k] / rhs[0];
    predicted.mean = constant * rhs[k];
    predicted.se_re = lhs[0].se_re * std::fabs(scale);
    predicted.n = lhs[0].n;
    predicted.seed = lhs[0].seed;
    parts.push_back(detail::versus_estimate("ratio at " + describe(sweep[k].eps, sweep[k].b) + " vs calibration at " +
                                                describe(sweep[0].eps, sweep[0].b),
                                            lhs[k], predicted, config.z_threshold));
  }
  std::ostringstream notes;
  notes.precision(6);
  notes << "calibrated constant LHS/RHS = " << constant << " (-4/pi = " << -4.0 / std::numbers::pi << ")";
  absorb(result, std::move(parts));
  result.notes = notes.str();
  return result;
}

}  // namespace cftv
