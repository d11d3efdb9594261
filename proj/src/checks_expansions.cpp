#include "check_support.hpp"

#include "cftv/closed_forms.hpp"
#include "cftv/ensembles.hpp"
#include "cftv/presets.hpp"
#include "cftv/symmetric.hpp"

#include <cmath>
#include <sstream>

namespace cftv {

namespace {

using detail::pick;
using detail::require;

std::vector<cplx> eigenvalues(const CMatrix& a) {
  Eigen::ComplexEigenSolver<CMatrix> eig(a, false);
  const Eigen::VectorXcd v = eig.eigenvalues();
  return {v.data(), v.data() + v.size()};
}

// prod_{i,j} (1 + sign x_i beta_j)^power for the radial values x.
cplx radial_product(const RadialSample& x, const std::vector<cplx>& beta, double sign, int power) {
  cplx p = 1.0;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    for (const auto& b : beta) p *= 1.0 + sign * x[i] * b;
  return power == 1 ? p : std::pow(p, power);
}

// sum_{k > K} C(k+M-1, M-1) r^k: bounds the tail of a Schur series whose
// degree-k part is dominated by h_k of M variables of modulus r.
double geometric_tail(int K, int M, double r) {
  double term = 1.0;  // C(k+M-1, M-1) r^k at k = 0
  double tail = 0.0;
  for (int k = 1; k < 100000; ++k) {
    term *= r * (k + M - 1.0) / k;
    if (k > K) {
      tail += term;
      if (term < 1e-18 * tail) break;
    }
  }
  return tail;
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(3);
  os << v;
  return os.str();
}

void require_contraction(const CMatrix& a, const std::string& who, const std::string& symbol) {
  require(operator_norm(a) < 1.0, who + ": " + symbol + " must have operator norm < 1");
}

}  // namespace

CheckResult check_resolvent_expansion(const CheckConfig& config) {
  const int N = pick(config.N, 3);
  const int m = pick(config.m, 1);
  const int n = pick(config.n, 1);
  require(m <= N && n <= N, "check_resolvent_expansion: need m, n <= N");
  const CMatrix a = detail::input_matrix(config, "A", N, N, 0.6);
  const CMatrix b = detail::input_matrix(config, "B", N, N, 0.6);
  require_contraction(a, "check_resolvent_expansion", "A");
  require_contraction(b, "check_resolvent_expansion", "B");

  const int big = std::max(m, n);
  const int small = std::min(m, n);
  auto result = detail::make_result("check_resolvent_expansion", m == N && n == N ? "m=n=N" : "m,n<=N",
                                    detail::echo(config, "check_resolvent_expansion", N, n, m));
  result.config["matrices"]["A"] = detail::matrix_json(a);
  result.config["matrices"]["B"] = detail::matrix_json(b);
  const CMatrix id = CMatrix::Identity(N, N);
  const std::vector<cplx> beta = eigenvalues(b.adjoint() * a);

  const Estimate lhs = estimate_means(1, detail::mc_options(config, 0), [&](SeededRng& rng, cplx* out) {
                         const CMatrix u = sample_haar_unitary(N, rng);
                         out[0] = 1.0 / (std::pow((id - a * u).determinant(), m) *
                                         std::pow((id - u.adjoint() * b.adjoint()).determinant(), n));
                       })[0];
  // 1/det(I - Q*Q (x) B*A) over the radial law of big x small truncations.
  const Estimate rhs = estimate_means(1, detail::mc_options(config, 1), [&](SeededRng& rng, cplx* out) {
                         out[0] = 1.0 / radial_product(sample_truncation_radial(N, big, small, rng), beta, -1.0, 1);
                       })[0];

  // Truncated Schur series sum_lambda s(1_m)s(1_n)/s(1_N) s_lambda(AB*).
  const int K = config.series_cutoff;
  const auto h = complete_from_spectrum(beta, K + small);
  cplx series = 0.0;
  for (const auto& lambda : enumerate_partitions(K, small)) {
    const double coeff = to_double(rhs_schur_moment_bosonic(lambda, N, n, m));
    series += coeff * schur_from_complete<cplx>(lambda, h);
  }
  const double r = operator_norm(a) * operator_norm(b);
  result.notes = "series cutoff |lambda| <= " + std::to_string(K) + ", tail bound " +
                 format_double(geometric_tail(K, m * n, r));

  std::vector<CheckResult> parts;
  parts.push_back(detail::versus_estimate("Haar integral vs radial truncation average", lhs, rhs, config.z_threshold));
  parts.push_back(detail::versus_value("Haar integral vs Schur series", lhs, series, config.z_threshold));
  if (m == N && n == N) {
    const cplx closed = 1.0 / std::pow((id - b.adjoint() * a).determinant(), N);
    parts.push_back(detail::versus_value("Haar integral vs 1/det(I-B*A)^N", lhs, closed, config.z_threshold));
    parts.push_back(detail::within_tolerance("Schur series vs 1/det(I-B*A)^N", series, closed,
                                             std::max(1e-8, 10.0 * geometric_tail(K, m * n, r))));
  }
  absorb(result, std::move(parts));
  return result;
}

CheckResult check_charpoly_expansion(const CheckConfig& config) {
  const int N = pick(config.N, 2);
  const int m = pick(config.m, 1);
  const int n = pick(config.n, 1);
  require(m <= 4 && n <= 4 && N <= 6, "check_charpoly_expansion: need m, n <= 4 and N <= 6");
  const CMatrix a = detail::input_matrix(config, "A", N, N, 0.5);
  const CMatrix b = detail::input_matrix(config, "B", N, N, 0.5);

  const int big = std::max(m, n);
  const int small = std::min(m, n);
  auto result = detail::make_result("check_charpoly_expansion", "any N",
                                    detail::echo(config, "check_charpoly_expansion", N, n, m));
  result.config["matrices"]["A"] = detail::matrix_json(a);
  result.config["matrices"]["B"] = detail::matrix_json(b);
  const CMatrix id = CMatrix::Identity(N, N);
  const std::vector<cplx> beta = eigenvalues(b.adjoint() * a);

  const Estimate lhs = estimate_means(1, detail::mc_options(config, 0), [&](SeededRng& rng, cplx* out) {
                         const CMatrix u = sample_haar_unitary(N, rng);
                         out[0] = std::pow((id + a * u).determinant(), m) *
                                  std::pow((id + u.adjoint() * b.adjoint()).determinant(), n);
                       })[0];
  // The integrand has degree N in each radial value, so the plain fermionic
  // estimator has infinite variance; draw from the tilted law instead.
  const int tilt = detail::fermionic_tilt(N, N);
  const double scale = to_double(fermionic_tilt_normaliser(N, big, small, tilt));
  const Estimate rhs = estimate_means(1, detail::mc_options(config, 1), [&](SeededRng& rng, cplx* out) {
                         const TiltedRadial draw = sample_fermionic_radial_tilted(N, big, small, tilt, rng);
                         out[0] = scale * draw.weight * radial_product(draw.x, beta, 1.0, 1);
                       })[0];

  // Finite sum over lambda inside the small x N box:
  // s(1_m) s(1_n) s_lambda'(AB*) / s_lambda'(1_N).
  const auto h = complete_from_spectrum(beta, small + N);
  cplx exact = 0.0;
  for (const auto& lambda : enumerate_partitions(small * N, small)) {
    if (lambda[1] > N) continue;
    const Partition dual = conjugate(lambda);
    exact += to_double(rhs_schur_moment_fermionic(lambda, N, n, m)) * schur_from_complete<cplx>(dual, h);
  }
  result.notes = "fermionic radial average uses importance draws weighted by prod(1-y_j)^" + std::to_string(tilt);

  std::vector<CheckResult> parts;
  parts.push_back(detail::versus_value("Haar integral vs finite Schur sum", lhs, exact, config.z_threshold));
  parts.push_back(detail::versus_value("fermionic radial average vs finite Schur sum", rhs, exact, config.z_threshold));
  parts.push_back(detail::versus_estimate("Haar integral vs fermionic radial average", lhs, rhs, config.z_threshold));
  absorb(result, std::move(parts));
  return result;
}

CheckResult check_berezin(const CheckConfig& config) {
  const std::string variant = config.variant.empty() ? "both" : config.variant;
  require(variant == "both" || variant == "bosonic" || variant == "fermionic",
          "check_berezin: unknown variant '" + variant + "'");
  const bool bosonic = variant != "fermionic";
  const bool fermionic = variant != "bosonic";
  const int N = pick(config.N, 4);
  const int n = pick(config.n, 1);
  const int m = pick(config.m, 1);
  require(m <= n, "check_berezin: need m <= n");
  if (bosonic) require(N >= n + m, "check_berezin: the bosonic kernel needs N >= n + m");

  auto pick_matrix = [&](const std::string& symbol, const std::string& scalar) {
    auto it = config.scalars.find(scalar);
    if (it != config.scalars.end() && !config.matrices.count(symbol)) {
      require(n == 1 && m == 1, "check_berezin: scalar " + scalar + " needs n = m = 1");
      return CMatrix(CMatrix::Constant(1, 1, it->second));
    }
    return detail::input_matrix(config, symbol, n, m, 0.5);
  };
  const CMatrix z1 = pick_matrix("Z1", "z1");
  const CMatrix z2 = pick_matrix("Z2", "z2");
  require_contraction(z1, "check_berezin", "Z1");
  require_contraction(z2, "check_berezin", "Z2");

  auto result = detail::make_result("check_berezin", bosonic ? "N>=n+m" : "any N",
                                    detail::echo(config, "check_berezin", N, n, m));
  result.config["matrices"]["Z1"] = detail::matrix_json(z1);
  result.config["matrices"]["Z2"] = detail::matrix_json(z2);
  const CMatrix id = CMatrix::Identity(m, m);

  std::vector<CheckResult> parts;
  if (bosonic) {
    const Estimate est = estimate_means(1, detail::mc_options(config, 0), [&](SeededRng& rng, cplx* out) {
                           const CMatrix q = sample_stiefel(N, m, rng).topRows(n);
                           out[0] = 1.0 / std::pow((id - q.adjoint() * z1).determinant() *
                                                       (id - z2.adjoint() * q).determinant(), N);
                         })[0];
    const cplx ref = 1.0 / std::pow((id - z2.adjoint() * z1).determinant(), N);
    parts.push_back(detail::versus_value("bosonic kernel vs det(I-Z2*Z1)^-N", est, ref, config.z_threshold));
  }
  if (fermionic) {
    // Degree N per radial value: tilted draws keep the variance finite.
    const int tilt = detail::fermionic_tilt(N, N);
    const double scale = to_double(fermionic_tilt_normaliser(N, n, m, tilt));
    const Estimate est = estimate_means(1, detail::mc_options(config, 1), [&](SeededRng& rng, cplx* out) {
                           const TiltedMatrix draw = sample_fermionic_matrix_tilted(N, n, m, tilt, rng);
                           const CMatrix& q = draw.q;
                           out[0] = scale * draw.weight *
                                    std::pow((id + q.adjoint() * z1).determinant() *
                                                 (id + z2.adjoint() * q).determinant(), N);
                         })[0];
    const cplx ref = std::pow((id + z2.adjoint() * z1).determinant(), N);
    parts.push_back(detail::versus_value("fermionic kernel vs det(I+Z2*Z1)^N", est, ref, config.z_threshold));
  }
  absorb(result, std::move(parts));
  return result;
}

}  // namespace cftv
