#include "check_support.hpp"

#include "cftv/closed_forms.hpp"
#include "cftv/ensembles.hpp"
#include "cftv/presets.hpp"
#include "cftv/quadrature.hpp"
#include "cftv/special.hpp"

#include <cmath>

namespace cftv {

namespace {

using detail::pick;
using detail::require;

std::string bcft_regime(int N, int m) {
  if (m == N) return "m=N";
  if (2 * m <= N) return "N>=2m";
  return "N<2m<2N";
}

// A draw from the law of the m x m truncation of Haar U(N), by regime.
CMatrix draw_square_truncation(int N, int m, SeededRng& rng) {
  if (m == N) return sample_haar_unitary(N, rng);
  if (2 * m <= N) return sample_stiefel(N, m, rng).topRows(m);
  return sample_boundary_truncation(N, m, rng);
}

// exp Tr(Y*UX + X*U*Y) = exp(2 Re Tr(Y*UX)).
double group_side(const CMatrix& x, const CMatrix& y, const CMatrix& u) {
  return std::exp(2.0 * (y.adjoint() * u * x).trace().real());
}

// (N-1) int_0^1 I0(2dq) 2q (1-q^2)^{N-2} dq: the m = 1 group integral with d = |x||y|.
double bcft_m1_quadrature(int N, double d) {
  auto f = [&](double q) { return bessel_i0(2.0 * d * q) * 2.0 * q * std::pow(1.0 - q * q, N - 2); };
  return (N - 1) * integrate(f, {0.0, 1.0}, 1e-12).value;
}

double bessel_m1_quadrature(int N, double d) {
  auto f = [&](double q) { return bessel_j0(2.0 * d * q) * 2.0 * q * std::pow(1.0 - q * q, N - 2); };
  return (N - 1) * integrate(f, {0.0, 1.0}, 1e-13).value;
}

void validate_xy(const CMatrix& x, const CMatrix& y, int N, int m) {
  require(x.rows() == N && x.cols() == m && y.rows() == N && y.cols() == m, "X and Y must be N x m");
}

}  // namespace

CheckResult check_bcft(const CheckConfig& config) {
  const int N = pick(config.N, 4);
  const int m = pick(config.m, 1);
  require(m <= N, "check_bcft: need m <= N");
  const std::string regime = bcft_regime(N, m);
  const CMatrix x = detail::input_matrix(config, "X", N, m, 0.9);
  const CMatrix y = detail::input_matrix(config, "Y", N, m, 0.9);
  validate_xy(x, y, N, m);

  auto result = detail::make_result("check_bcft", regime, detail::echo(config, "check_bcft", N, m, m));
  result.config["matrices"]["X"] = detail::matrix_json(x);
  result.config["matrices"]["Y"] = detail::matrix_json(y);

  const Estimate lhs = estimate_means(1, detail::mc_options(config, 0), [&](SeededRng& rng, cplx* out) {
                         out[0] = group_side(x, y, sample_haar_unitary(N, rng));
                       })[0];
  const CMatrix xx = x.adjoint() * x;
  const CMatrix yy = y.adjoint() * y;
  const Estimate rhs = estimate_means(1, detail::mc_options(config, 1), [&](SeededRng& rng, cplx* out) {
                         const CMatrix q = draw_square_truncation(N, m, rng);
                         out[0] = std::exp((xx * q).trace() + (q.adjoint() * yy).trace());
                       })[0];

  std::vector<CheckResult> parts;
  parts.push_back(detail::versus_estimate("group integral vs truncation integral", lhs, rhs, config.z_threshold));
  if (m == 1 && N >= 2) {
    const double d = x.norm() * y.norm();
    const double quad = bcft_m1_quadrature(N, d);
    parts.push_back(detail::versus_value("group integral vs quadrature", lhs, cplx(quad), config.z_threshold));
    parts.push_back(detail::versus_value("truncation integral vs quadrature", rhs, cplx(quad), config.z_threshold));
  }
  absorb(result, std::move(parts));
  return result;
}

CheckResult check_bcft_invariance(const CheckConfig& config) {
  const int N = pick(config.N, 4);
  const int m = pick(config.m, 2);
  require(m <= N, "check_bcft_invariance: need m <= N");
  const std::string regime = bcft_regime(N, m);
  const CMatrix x = detail::input_matrix(config, "X", N, m, 0.9);
  const CMatrix y = detail::input_matrix(config, "Y", N, m, 0.9);
  validate_xy(x, y, N, m);

  auto result = detail::make_result("check_bcft_invariance", regime,
                                    detail::echo(config, "check_bcft_invariance", N, m, m));
  result.config["matrices"]["X"] = detail::matrix_json(x);
  result.config["matrices"]["Y"] = detail::matrix_json(y);

  // (A, B) = (XY*, YX*) and (diag(spectrum, 0), I) share the non-zero spectrum of
  // AB; (C, D) = (X*X, Y*Y) and (diag(spectrum), I) share the spectrum of CD.
  const CMatrix xx = x.adjoint() * x;
  const CMatrix yy = y.adjoint() * y;
  Eigen::ComplexEigenSolver<CMatrix> eig(xx * yy, false);
  const Eigen::VectorXcd spectrum = eig.eigenvalues();
  const CMatrix a = x * y.adjoint();
  const CMatrix b = y * x.adjoint();
  result.notes = "spectrum of X*XY*Y:";
  for (Eigen::Index k = 0; k < spectrum.size(); ++k)
    result.notes += " (" + std::to_string(spectrum[k].real()) + "," + std::to_string(spectrum[k].imag()) + ")";

  auto trace_product = [](const CMatrix& p, const CMatrix& q) { return (p.transpose().cwiseProduct(q)).sum(); };

  const Estimate lhs_ab = estimate_means(1, detail::mc_options(config, 0), [&](SeededRng& rng, cplx* out) {
                            const CMatrix u = sample_haar_unitary(N, rng);
                            out[0] = std::exp(trace_product(a, u) + trace_product(u.adjoint(), b));
                          })[0];
  const Estimate lhs_diag = estimate_means(1, detail::mc_options(config, 1), [&](SeededRng& rng, cplx* out) {
                              const CMatrix u = sample_haar_unitary(N, rng);
                              cplx t = std::conj(u.trace());
                              for (Eigen::Index k = 0; k < spectrum.size(); ++k) t += spectrum[k] * u(k, k);
                              out[0] = std::exp(t);
                            })[0];
  const Estimate rhs_xy = estimate_means(1, detail::mc_options(config, 2), [&](SeededRng& rng, cplx* out) {
                            const CMatrix q = draw_square_truncation(N, m, rng);
                            out[0] = std::exp(trace_product(xx, q) + trace_product(q.adjoint(), yy));
                          })[0];
  const Estimate rhs_diag = estimate_means(1, detail::mc_options(config, 3), [&](SeededRng& rng, cplx* out) {
                              const CMatrix q = draw_square_truncation(N, m, rng);
                              cplx t = std::conj(q.trace());
                              for (Eigen::Index k = 0; k < spectrum.size(); ++k) t += spectrum[k] * q(k, k);
                              out[0] = std::exp(t);
                            })[0];

  std::vector<CheckResult> parts;
  parts.push_back(detail::versus_estimate("group integral: (XY*, YX*) vs (diag, I)", lhs_ab, lhs_diag,
                                          config.z_threshold));
  parts.push_back(detail::versus_estimate("truncation integral: (X*X, Y*Y) vs (diag, I)", rhs_xy, rhs_diag,
                                          config.z_threshold));
  parts.push_back(detail::versus_estimate("group (XY*, YX*) vs truncation (diag, I)", lhs_ab, rhs_diag,
                                          config.z_threshold));
  absorb(result, std::move(parts));
  return result;
}

CheckResult check_ww_alternative(const CheckConfig& config) {
  const int N = pick(config.N, 3);
  const int m = pick(config.m, 1);
  require(m <= N, "check_ww_alternative: need m <= N");
  const CMatrix x = detail::input_matrix(config, "X", N, m, 1.0);
  const CMatrix y = detail::input_matrix(config, "Y", N, m, 1.0);
  validate_xy(x, y, N, m);
  const CMatrix yx = y.adjoint() * x;
  const cplx det_yx = yx.determinant();
  require(std::abs(det_yx) > 1e-8 * std::pow(x.norm() * y.norm(), m), "check_ww_alternative: Y*X is rank deficient");

  auto result = detail::make_result("check_ww_alternative", m == N ? "m=N" : "m<N",
                                    detail::echo(config, "check_ww_alternative", N, m, m));
  result.config["matrices"]["X"] = detail::matrix_json(x);
  result.config["matrices"]["Y"] = detail::matrix_json(y);

  // Unit-mass normalisation of the U(m) integral:
  // K = prod_{i=1}^m (N-i)!/(m-i)! * (det(Y*X)/det(Y*Y))^{N-m}.
  const CMatrix xx = x.adjoint() * x;
  const CMatrix yy = y.adjoint() * y;
  double factorials = 1.0;
  for (int i = 1; i <= m; ++i) factorials *= std::tgamma(N - i + 1.0) / std::tgamma(m - i + 1.0);
  const cplx k = factorials * std::pow(det_yx / yy.determinant(), N - m);
  result.notes = "U(m) integrand normalised by prod (N-i)!/(m-i)! (det Y*X / det Y*Y)^(N-m)";

  const Estimate lhs = estimate_means(1, detail::mc_options(config, 0), [&](SeededRng& rng, cplx* out) {
                         out[0] = group_side(x, y, sample_haar_unitary(N, rng));
                       })[0];
  const Estimate alt = estimate_means(1, detail::mc_options(config, 1), [&](SeededRng& rng, cplx* out) {
                         const CMatrix v = sample_haar_unitary(m, rng);
                         const cplx weight = std::pow((v * yx).determinant(), m - N);
                         out[0] = k * weight * std::exp((xx * v.adjoint()).trace() + (v * yy).trace());
                       })[0];
  std::vector<CheckResult> parts;
  parts.push_back(detail::versus_estimate("U(N) integral vs U(m) integral", lhs, alt, config.z_threshold));
  if (m < N) {
    const Estimate su = estimate_means(1, detail::mc_options(config, 2), [&](SeededRng& rng, cplx* out) {
                          out[0] = group_side(x, y, sample_special_unitary(N, rng));
                        })[0];
    parts.push_back(detail::versus_estimate("U(N) integral vs SU(N) integral", lhs, su, config.z_threshold));
    parts.push_back(detail::versus_estimate("SU(N) integral vs U(m) integral", su, alt, config.z_threshold));
  }
  if (m == 1 && N >= 2) {
    const double quad = bcft_m1_quadrature(N, x.norm() * y.norm());
    parts.push_back(detail::versus_value("U(m) integral vs quadrature", alt, cplx(quad), config.z_threshold));
  }
  absorb(result, std::move(parts));
  return result;
}

CheckResult check_bessel_determinant(const CheckConfig& config) {
  const int N = pick(config.N, 4);
  const int m = pick(config.m, 2);
  require(m >= 1 && 2 * m <= N, "check_bessel_determinant: need 2m <= N");
  std::vector<double> d;
  for (int k = 1; k <= m; ++k) {
    auto it = config.scalars.find("d" + std::to_string(k));
    d.push_back(it != config.scalars.end() ? it->second : 0.5 * k);
  }
  auto result = detail::make_result("check_bessel_determinant", "2m<=N",
                                    detail::echo(config, "check_bessel_determinant", N, m, m));
  result.config["d"] = d;

  // X = E diag(d), Y = E with E an N x m isometry, so XY* has singular values d.
  SeededRng frame_rng(fnv1a("bessel-frame"), static_cast<std::uint64_t>(N * 64 + m));
  const CMatrix e = sample_stiefel(N, m, frame_rng);
  std::vector<cplx> dc(d.begin(), d.end());
  const CMatrix x = e * diagonal(dc);
  const CMatrix y = e;
  result.config["matrices"]["X"] = detail::matrix_json(x);
  result.config["matrices"]["Y"] = detail::matrix_json(y);

  const double formula = bessel_determinant_formula(N, m, d);
  std::vector<CheckResult> parts;
  std::string notes;
  const Estimate mc = detail::guarded(
      [&](std::int64_t samples) {
        auto opt = detail::mc_options(config, 0);
        opt.samples = samples;
        return estimate_means(1, opt, [&](SeededRng& rng, cplx* out) {
          const CMatrix u = sample_haar_unitary(N, rng);
          out[0] = std::exp(cplx(0.0, -2.0 * (y.adjoint() * u * x).trace().real()));
        })[0];
      },
      detail::mc_options(config, 0).samples, std::abs(formula), notes);
  parts.push_back(detail::versus_value("determinant formula vs Haar average", mc, cplx(formula), config.z_threshold));

  parts.push_back(detail::within_tolerance("value at d = 0", cplx(bessel_determinant_formula(N, m, std::vector<double>(m, 0.0))),
                                           cplx(1.0), 1e-12));
  if (m >= 2) {
    std::vector<double> reversed(d.rbegin(), d.rend());
    parts.push_back(detail::within_tolerance("symmetric in d", cplx(bessel_determinant_formula(N, m, reversed)),
                                             cplx(formula), 1e-10));
  }
  const double d1 = d.back();
  parts.push_back(detail::within_tolerance("m = 1 reduction vs quadrature",
                                           cplx(bessel_determinant_formula(N, 1, {d1})),
                                           cplx(bessel_m1_quadrature(N, d1)), 1e-10));
  result.notes = notes;
  absorb(result, std::move(parts));
  return result;
}

}  // namespace cftv
