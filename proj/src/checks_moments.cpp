#include "check_support.hpp"

#include "cftv/closed_forms.hpp"
#include "cftv/ensembles.hpp"
#include "cftv/presets.hpp"
#include "cftv/symmetric.hpp"

#include <map>

namespace cftv {

namespace {

using detail::pick;
using detail::require;

int max_degree(const std::vector<Partition>& lambdas) {
  int d = 0;
  for (const auto& l : lambdas) d = std::max(d, jacobi_trudi_degree(l));
  return d;
}

// Complete symmetric functions of the eigenvalues of a square matrix.
std::vector<cplx> complete_of_matrix(const CMatrix& a, int degree) {
  if (degree == 0) return {cplx(1.0)};
  return bases_from_power_sums(power_sums<cplx>(a, degree), degree, SymBasis::complete);
}

cplx schur_with(const Partition& lambda, const std::vector<cplx>& h, int variables) {
  if (lambda.length() > variables) return 0.0;
  return schur_from_complete<cplx>(lambda, h);
}

// A partition different from lambda: another one of the same weight and
// length <= max_length when there is one, otherwise lambda with a box added to
// the first row.
Partition orthogonal_partner(const Partition& lambda, int max_length) {
  for (const auto& p : partitions_of(lambda.weight(), max_length))
    if (p != lambda) return p;
  std::vector<int> parts = lambda.parts();
  if (parts.empty())
    parts.push_back(1);
  else
    ++parts[0];
  return Partition(parts);
}

// Sums of complete symmetric functions h_0..h_degree of x.
void complete_of(const RadialSample& x, int degree, double* h) {
  h[0] = 1.0;
  for (int r = 1; r <= degree; ++r) h[r] = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    for (int r = 1; r <= degree; ++r) h[r] += x[i] * h[r - 1];
}

std::vector<Estimate> truncation_moments(const CheckConfig& config, int N, int n, int m,
                                         const std::vector<Partition>& lambdas) {
  const int degree = max_degree(lambdas);
  return estimate_means(lambdas.size(), detail::mc_options(config, 0), [&](SeededRng& rng, cplx* out) {
    const RadialSample x = sample_truncation_radial(N, n, m, rng);
    double h[32];
    complete_of(x, degree, h);
    for (std::size_t i = 0; i < lambdas.size(); ++i)
      out[i] = lambdas[i].length() > m ? 0.0 : schur_from_complete<double>(lambdas[i], h);
  });
}

// Fermionic moments, grouped by the tilt their variance needs.
std::vector<Estimate> fermionic_moments(const CheckConfig& config, int N, int n, int m,
                                        const std::vector<Partition>& lambdas, std::string& notes) {
  std::map<int, std::vector<std::size_t>> by_tilt;
  for (std::size_t i = 0; i < lambdas.size(); ++i) by_tilt[detail::fermionic_tilt(N, lambdas[i][1])].push_back(i);
  std::vector<Estimate> out(lambdas.size());
  int group = 0;
  for (const auto& [tilt, idx] : by_tilt) {
    const double scale = to_double(fermionic_tilt_normaliser(N, n, m, tilt));
    if (tilt > 0) notes += "; lambda_1 = " + std::to_string(tilt) + ": importance draws weighted by prod(1-y_j)^" + std::to_string(tilt);
    std::vector<Partition> group_lambdas;
    for (auto i : idx) group_lambdas.push_back(lambdas[i]);
    const int degree = max_degree(group_lambdas);
    auto est = estimate_means(idx.size(), detail::mc_options(config, group++), [&](SeededRng& rng, cplx* res) {
      const TiltedRadial draw = sample_fermionic_radial_tilted(N, n, m, tilt, rng);
      const double weight = scale * draw.weight;
      double h[32];
      complete_of(draw.x, degree, h);
      for (std::size_t i = 0; i < group_lambdas.size(); ++i)
        res[i] = group_lambdas[i].length() > m ? 0.0 : weight * schur_from_complete<double>(group_lambdas[i], h);
    });
    for (std::size_t k = 0; k < idx.size(); ++k) out[idx[k]] = est[k];
  }
  return out;
}

CheckResult moments_over_radial(const CheckConfig& config, const std::string& regime, int N, int n, int m,
                                const std::vector<Partition>& lambdas, bool fermionic) {
  auto result = detail::make_result("check_schur_moments", regime,
                                    detail::echo(config, "check_schur_moments", N, n, m));
  std::string notes;
  const auto estimates =
      fermionic ? fermionic_moments(config, N, n, m, lambdas, notes) : truncation_moments(config, N, n, m, lambdas);
  std::vector<CheckResult> parts;
  for (std::size_t i = 0; i < lambdas.size(); ++i) {
    const Rational ref = fermionic ? rhs_schur_moment_fermionic(lambdas[i], N, n, m)
                                   : rhs_schur_moment_bosonic(lambdas[i], N, n, m);
    parts.push_back(detail::versus_value("lambda=(" + lambdas[i].to_string() + ")", estimates[i], ref,
                                         config.z_threshold));
  }
  absorb(result, std::move(parts));
  if (!notes.empty()) result.notes = notes.substr(2);
  return result;
}

}  // namespace

CheckResult check_schur_moments(const CheckConfig& config) {
  const std::string variant = config.variant.empty() ? "bosonic" : config.variant;
  const int N = pick(config.N, 4);
  const int n = pick(config.n, 2);
  const int m = pick(config.m, 1);
  require(m <= n, "check_schur_moments: need m <= n");
  std::vector<Partition> lambdas;
  if (config.lambda) {
    require(config.lambda->weight() <= 12, "check_schur_moments: |lambda| <= 12");
    lambdas.push_back(*config.lambda);
  }

  if (variant == "bosonic") {
    require(n <= N, "check_schur_moments: need m <= n <= N");
    if (lambdas.empty()) lambdas = enumerate_partitions(3, 3);
    return moments_over_radial(config, N >= n + m ? "N>=n+m" : "N<n+m", N, n, m, lambdas, false);
  }
  if (variant == "fermionic") {
    // The moment of s_lambda is finite iff lambda_1 <= N.
    std::string skipped;
    if (lambdas.empty()) {
      for (const auto& l : enumerate_partitions(3, 3)) {
        if (l[1] <= N)
          lambdas.push_back(l);
        else
          skipped += " (" + l.to_string() + ")";
      }
    } else {
      require((*config.lambda)[1] <= N, "check_schur_moments: fermionic moments need lambda_1 <= N");
    }
    auto r = moments_over_radial(config, "any N", N, n, m, lambdas, true);
    if (!skipped.empty()) r.notes += (r.notes.empty() ? "" : "; ") + std::string("skipped, infinite moment (lambda_1 > N):") + skipped;
    return r;
  }
  if (variant == "two-matrix") {
    require(n <= N, "check_schur_moments: need m <= n <= N");
    if (lambdas.empty()) lambdas = enumerate_partitions(3, 3);
    std::vector<Rational> xd, yd;
    for (int j = 1; j <= n; ++j) xd.push_back(Rational(1, j));
    for (int j = 1; j <= m; ++j) yd.push_back(Rational(m - j + 1, m));
    std::vector<cplx> xc, yc;
    for (const auto& v : xd) xc.push_back(to_double(v));
    for (const auto& v : yd) yc.push_back(to_double(v));
    const CMatrix x = diagonal(xc);
    const CMatrix y = diagonal(yc);
    auto result = detail::make_result("check_schur_moments", N >= n + m ? "N>=n+m" : "N<n+m",
                                      detail::echo(config, "check_schur_moments", N, n, m));
    result.config["matrices"]["X"] = detail::matrix_json(x);
    result.config["matrices"]["Y"] = detail::matrix_json(y);
    const int degree = max_degree(lambdas);
    const auto k = lambdas.size();
    auto estimates = estimate_means(k, detail::mc_options(config, 0), [&](SeededRng& rng, cplx* out) {
      const CMatrix q = sample_stiefel(N, m, rng).topRows(n);
      // XQYQ* has the same non-zero eigenvalues as the m x m matrix Y Q* X Q.
      const auto h = complete_of_matrix(y * q.adjoint() * x * q, degree);
      for (std::size_t i = 0; i < k; ++i) out[i] = schur_with(lambdas[i], h, m);
    });
    std::vector<CheckResult> parts;
    for (std::size_t i = 0; i < k; ++i) {
      const Rational ref =
          schur_eval(lambdas[i], xd) * schur_eval(lambdas[i], yd) / weyl_dimension(lambdas[i], N);
      parts.push_back(detail::versus_value("lambda=(" + lambdas[i].to_string() + ")", estimates[i], ref,
                                           config.z_threshold));
    }
    absorb(result, std::move(parts));
    return result;
  }
  throw std::invalid_argument("check_schur_moments: unknown variant '" + variant + "'");
}

CheckResult check_orthogonality(const CheckConfig& config) {
  const std::string variant = config.variant.empty() ? "unitary" : config.variant;
  const Partition lambda = config.lambda.value_or(Partition{2});
  require(lambda.weight() <= 4, "check_orthogonality: |lambda| <= 4");
  if (config.mu) require(config.mu->weight() <= 4, "check_orthogonality: |mu| <= 4");

  if (variant == "conjugation") {
    const int m = pick(config.m, 2);
    const CMatrix a = detail::input_matrix(config, "A", m, m, 1.0);
    const CMatrix b = detail::input_matrix(config, "B", m, m, 1.0);
    auto result = detail::make_result("check_orthogonality", "U(m)", detail::echo(config, "check_orthogonality", m, m, m));
    result.config["matrices"]["A"] = detail::matrix_json(a);
    result.config["matrices"]["B"] = detail::matrix_json(b);
    const int degree = jacobi_trudi_degree(lambda);
    const Estimate est = estimate_means(1, detail::mc_options(config, 0), [&](SeededRng& rng, cplx* out) {
                           const CMatrix u = sample_haar_unitary(m, rng);
                           out[0] = schur_with(lambda, complete_of_matrix(a * u * b * u.adjoint(), degree), m);
                         })[0];
    const cplx ref = schur_of_matrix<cplx>(lambda, a) * schur_of_matrix<cplx>(lambda, b) /
                     to_double(weyl_dimension(lambda, m));
    absorb(result, {detail::versus_value("lambda=(" + lambda.to_string() + ")", est, ref, config.z_threshold)});
    return result;
  }

  const bool truncated = variant == "truncated";
  require(truncated || variant == "unitary", "check_orthogonality: unknown variant '" + variant + "'");
  const int m = pick(config.m, 2);
  const int n = truncated ? pick(config.n, 2) : m;
  const int N = truncated ? pick(config.N, 4) : m;
  require(m <= n && n <= N, "check_orthogonality: need m <= n <= N");
  const Partition mu = config.mu.value_or(orthogonal_partner(lambda, m));

  // unitary: s(AU) conj s(BU) over U(m); truncated: s(LQ) conj s(MQ) over n x m truncations.
  const std::string sa = truncated ? "L" : "A";
  const std::string sb = truncated ? "M" : "B";
  const CMatrix a = detail::input_matrix(config, sa, m, n, 1.0);
  const CMatrix b = detail::input_matrix(config, sb, m, n, 1.0);
  auto result = detail::make_result("check_orthogonality", truncated ? (N >= n + m ? "N>=n+m" : "N<n+m") : "U(m)",
                                    detail::echo(config, "check_orthogonality", N, n, m));
  result.config["matrices"][sa] = detail::matrix_json(a);
  result.config["matrices"][sb] = detail::matrix_json(b);
  result.config["mu"] = mu.to_string();

  const int degree = std::max(jacobi_trudi_degree(lambda), jacobi_trudi_degree(mu));
  auto est = estimate_means(2, detail::mc_options(config, 0), [&](SeededRng& rng, cplx* out) {
    const CMatrix q = truncated ? CMatrix(sample_stiefel(N, m, rng).topRows(n)) : sample_haar_unitary(m, rng);
    const auto ha = complete_of_matrix(a * q, degree);
    const auto hb = complete_of_matrix(b * q, degree);
    const cplx sl = schur_with(lambda, ha, m);
    out[0] = sl * std::conj(schur_with(lambda, hb, m));
    out[1] = sl * std::conj(schur_with(mu, hb, m));
  });
  // Diagonal reference s_lambda(AB*)/s_lambda(I) (U(m)) or s_lambda(M*L)/s_lambda(I_N).
  const CMatrix pair = truncated ? CMatrix(b.adjoint() * a) : CMatrix(a * b.adjoint());
  const cplx diag_ref = schur_of_matrix<cplx>(lambda, pair) / to_double(weyl_dimension(lambda, N));
  std::vector<CheckResult> parts;
  parts.push_back(detail::versus_value("lambda=mu=(" + lambda.to_string() + ")", est[0], diag_ref, config.z_threshold));
  if (mu != lambda)
    parts.push_back(detail::versus_value("lambda=(" + lambda.to_string() + "), mu=(" + mu.to_string() + ")", est[1],
                                         cplx(0.0), config.z_threshold));
  absorb(result, std::move(parts));
  return result;
}

}  // namespace cftv
