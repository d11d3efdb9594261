#include "check_support.hpp"

#include "cftv/closed_forms.hpp"
#include "cftv/ensembles.hpp"
#include "cftv/symmetric.hpp"

namespace cftv {

namespace {

using detail::pick;
using detail::require;

std::string label(const std::string& what, const Partition& lambda) {
  return what + " lambda=(" + lambda.to_string() + ")";
}

Rational exact_value(const ClosedFormValue& v) {
  if (!v.exact) throw std::logic_error("closed form: exact value missing for integer parameters");
  return *v.exact;
}

// Product form against both determinant forms.
void three_routes(std::vector<CheckResult>& parts, const std::string& tag, const Partition& lambda, int p, int q,
                  int m, bool fermionic) {
  auto eval = [&](Derivation d) {
    return exact_value(fermionic ? schur_selberg_fermionic(lambda, p, q, m, d) : schur_selberg_bosonic(lambda, p, q, m, d));
  };
  const Rational product = eval(Derivation::product_form);
  const std::string where = " (p,q)=(" + std::to_string(p) + "," + std::to_string(q) + ")";
  parts.push_back(detail::exactly_equal(label(tag + " product vs gram", lambda) + where, product,
                                        eval(Derivation::gram_determinant)));
  parts.push_back(detail::exactly_equal(label(tag + " product vs reduced gram", lambda) + where, product,
                                        eval(Derivation::reduced_gram)));
}

}  // namespace

CheckResult check_selberg(const CheckConfig& config) {
  const std::string variant = config.variant.empty() ? "both" : config.variant;
  require(variant == "both" || variant == "bosonic" || variant == "fermionic",
          "check_selberg: unknown variant '" + variant + "'");
  const bool explicit_dims = config.N > 0 || config.n > 0 || config.m > 0;
  auto result = detail::make_result("check_selberg", "integer p, q",
                                    detail::echo(config, "check_selberg", config.N, config.n, config.m));
  std::vector<CheckResult> parts;

  if (variant != "fermionic") {
    const int N = pick(config.N, 6);
    const int n = pick(config.n, 2);
    const int m = pick(config.m, 2);
    require(m <= n && N >= n + m, "check_selberg: bosonic weight needs m <= n and N >= n + m");
    const Partition lambda = config.lambda.value_or(Partition{2});
    const int p = n - m + 1;
    const int q = N - n - m + 1;
    for (const auto& l : enumerate_partitions(3, m)) three_routes(parts, "bosonic", l, p, q, m, false);
    const Rational mass = exact_value(schur_selberg_bosonic(Partition{}, p, q, m));
    parts.push_back(detail::exactly_equal("bosonic mass vs c^N_{n,m}", mass, selberg_constant_bosonic(N, n, m)));
    const Rational ratio = exact_value(schur_selberg_bosonic(lambda, p, q, m)) / mass;
    parts.push_back(detail::exactly_equal(label("bosonic ratio vs Weyl-dimension moment", lambda), ratio,
                                          rhs_schur_moment_bosonic(lambda, N, n, m)));
    if (lambda.length() <= m)
      parts.push_back(detail::exactly_equal(label("Weyl-dimension moment vs s(1_n)/beta", lambda),
                                            rhs_schur_moment_bosonic(lambda, N, n, m),
                                            weyl_dimension(lambda, n) / hua_coeff_bosonic(lambda, Rational(N), m)));

    const Estimate est = estimate_means(1, detail::mc_options(config, 0), [&](SeededRng& rng, cplx* out) {
                           const RadialSample x = sample_jacobi_radial(n - m, N - n - m, m, rng);
                           out[0] = schur_eval(lambda, Spectrum<double>(x.data(), x.data() + x.size()));
                         })[0];
    parts.push_back(detail::versus_value(label("Jacobi average of s_lambda vs closed-form ratio", lambda), est, ratio,
                                         config.z_threshold));
  }

  if (variant != "bosonic") {
    const int N = explicit_dims ? pick(config.N, 3) : 3;
    const int n = explicit_dims ? pick(config.n, 1) : 1;
    const int m = explicit_dims ? pick(config.m, 1) : 1;
    require(m <= n, "check_selberg: fermionic weight needs m <= n");
    const Partition lambda = variant == "fermionic" ? config.lambda.value_or(Partition{1}) : Partition{1};
    require(lambda[1] <= N, "check_selberg: fermionic moments need lambda_1 <= N");
    const int p = n - m + 1;
    const int q = N + 1;
    for (const auto& l : enumerate_partitions(3, m))
      if (l[1] <= N) three_routes(parts, "fermionic", l, p, q, m, true);
    const Rational mass = exact_value(schur_selberg_fermionic(Partition{}, p, q, m));
    parts.push_back(detail::exactly_equal("fermionic mass vs k^N_{n,m}", mass, selberg_constant_fermionic(N, n, m)));
    const Rational ratio = exact_value(schur_selberg_fermionic(lambda, p, q, m)) / mass;
    parts.push_back(detail::exactly_equal(label("fermionic ratio vs conjugate Weyl-dimension moment", lambda), ratio,
                                          rhs_schur_moment_fermionic(lambda, N, n, m)));
    const int tilt = detail::fermionic_tilt(N, lambda[1]);
    const double scale = to_double(fermionic_tilt_normaliser(N, n, m, tilt));
    const Estimate est = estimate_means(1, detail::mc_options(config, 1), [&](SeededRng& rng, cplx* out) {
                           const TiltedRadial draw = sample_fermionic_radial_tilted(N, n, m, tilt, rng);
                           out[0] = scale * draw.weight *
                                    schur_eval(lambda, Spectrum<double>(draw.x.data(), draw.x.data() + draw.x.size()));
                         })[0];
    if (tilt > 0) result.notes = "fermionic average uses importance draws weighted by prod(1-y_j)^" + std::to_string(tilt);
    parts.push_back(detail::versus_value(label("fermionic average of s_lambda vs closed-form ratio", lambda), est,
                                         ratio, config.z_threshold));
  }
  absorb(result, std::move(parts));
  return result;
}

}  // namespace cftv
