#include "cftv/identities.hpp"

#include <algorithm>
#include <stdexcept>

namespace cftv {

const std::vector<CheckInfo>& check_registry() {
  static const std::vector<CheckInfo> registry = [] {
    std::vector<CheckInfo> r{
        {"check_bcft", "bosonic colour-flavour transformation", "N>=2m | N<2m<2N | m=N", check_bcft},
        {"check_bcft_invariance", "group integral depends only on the product spectrum", "N>=2m | N<2m<2N | m=N",
         check_bcft_invariance},
        {"check_berezin", "Berezin kernel reproducing property", "bosonic N>=n+m | fermionic any N", check_berezin},
        {"check_bessel_determinant", "oscillatory group integral as a Bessel determinant", "N>=2m",
         check_bessel_determinant},
        {"check_charpoly_expansion", "characteristic-polynomial average and fermionic radial law", "any N, m, n",
         check_charpoly_expansion},
        {"check_deformed", "deformed bosonic transformation at m=1", "m=1", check_deformed},
        {"check_orthogonality", "Schur orthogonality over U(m) and truncations", "m<=n<=N", check_orthogonality},
        {"check_resolvent_expansion", "inverse-determinant average and Jacobi radial law", "m,n<=N",
         check_resolvent_expansion},
        {"check_schur_moments", "Schur moments of truncations and the fermionic measure", "m<=n<=N | any N",
         check_schur_moments},
        {"check_selberg", "Schur-Selberg integrals, product vs Gram forms", "N>=n+m | any N", check_selberg},
        {"check_series_expansions", "Schur expansions of multiplicative functionals", "spectral radius <= 0.5",
         check_series_expansions},
        {"check_ww_alternative", "U(m) form of the bosonic transformation and SU(N)", "m<=N", check_ww_alternative},
    };
    std::sort(r.begin(), r.end(), [](const CheckInfo& a, const CheckInfo& b) { return a.name < b.name; });
    return r;
  }();
  return registry;
}

const CheckInfo* find_check(std::string_view name) {
  for (const auto& info : check_registry())
    if (info.name == name) return &info;
  return nullptr;
}

CheckResult run_check(const std::string& name, const CheckConfig& config) {
  const CheckInfo* info = find_check(name);
  if (!info) throw std::invalid_argument("unknown check '" + name + "'");
  CheckConfig second = config;
  second.seed = second_seed(config.seed);
  CheckResult first_run = info->run(config);
  CheckResult second_run = info->run(second);

  CheckResult combined;
  combined.name = name;
  combined.regime = first_run.regime;
  combined.config = first_run.config;
  combined.notes = first_run.notes;
  first_run.name = "seed=" + std::to_string(config.seed);
  second_run.name = "seed=" + std::to_string(second.seed);
  absorb(combined, {std::move(first_run), std::move(second_run)});
  return combined;
}

std::vector<CheckResult> run_suite(const std::vector<std::string>& names, const CheckConfig& config) {
  std::vector<CheckResult> out;
  for (const auto& name : names) {
    if (!find_check(name)) {
      CheckResult r;
      r.name = name;
      r.notes = "unknown check";
      r.comparison = compare_exact(false);
      out.push_back(std::move(r));
      continue;
    }
    out.push_back(run_check(name, config));
  }
  return out;
}

}  // namespace cftv
