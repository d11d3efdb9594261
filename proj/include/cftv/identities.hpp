#pragma once

#include "cftv/linalg.hpp"
#include "cftv/montecarlo.hpp"
#include "cftv/partition.hpp"
#include "cftv/rational.hpp"

#include <json.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace cftv {

inline constexpr std::uint64_t kDefaultSeed = 12345;
inline constexpr std::int64_t kDefaultSamples = 200000;

/// Sample count used when a config leaves `samples` at 0; the environment
/// variable CFTV_DEFAULT_SAMPLES overrides the built-in 2e5.
std::int64_t default_samples();

/// Seed of the repeat run every check performs.
std::uint64_t second_seed(std::uint64_t seed);

/// Inputs of a check.  Zero dimensions and empty optionals select the check's
/// own defaults; every check validates its parameter regime before sampling.
struct CheckConfig {
  std::string variant;
  int N = 0;
  int n = 0;
  int m = 0;
  std::optional<Partition> lambda;
  std::optional<Partition> mu;
  /// Explicit matrix inputs by symbol (A, B, X, Y, L, M, Z1, Z2), overriding the preset.
  std::map<std::string, CMatrix> matrices;
  std::string preset = "default";
  /// Named scalar parameters (eps, t, a, ...).
  std::map<std::string, double> scalars;
  std::int64_t samples = 0;
  std::uint64_t seed = kDefaultSeed;
  double z_threshold = kDefaultZ;
  int series_cutoff = 30;
  /// 0 selects the hardware concurrency.
  int shards = 0;
};

/// A Monte Carlo estimate, an exact rational, or a deterministic complex number.
using CheckValue = std::variant<Estimate, Rational, cplx>;

struct CheckResult {
  std::string name;
  std::string regime;
  nlohmann::json config;
  CheckValue lhs = cplx{};
  CheckValue rhs = cplx{};
  Comparison comparison;
  std::string notes;
  std::vector<CheckResult> subchecks;

  bool pass() const { return comparison.pass; }
};

/// Folds sub-results into `parent`: the parent comparison becomes the worst of
/// its own and all children, and the first child's values fill unset sides.
void absorb(CheckResult& parent, std::vector<CheckResult> children);

struct CheckInfo {
  std::string name;
  std::string tag;
  std::string regime;
  std::function<CheckResult(const CheckConfig&)> run;
};

/// All checks, sorted by name.
const std::vector<CheckInfo>& check_registry();
const CheckInfo* find_check(std::string_view name);

/// Runs a check at config.seed and at second_seed(config.seed); passes iff both do.
CheckResult run_check(const std::string& name, const CheckConfig& config);

/// Runs each named check in order.  Unknown names produce a failing result
/// whose notes say so.
std::vector<CheckResult> run_suite(const std::vector<std::string>& names, const CheckConfig& config);

CheckResult check_bcft(const CheckConfig& config);
CheckResult check_bcft_invariance(const CheckConfig& config);
CheckResult check_ww_alternative(const CheckConfig& config);
CheckResult check_bessel_determinant(const CheckConfig& config);
CheckResult check_schur_moments(const CheckConfig& config);
CheckResult check_orthogonality(const CheckConfig& config);
CheckResult check_resolvent_expansion(const CheckConfig& config);
CheckResult check_charpoly_expansion(const CheckConfig& config);
CheckResult check_berezin(const CheckConfig& config);
CheckResult check_selberg(const CheckConfig& config);
CheckResult check_series_expansions(const CheckConfig& config);
CheckResult check_deformed(const CheckConfig& config);

}  // namespace cftv
