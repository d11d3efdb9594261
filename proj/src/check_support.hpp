#pragma once

// Shared plumbing for the check implementations.

#include "cftv/identities.hpp"
#include "cftv/montecarlo.hpp"

#include <json.hpp>

#include <stdexcept>
#include <string>

namespace cftv::detail {

inline int pick(int value, int fallback) { return value > 0 ? value : fallback; }

inline void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

/// Options for the k-th independent estimate inside one check run.
McOptions mc_options(const CheckConfig& config, int estimate_index);

/// Explicit matrix from the config, or the preset one.
CMatrix input_matrix(const CheckConfig& config, const std::string& symbol, int rows, int cols, double norm);

nlohmann::json matrix_json(const CMatrix& a);

/// Config echo with the effective dimensions filled in.
nlohmann::json echo(const CheckConfig& config, const std::string& name, int N, int n, int m);

cplx as_complex(const CheckValue& v);

CheckResult versus_value(const std::string& name, const Estimate& lhs, const CheckValue& rhs, double z_threshold);
CheckResult versus_estimate(const std::string& name, const Estimate& lhs, const Estimate& rhs, double z_threshold);
CheckResult within_tolerance(const std::string& name, cplx lhs, cplx rhs, double tol);
CheckResult exactly_equal(const std::string& name, const Rational& lhs, const Rational& rhs);

/// Fresh parent result carrying the echo and regime.
CheckResult make_result(const std::string& name, const std::string& regime, nlohmann::json config);

/// Tilt for a fermionic average of an integrand growing like x^degree per
/// eigenvalue: 0 while the plain estimator has finite variance (2 degree <= N),
/// otherwise degree, which makes the reweighted integrand bounded.
inline int fermionic_tilt(int N, int degree) { return 2 * degree <= N ? 0 : degree; }

/// Reruns `estimate(samples)` with doubled sample counts (at most three times)
/// while stderr / |reference| exceeds 0.25.  Appends a note when it triggers.
template <class Estimator>
Estimate guarded(Estimator&& estimate, std::int64_t samples, double reference_magnitude, std::string& notes) {
  Estimate e = estimate(samples);
  for (int round = 0; round < 3 && e.std_error() > 0.25 * reference_magnitude; ++round) {
    samples *= 2;
    notes += "variance guard: raised samples to " + std::to_string(samples) + "; ";
    e = estimate(samples);
  }
  return e;
}

}  // namespace cftv::detail
