#include "check_support.hpp"

#include "cftv/presets.hpp"

#include <cstdlib>
#include <thread>

namespace cftv {

std::int64_t default_samples() {
  if (const char* env = std::getenv("CFTV_DEFAULT_SAMPLES")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && v >= 100) return v;
  }
  return kDefaultSamples;
}

std::uint64_t second_seed(std::uint64_t seed) { return seed + 1; }

void absorb(CheckResult& parent, std::vector<CheckResult> children) {
  for (auto& child : children) {
    if (parent.subchecks.empty()) {
      parent.lhs = child.lhs;
      parent.rhs = child.rhs;
      parent.comparison = child.comparison;
    } else {
      parent.comparison = worst(parent.comparison, child.comparison);
    }
    parent.subchecks.push_back(std::move(child));
  }
}

namespace detail {

McOptions mc_options(const CheckConfig& config, int estimate_index) {
  McOptions opt;
  opt.samples = config.samples > 0 ? config.samples : default_samples();
  opt.seed = config.seed;
  opt.shards = config.shards > 0 ? config.shards
                                 : static_cast<int>(std::max(1u, std::min(8u, std::thread::hardware_concurrency())));
  opt.stream_offset = static_cast<std::uint64_t>(estimate_index) << 40;
  return opt;
}

CMatrix input_matrix(const CheckConfig& config, const std::string& symbol, int rows, int cols, double norm) {
  auto it = config.matrices.find(symbol);
  if (it == config.matrices.end()) return preset_matrix(config.preset, symbol, rows, cols, norm);
  require(it->second.rows() == rows && it->second.cols() == cols,
          "matrix " + symbol + " must be " + std::to_string(rows) + "x" + std::to_string(cols));
  return it->second;
}

nlohmann::json matrix_json(const CMatrix& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back({a(i, j).real(), a(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::json echo(const CheckConfig& config, const std::string& name, int N, int n, int m) {
  nlohmann::json j;
  j["name"] = name;
  j["variant"] = config.variant;
  j["N"] = N;
  j["n"] = n;
  j["m"] = m;
  if (config.lambda) j["lambda"] = config.lambda->to_string();
  if (config.mu) j["mu"] = config.mu->to_string();
  j["preset"] = config.preset;
  j["samples"] = config.samples > 0 ? config.samples : default_samples();
  j["seed"] = config.seed;
  j["z_threshold"] = config.z_threshold;
  j["series_cutoff"] = config.series_cutoff;
  nlohmann::json scalars = nlohmann::json::object();
  for (const auto& [k, v] : config.scalars) scalars[k] = v;
  j["scalars"] = scalars;
  j["matrices"] = nlohmann::json::object();
  return j;
}

cplx as_complex(const CheckValue& v) {
  if (const auto* e = std::get_if<Estimate>(&v)) return e->mean;
  if (const auto* r = std::get_if<Rational>(&v)) return {to_double(*r), 0.0};
  return std::get<cplx>(v);
}

CheckResult versus_value(const std::string& name, const Estimate& lhs, const CheckValue& rhs, double z_threshold) {
  CheckResult r;
  r.name = name;
  r.lhs = lhs;
  r.rhs = rhs;
  r.comparison = compare(lhs, as_complex(rhs), z_threshold);
  return r;
}

CheckResult versus_estimate(const std::string& name, const Estimate& lhs, const Estimate& rhs, double z_threshold) {
  CheckResult r;
  r.name = name;
  r.lhs = lhs;
  r.rhs = rhs;
  r.comparison = compare(lhs, rhs, z_threshold);
  return r;
}

CheckResult within_tolerance(const std::string& name, cplx lhs, cplx rhs, double tol) {
  CheckResult r;
  r.name = name;
  r.lhs = lhs;
  r.rhs = rhs;
  r.comparison = compare_tolerance(lhs, rhs, tol);
  return r;
}

CheckResult exactly_equal(const std::string& name, const Rational& lhs, const Rational& rhs) {
  CheckResult r;
  r.name = name;
  r.lhs = lhs;
  r.rhs = rhs;
  r.comparison = compare_exact(lhs == rhs);
  return r;
}

CheckResult make_result(const std::string& name, const std::string& regime, nlohmann::json config) {
  CheckResult r;
  r.name = name;
  r.regime = regime;
  r.config = std::move(config);
  return r;
}

}  // namespace detail
}  // namespace cftv
