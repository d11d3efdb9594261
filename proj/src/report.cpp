#include "cftv/report.hpp"

#include <chrono>
#include <ctime>
#include <stdexcept>

namespace cftv {

using nlohmann::json;

bool Report::pass() const {
  for (const auto& r : results)
    if (!r.pass()) return false;
  return true;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

json to_json(const CheckValue& value) {
  if (const auto* e = std::get_if<Estimate>(&value))
    return {{"mean_re", e->mean.real()}, {"mean_im", e->mean.imag()}, {"stderr", e->std_error()},
            {"stderr_re", e->se_re},     {"stderr_im", e->se_im},     {"n", e->n},
            {"seed", e->seed}};
  if (const auto* r = std::get_if<Rational>(&value)) return {{"exact", to_string(*r)}};
  const cplx c = std::get<cplx>(value);
  return {{"value_re", c.real()}, {"value_im", c.imag()}};
}

CheckValue value_from_json(const json& j) {
  if (j.contains("exact")) return parse_rational(j.at("exact").get<std::string>());
  if (j.contains("mean_re")) {
    Estimate e;
    e.mean = {j.at("mean_re").get<double>(), j.at("mean_im").get<double>()};
    e.se_re = j.at("stderr_re").get<double>();
    e.se_im = j.at("stderr_im").get<double>();
    e.n = j.at("n").get<std::int64_t>();
    e.seed = j.at("seed").get<std::uint64_t>();
    return e;
  }
  return cplx(j.at("value_re").get<double>(), j.at("value_im").get<double>());
}

namespace {

const char* kind_name(ComparisonKind k) {
  switch (k) {
    case ComparisonKind::statistical:
      return "statistical";
    case ComparisonKind::tolerance:
      return "tolerance";
    case ComparisonKind::exact:
      return "exact";
  }
  return "statistical";
}

ComparisonKind kind_from(const std::string& s) {
  if (s == "statistical") return ComparisonKind::statistical;
  if (s == "tolerance") return ComparisonKind::tolerance;
  if (s == "exact") return ComparisonKind::exact;
  throw std::invalid_argument("unknown comparison kind '" + s + "'");
}

}  // namespace

json to_json(const CheckResult& result) {
  json j;
  j["name"] = result.name;
  j["regime"] = result.regime;
  j["config"] = result.config.is_null() ? json::object() : result.config;
  j["lhs"] = to_json(result.lhs);
  j["rhs"] = to_json(result.rhs);
  j["kind"] = kind_name(result.comparison.kind);
  j["z"] = result.comparison.z;
  j["threshold"] = result.comparison.threshold;
  j["pass"] = result.pass();
  j["notes"] = result.notes;
  json subs = json::array();
  for (const auto& s : result.subchecks) subs.push_back(to_json(s));
  j["subchecks"] = std::move(subs);
  return j;
}

CheckResult result_from_json(const json& j) {
  CheckResult r;
  r.name = j.at("name").get<std::string>();
  r.regime = j.at("regime").get<std::string>();
  r.config = j.at("config");
  r.lhs = value_from_json(j.at("lhs"));
  r.rhs = value_from_json(j.at("rhs"));
  r.comparison.kind = kind_from(j.at("kind").get<std::string>());
  r.comparison.z = j.at("z").get<double>();
  r.comparison.threshold = j.at("threshold").get<double>();
  r.comparison.pass = j.at("pass").get<bool>();
  r.notes = j.at("notes").get<std::string>();
  for (const auto& s : j.at("subchecks")) r.subchecks.push_back(result_from_json(s));
  return r;
}

json to_json(const Report& report) {
  json j;
  j["schema"] = report.schema;
  j["version"] = report.tool_version;
  j["timestamp"] = report.timestamp;
  j["config"] = report.config;
  json results = json::array();
  for (const auto& r : report.results) results.push_back(to_json(r));
  j["results"] = std::move(results);
  j["pass"] = report.pass();
  return j;
}

Report report_from_json(const json& j) {
  if (!j.contains("schema") || !j.at("schema").is_number_integer() || j.at("schema").get<int>() != kReportSchema)
    throw std::invalid_argument("report: unsupported schema version");
  Report r;
  r.schema = j.at("schema").get<int>();
  r.tool_version = j.at("version").get<std::string>();
  r.timestamp = j.at("timestamp").get<std::string>();
  r.config = j.at("config");
  for (const auto& s : j.at("results")) r.results.push_back(result_from_json(s));
  return r;
}

}  // namespace cftv
