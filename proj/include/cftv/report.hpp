#pragma once

#include "cftv/identities.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace cftv {

inline constexpr const char* kToolVersion = "0.1.0";
/// Schema version written into every report; parsing rejects any other value.
inline constexpr int kReportSchema = 1;

struct Report {
  int schema = kReportSchema;
  std::string tool_version = kToolVersion;
  std::string timestamp;
  nlohmann::json config = nlohmann::json::object();
  std::vector<CheckResult> results;

  bool pass() const;
};

/// UTC time as "YYYY-MM-DDTHH:MM:SSZ".
std::string utc_timestamp();

nlohmann::json to_json(const CheckValue& value);
CheckValue value_from_json(const nlohmann::json& j);

nlohmann::json to_json(const CheckResult& result);
CheckResult result_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Report& report);
/// Throws std::invalid_argument on a missing or different schema version.
Report report_from_json(const nlohmann::json& j);

}  // namespace cftv
