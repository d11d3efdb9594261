#include "cftv/cli.hpp"
#include "cftv/report.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <sstream>

using namespace cftv;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    bool quoted = false;
    for (char ch : line) {
      if (ch == '"') {
        quoted = !quoted;
      } else if (ch == ',' && !quoted) {
        cells.push_back(cell);
        cell.clear();
      } else {
        cell += ch;
      }
    }
    cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST_CASE("list") {
  const Run r = run({"list"});
  CHECK(r.code == kExitPass);
  std::vector<std::string> names;
  std::istringstream in(r.out);
  std::string line;
  while (std::getline(in, line)) names.push_back(line.substr(0, line.find('\t')));
  CHECK(names.size() == 12);
  CHECK(std::is_sorted(names.begin(), names.end()));
  CHECK(std::find(names.begin(), names.end(), "check_bcft") != names.end());
}

TEST_CASE("verify writes a passing report") {
  const Run r = run({"verify", "check_berezin", "--N", "4", "--n", "1", "--m", "1", "--samples", "200000", "--seed", "7"});
  CHECK(r.code == kExitPass);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("pass") == true);
  CHECK(j.at("schema") == kReportSchema);
  CHECK(j.at("config").at("seed") == 7);
  REQUIRE(j.at("results").size() == 1);
  CHECK(j.at("results")[0].at("name") == "check_berezin");
}

TEST_CASE("verify records the default seed") {
  const Run r = run({"verify", "check_selberg", "--variant", "bosonic"});
  CHECK(r.code == kExitPass);
  CHECK(nlohmann::json::parse(r.out).at("config").at("seed") == 12345);
}

TEST_CASE("verify parses partitions") {
  const Run r = run({"verify", "check_schur_moments", "--lambda", "2,1", "--N", "5", "--n", "3", "--m", "2",
                     "--samples", "20000"});
  CHECK(r.code == kExitPass);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("config").at("lambda") == "2,1");
  CHECK(j.at("results")[0].at("config").at("lambda") == "2,1");
}

TEST_CASE("configuration errors exit with 2") {
  CHECK(run({"verify", "check_nothing"}).code == kExitConfigError);
  CHECK(run({"verify", "check_schur_moments", "--lambda", "1,2"}).code == kExitConfigError);
  CHECK(run({"verify", "check_bcft", "--N", "2", "--m", "3"}).code == kExitConfigError);
  CHECK(run({"frobnicate"}).code == kExitConfigError);
  CHECK(run({}).code == kExitConfigError);
  CHECK(run({"sample", "haar", "--N", "0"}).code == kExitConfigError);
  CHECK(run({"sample", "nonsense"}).code == kExitConfigError);
  CHECK(run({"table", "weyl", "--max-weight", "9"}).code == kExitConfigError);
  CHECK(run({"table", "hua-b", "--m", "5"}).code == kExitConfigError);
  const Run bad = run({"verify", "check_nothing"});
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("sample haar") {
  const Run r = run({"sample", "haar", "--N", "2", "--count", "3", "--seed", "1"});
  CHECK(r.code == kExitPass);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0][0] == "re_1_1");
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].size() == 8);
  // Unit columns.
  for (std::size_t i = 1; i < rows.size(); ++i) {
    double col = 0.0;
    for (int k = 0; k < 4; ++k) col += std::pow(std::stod(rows[i][k]), 2.0);
    CHECK(col == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(run({"sample", "haar", "--N", "2", "--count", "3", "--seed", "1"}).out == r.out);
  CHECK(run({"sample", "haar", "--N", "2", "--count", "3", "--seed", "2"}).out != r.out);
}

TEST_CASE("sample truncation pins one value") {
  const Run r = run({"sample", "truncation", "--N", "3", "--n", "2", "--m", "2", "--count", "20", "--seed", "4"});
  CHECK(r.code == kExitPass);
  const auto rows = csv_rows(r.out);
  REQUIRE(rows.size() == 21);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    int ones = 0;
    for (const auto& cell : rows[i]) ones += std::fabs(std::stod(cell) - 1.0) <= 1e-10;
    CHECK(ones == 1);
  }
}

TEST_CASE("other ensembles") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"sample", "su", "--N", "3", "--count", "2"},
        {"sample", "fermionic", "--N", "3", "--n", "2", "--m", "1", "--count", "2"},
        {"sample", "jacobi-radial", "--a", "1", "--b", "2", "--m", "2", "--count", "2"},
        {"sample", "boundary", "--N", "3", "--m", "2", "--count", "2"}}) {
    const Run r = run(args);
    CHECK(r.code == kExitPass);
    CHECK(csv_rows(r.out).size() == 3);
  }
}

TEST_CASE("tables") {
  auto value_of = [](const std::string& text) { return csv_rows(text).at(1).back(); };
  CHECK(value_of(run({"table", "weyl", "--lambda", "2,1", "--n", "5"}).out) == "40");
  CHECK(value_of(run({"table", "exp-coeff", "--lambda", "1,1"}).out) == "1/2");
  CHECK(value_of(run({"table", "selberg-b", "--lambda", "1", "--p", "1", "--q", "1", "--m", "2"}).out) == "1/6");
  CHECK(value_of(run({"table", "hua-b", "--lambda", "1", "--a", "5/2", "--m", "2"}).out) == "5/4");
  CHECK(value_of(run({"table", "hua-f", "--lambda", "2", "--a", "1", "--m", "1"}).out) == "0");
  const auto rows = csv_rows(run({"table", "exp-coeff", "--max-weight", "3"}).out);
  CHECK(rows.size() == 1 + 7);
  const auto j = nlohmann::json::parse(run({"table", "weyl", "--max-weight", "2", "--n", "3", "--format", "json"}).out);
  REQUIRE(j.size() == 4);
  CHECK(j[2].at("lambda") == "2");
  CHECK(j[2].at("value") == "6");
}

TEST_CASE("report round trip") {
  const Run r = run({"verify", "check_charpoly_expansion", "check_selberg", "--samples", "20000"});
  REQUIRE(r.code == kExitPass);
  const auto j = nlohmann::json::parse(r.out);
  const Report rep = report_from_json(j);
  CHECK(rep.results.size() == 2);
  CHECK(rep.pass());
  CHECK(to_json(rep) == j);
  CHECK(to_json(report_from_json(to_json(rep))) == to_json(rep));
  nlohmann::json other = j;
  other["schema"] = kReportSchema + 1;
  CHECK_THROWS(report_from_json(other));
  other.erase("schema");
  CHECK_THROWS(report_from_json(other));
}

TEST_CASE("environment default sample count") {
  setenv("CFTV_DEFAULT_SAMPLES", "5000", 1);
  const Run r = run({"verify", "check_berezin"});
  unsetenv("CFTV_DEFAULT_SAMPLES");
  CHECK(r.code != kExitConfigError);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("results")[0].at("subchecks")[0].at("lhs").at("n") >= 5000);
}

TEST_CASE("repeated scalar options before check names") {
  const Run r = run({"verify", "--scalar", "z1=0.5", "--scalar", "z2=0.5", "check_berezin", "--variant", "bosonic",
                     "--samples", "20000"});
  CHECK(r.code == kExitPass);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("results")[0].at("name") == "check_berezin");
  CHECK(run({"verify", "--scalar", "z1", "check_berezin"}).code == kExitConfigError);
}
