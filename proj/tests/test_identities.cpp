#include "cftv/identities.hpp"

#include <doctest.h>

#include <algorithm>

using namespace cftv;

namespace {

CheckConfig small_config() {
  CheckConfig c;
  c.samples = 20000;
  c.shards = 1;
  return c;
}

}  // namespace

TEST_CASE("registry") {
  const auto& reg = check_registry();
  REQUIRE(reg.size() == 12);
  CHECK(std::is_sorted(reg.begin(), reg.end(), [](const auto& a, const auto& b) { return a.name < b.name; }));
  for (const auto& info : reg) {
    CHECK_FALSE(info.tag.empty());
    CHECK_FALSE(info.regime.empty());
    CHECK(find_check(info.name) == &info);
  }
  CHECK(find_check("check_nothing") == nullptr);
  CHECK(second_seed(12345) != 12345);
}

TEST_CASE("suites") {
  CHECK(run_suite({}, small_config()).empty());
  const auto r = run_suite({"check_nothing"}, small_config());
  REQUIRE(r.size() == 1);
  CHECK_FALSE(r[0].pass());
  CHECK(r[0].notes.find("unknown check") != std::string::npos);
}

TEST_CASE("zero matrices give exact agreement") {
  CheckConfig c = small_config();
  c.preset = "zero";
  for (const std::string name : {"check_bcft", "check_resolvent_expansion"}) {
    CAPTURE(name);
    const CheckResult r = run_check(name, c);
    CHECK(r.pass());
    CHECK(r.comparison.z <= 1e-3);
  }
  // The fermionic side carries importance weights, so it stays statistical.
  CHECK(run_check("check_charpoly_expansion", c).pass());
}

TEST_CASE("bCFT regime dispatch") {
  CheckConfig c = small_config();
  c.N = 4;
  c.m = 1;
  CHECK(check_bcft(c).regime == "N>=2m");
  c.m = 3;
  CHECK(check_bcft(c).regime == "N<2m<2N");
  c.m = 4;
  CHECK(check_bcft(c).regime == "m=N");
  c.m = 5;
  CHECK_THROWS(check_bcft(c));
}

TEST_CASE("runs are deterministic") {
  CheckConfig c = small_config();
  const CheckResult a = run_check("check_schur_moments", c);
  c.shards = 3;
  const CheckResult b = run_check("check_schur_moments", c);
  REQUIRE(std::holds_alternative<Estimate>(a.lhs));
  CHECK(std::get<Estimate>(a.lhs).mean == std::get<Estimate>(b.lhs).mean);
  CHECK(a.comparison.z == b.comparison.z);
  CHECK(a.subchecks.size() == 2);
}

TEST_CASE("Berezin defaults pass") {
  CheckConfig c = small_config();
  c.samples = 0;
  const CheckResult r = run_check("check_berezin", c);
  CHECK(r.pass());
}

TEST_CASE("exact checks pass") {
  CheckConfig c = small_config();
  c.variant = "bosonic";
  CHECK(run_check("check_selberg", c).pass());
  CHECK(run_check("check_series_expansions", small_config()).pass());
}

TEST_CASE("parameter regime violations are rejected") {
  CheckConfig c = small_config();
  c.N = 3;
  c.n = 2;
  c.m = 2;
  c.variant = "bosonic";
  CHECK_THROWS(check_berezin(c));
  CheckConfig d = small_config();
  d.N = 3;
  d.m = 2;
  CHECK_THROWS(check_bessel_determinant(d));
  CheckConfig e = small_config();
  e.N = 2;
  e.n = 3;
  e.m = 1;
  CHECK_THROWS(check_schur_moments(e));
  CheckConfig f = small_config();
  f.variant = "fermionic";
  f.N = 2;
  f.n = f.m = 1;
  f.lambda = Partition{3};
  CHECK_THROWS(check_schur_moments(f));
  CheckConfig g = small_config();
  g.m = 2;
  CHECK_THROWS(check_deformed(g));
  CheckConfig h = small_config();
  h.variant = "no-such-variant";
  CHECK_THROWS(check_berezin(h));
}
