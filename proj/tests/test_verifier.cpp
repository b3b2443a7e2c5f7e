#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "crfe/verifier.hpp"

using namespace crfe;

namespace {

std::string without_timing(const Report& r) {
  Json j = to_json(r);
  j["elapsed_ms"] = 0;
  return j.dump();
}

std::set<std::string> names(const Report& r) {
  std::set<std::string> out;
  for (const auto& c : r.checks) out.insert(c.name);
  return out;
}

}  // namespace

TEST_CASE("check recorder keeps the first witness") {
  CheckRecorder rec("demo", {{"mesh", "m"}, {"d", 2}, {"k", 1}});
  CHECK(!rec.failed());
  rec.fail({{"value", rational_json(Rational(1, 3))}});
  rec.fail({{"value", rational_json(Rational(2))}});
  const Check c = rec.finish();
  CHECK(c.status == CheckStatus::Fail);
  REQUIRE(c.witness.has_value());
  CHECK((*c.witness)["value"] == "1/3");
  CHECK((*c.witness)["failures"] == 2);

  CheckRecorder skip("demo", Json::object());
  skip.skip("nothing to do");
  const Check s = skip.finish();
  CHECK(s.status == CheckStatus::Skipped);
  CHECK((*s.witness)["reason"] == "nothing to do");
}

TEST_CASE("report serialization round trip") {
  Report r;
  r.mesh = "gen-2D";
  r.elapsed_ms = 12.5;
  r.checks.push_back({"a", {{"mesh", "gen-2D"}, {"d", 2}, {"k", 3}}, CheckStatus::Pass, std::nullopt});
  r.checks.push_back({"b", {{"extra", Json::array({1, 2})}}, CheckStatus::Fail,
                      Json{{"moment", rational_json(Rational(Integer("123456789012345678901234567"), 7))}}});
  r.checks.push_back({"c", Json::object(), CheckStatus::Skipped, Json{{"reason", "why"}}});
  const Json j = to_json(r);
  CHECK(j["version"] == kVersion);
  const Report back = report_from_json(Json::parse(j.dump()));
  CHECK(to_json(back).dump() == j.dump());
  // Key order is stable.
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"version", "mesh", "checks", "elapsed_ms"});

  CHECK_THROWS_AS(report_from_json(Json::parse(R"({"version": 1})")), ParseError);
  CHECK_THROWS_AS(parse_check_status("maybe"), ParseError);
}

TEST_CASE("suite is deterministic and passes") {
  const auto meshes = default_meshes();
  SuiteOptions opt;
  opt.k_max = 2;
  const Report a = run_suite(meshes, opt);
  const Report b = run_suite(meshes, opt);
  CHECK(without_timing(a) == without_timing(b));
  CHECK(a.passed());
  CHECK(a.count(CheckStatus::Fail) == 0);
  for (const auto& c : a.checks)
    if (c.status == CheckStatus::Skipped) CHECK(c.name == "restricted_trace_independence");
}

TEST_CASE("name prefix filter") {
  const auto meshes = default_meshes();
  SuiteOptions opt;
  opt.filter = "det_";
  const Report r = run_suite(meshes, opt);
  CHECK(names(r) == std::set<std::string>{"det_Q_formula", "det_Q_regular", "det_R_formula"});
  CHECK(r.checks.size() == 3);
  opt.filter = "no_such_check";
  CHECK(run_suite(meshes, opt).checks.empty());
}

TEST_CASE("every check family has a failing negative control") {
  const Report neg = run_negative_controls();
  REQUIRE(!neg.checks.empty());
  for (const auto& c : neg.checks) {
    CAPTURE(c.name);
    CHECK(c.status == CheckStatus::Fail);
    CHECK(c.witness.has_value());
  }
  SuiteOptions opt;
  opt.k_max = 3;
  const Report all = run_suite(default_meshes(), opt);
  const auto covered = names(neg);
  for (const auto& n : names(all)) {
    CAPTURE(n);
    CHECK(covered.count(n) == 1);
  }
  // The filter applies to the controls too.
  for (const auto& c : run_negative_controls("det_").checks) CHECK(c.name.starts_with("det_"));
}
