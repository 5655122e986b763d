#include <doctest.h>

#include "workbench/error.hpp"
#include "workbench/suite.hpp"

using namespace wb::workbench;

namespace {

std::string usage_message(const Json& j) {
  try {
    SuiteConfig::from_json(j);
  } catch (const wb::Error& e) {
    if (e.code() == wb::Errc::usage) return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("default configuration selects every check") {
  const auto c = SuiteConfig::defaults();
  CHECK(c.checks == known_checks());
  CHECK(known_checks().size() == 9);
  CHECK(SuiteConfig::from_json(c.to_json()).to_json() == c.to_json());
}

TEST_CASE("malformed configurations name the offending pointer") {
  CHECK(usage_message(Json::array()).find("config /:") == 0);
  CHECK(usage_message({{"checks", {"signs", "nope"}}}).find("/checks") != std::string::npos);
  CHECK(usage_message({{"seed", -3}}).find("/seed") != std::string::npos);
  CHECK(usage_message({{"tol", 0}}).find("/tol") != std::string::npos);
  CHECK(usage_message({{"schema", 2}}).find("/schema") != std::string::npos);
  CHECK(usage_message({{"colour", 1}}).find("/colour") != std::string::npos);
  CHECK(usage_message({{"options", {{"signs", 3}}}}).find("/options/signs") != std::string::npos);
  CHECK_THROWS_AS(run_suite(SuiteConfig::from_json({{"checks", {"signs"}}, {"options", {{"signs", {{"d_max", "x"}}}}}})),
                  wb::Error);
}

TEST_CASE("selected checks only") {
  const auto rep = run_suite(SuiteConfig::from_json({{"checks", {"signs"}}}));
  REQUIRE(rep.checks.size() == 1);
  CHECK(rep.checks[0].name == "signs");
  CHECK(rep.pass());
}

TEST_CASE("reports are byte-stable apart from timing") {
  const auto cfg = SuiteConfig::from_json({{"checks", {"roundtrip", "ainfty", "maslov"}}, {"seed", 99}});
  const auto a = dump(run_suite(cfg, {"suite"}).to_json(false));
  const auto b = dump(run_suite(cfg, {"suite"}).to_json(false));
  CHECK(a == b);
  CHECK(a.find("wall") == std::string::npos);
  const Json j = Json::parse(a);
  CHECK(j["seed"] == 99);
  CHECK(j["schema_version"] == schema_version);
}

TEST_CASE("corrupted fixtures fail with a payload") {
  const auto rep = run_suite(SuiteConfig::from_json(
      {{"checks", {"ainfty", "signs"}},
       {"options", {{"ainfty", {{"corrupt", true}}}, {"signs", {{"corruption", "drop_triangle"}, {"identities", {"m"}}}}}}}));
  CHECK_FALSE(rep.pass());
  for (const auto& c : rep.checks) {
    CHECK_FALSE(c.pass);
    if (c.name == "signs") CHECK(c.details["identities"][0].contains("counterexample"));
    if (c.name == "ainfty") CHECK_FALSE(c.details["fixtures"]["dga_exterior"]["nonzero"].empty());
  }
}
