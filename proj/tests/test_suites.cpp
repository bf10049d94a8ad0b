#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "qea/suites.hpp"

using namespace qea;
using json = nlohmann::json;

namespace {

SuiteConfig small_cfg() {
  SuiteConfig cfg;
  cfg.p = 5;
  cfg.ell = 2;
  cfg.n = 2;
  cfg.seed = 3;
  cfg.battery = 6;
  cfg.trials = 32;
  return cfg;
}

}  // namespace

TEST_CASE("every registered suite passes on a small configuration") {
  SuiteConfig cfg = small_cfg();
  for (const std::string& name : suite_names()) {
    SuiteReport rep = run_suite(name, cfg);
    INFO(name, ": ", rep.failures.empty() ? "" : rep.failures[0].detail);
    CHECK(rep.passed());
    CHECK(rep.cases > 0);
  }
}

TEST_CASE("unknown suite names are rejected") {
  CHECK(!is_suite_name("nonsense"));
  CHECK_THROWS_AS(run_suite("nonsense", small_cfg()), Error);
  CHECK(is_suite_name("tensor"));
}

TEST_CASE("the negated antipode variant makes the hopf suite fail") {
  SuiteConfig cfg = small_cfg();
  cfg.negated_antipode = true;
  SuiteReport rep = run_suite("hopf", cfg);
  CHECK(!rep.passed());
  bool antipode_case = false;
  for (auto& f : rep.failures)
    if (f.case_id.find("antipode") != std::string::npos) antipode_case = true;
  CHECK(antipode_case);
}

TEST_CASE("an injected fault fails the tensor suite with a reproduction bundle") {
  SuiteConfig cfg = small_cfg();
  cfg.inject_fault = true;
  SuiteReport rep = run_suite("tensor", cfg);
  REQUIRE(!rep.passed());
  const CaseFailure& f = rep.failures.front();
  json repro = json::parse(f.repro_json);
  CHECK(repro.contains("modules"));
  CHECK(repro["modules"].size() == 2);
  CHECK(repro["seed"].is_number());
}

TEST_CASE("reports are deterministic in the seed and exclude timing") {
  SuiteConfig cfg = small_cfg();
  cfg.battery = 4;
  ConfigReport a{cfg, {run_suite("duality", cfg), run_suite("projectivity", cfg)}};
  ConfigReport b{cfg, {run_suite("duality", cfg), run_suite("projectivity", cfg)}};
  CHECK(report_to_json({a}) == report_to_json({b}));
  CHECK(report_to_text({a}, false) == report_to_text({b}, false));

  json j = json::parse(report_to_json({a}));
  CHECK(j["pass"].is_boolean());
  CHECK(!j["configs"][0]["suites"][0].contains("wall_ms"));
}

TEST_CASE("worker count does not change report content") {
  SuiteConfig cfg = small_cfg();
  cfg.battery = 4;
  cfg.workers = 1;
  ConfigReport a{cfg, {run_suite("duality", cfg)}};
  SuiteConfig cfg2 = cfg;
  cfg2.workers = 4;
  ConfigReport b{cfg2, {run_suite("duality", cfg2)}};
  // configs differ only in the worker knob, which is not serialized
  CHECK(report_to_json({a}) == report_to_json({b}));
}

TEST_CASE("default configurations are the four standing parameter sets") {
  auto cfgs = default_configs(1);
  REQUIRE(cfgs.size() == 4);
  CHECK(cfgs[0].ell == 2);
  CHECK(cfgs[0].n == 2);
  CHECK(cfgs[0].p == 5);
  CHECK(cfgs[3].ell == 5);
  CHECK(cfgs[3].n == 2);
  CHECK(cfgs[3].p == 11);
  for (auto& c : cfgs) CHECK((c.p - 1) % c.ell == 0);
}
