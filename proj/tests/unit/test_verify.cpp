#include <doctest.h>

#include "ostro/report_json.hpp"
#include "ostro/verify.hpp"
#include "../support/helpers.hpp"

using namespace ostro;

namespace {

VerifyOptions small(long trials) {
  VerifyOptions o;
  o.trials = trials;
  o.threads = 1;
  return o;
}

const RuleTally& tally(const VerifyReport& r, const std::string& rule, std::optional<double> lam = {}) {
  for (const auto& t : r.tallies)
    if (t.rule == rule && t.lambda == lam) return t;
  FAIL("no tally for " << rule);
  return r.tallies.front();
}

}  // namespace

TEST_CASE("fixtures alone expose the main rule as stated") {
  const VerifyReport r = run_verify(small(0));
  CHECK(r.fixtures.size() == 12);
  CHECK(r.violations_for("t5") >= 3);
  CHECK(r.violations_for("t1") == 0);
  CHECK(r.violations_for("t2") == 0);
  CHECK(r.violations_for("t3") == 0);
  CHECK(r.violations_for("t4") == 0);
  CHECK(r.violations_for("corrected") == 0);
  const RuleTally& t5 = tally(r, "t5");
  CHECK(t5.worst_case.source != "trial");
  CHECK(t5.worst_excess > 0.09);
}

TEST_CASE("tallies are consistent and worst cases re-run exactly") {
  const VerifyReport r = run_verify(small(60));
  CHECK(r.tool_version == tool_version());
  for (const auto& t : r.tallies) {
    CAPTURE(t.rule);
    CHECK(t.violations <= t.raw_violations);
    CHECK(t.raw_violations <= t.trials);
    CHECK(t.trials >= 60);
    const RuleOutcome again = rerun_case(t.rule, t.worst_case);
    CHECK(again.lhs == t.worst_outcome.lhs);
    CHECK(again.rhs == t.worst_outcome.rhs);
    // Through JSON and back.
    const CaseInput via = case_input_from_json(Json::parse(to_json(t.worst_case).dump()));
    CHECK(rerun_case(t.rule, via).lhs == t.worst_outcome.lhs);
  }
  CHECK(tally(r, "t4", 0.5).lambda == 0.5);
}

TEST_CASE("results do not depend on the thread count") {
  VerifyOptions a = small(24), b = small(24);
  b.threads = 3;
  const std::string ja = to_json(run_verify(a)).dump();
  const std::string jb = to_json(run_verify(b)).dump();
  CHECK(ja == jb);
}

TEST_CASE("rule selection and seeds") {
  VerifyOptions o = small(10);
  o.rules = {"t4"};
  o.lambdas = {0.25, 1.0};
  const VerifyReport r = run_verify(o);
  REQUIRE(r.tallies.size() == 2);
  CHECK(*r.tallies[0].lambda == 0.25);
  CHECK(*r.tallies[1].lambda == 1.0);
  CHECK(trial_seed(42, 0) != trial_seed(42, 1));
  CHECK(trial_seed(42, 5) == trial_seed(42, 5));
  o.rules = {"t9"};
  CHECK(testing::error_code_of([&] { run_verify(o); }) == ErrorCode::InvalidConfig);
}
