#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ostro/core.hpp"
#include "ostro/rules.hpp"

// Randomised audit of every rule against its own bound. Each trial draws a
// polynomial in (t, s), a rectangle and anchors from a per-trial seed, takes
// guaranteed bounds from the polynomial's coefficients and evaluates every
// selected rule; fixed fixtures run before the trials.
namespace ostro {

inline const std::vector<std::string> kRuleNames = {"t1", "t2", "t3", "t4", "t5", "corrected"};
bool is_rule_name(const std::string& name) noexcept;

struct VerifyOptions {
  long trials = 1000;
  std::uint64_t seed = 42;
  std::vector<std::string> rules = kRuleNames;
  int degree = 6;
  std::vector<double> lambdas = {0.0, 0.25, 0.5, 1.0};
  double slack_rel = kDefaultSlackRel;
  QuadConfig quad{};
  bool fixtures = true;
  /// 0 picks min(hardware threads, 8).
  int threads = 0;
};

/// Everything needed to re-run one evaluation. One-dimensional cases use
/// rect[0..1], point[0] and bounds on f'; for t1 the bound is
/// M = max(|bounds[0]|, |bounds[1]|).
struct CaseInput {
  std::string source;  // fixture name, or "trial"
  long trial_index = -1;
  std::uint64_t trial_seed = 0;
  std::string expr;
  std::array<double, 4> rect{};
  std::array<double, 2> point{};
  std::array<double, 2> bounds{};
  std::optional<double> lambda;
};

struct RuleTally {
  std::string rule;
  std::optional<double> lambda;  // t4 only
  long trials = 0;
  /// Violations that survived the independent re-check.
  long violations = 0;
  /// Violations before the re-check.
  long raw_violations = 0;
  double worst_excess;  // max lhs - rhs
  double max_ratio = 0.0;  // max lhs / rhs over cases with rhs > 0
  RuleOutcome worst_outcome{};
  CaseInput worst_case;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<std::string> fixtures;
  std::vector<RuleTally> tallies;
  std::string tool_version;

  long total_violations() const noexcept;
  /// Confirmed violations summed over the tallies for `rule`.
  long violations_for(const std::string& rule) const noexcept;
};

/// Deterministic for fixed options regardless of thread count.
VerifyReport run_verify(const VerifyOptions& options);

/// Re-evaluates one recorded case from its text form alone (expression,
/// geometry, bounds) and returns the rule outcome.
RuleOutcome rerun_case(const std::string& rule, const CaseInput& in, const QuadConfig& q = {},
                       double slack_rel = kDefaultSlackRel);

/// Seed of trial i: splitmix64(seed ^ splitmix64(i)).
std::uint64_t trial_seed(std::uint64_t seed, long index) noexcept;

std::string tool_version();

}  // namespace ostro
