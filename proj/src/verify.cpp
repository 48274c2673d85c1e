#include "ostro/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <thread>

#include "ostro/enclosure.hpp"
#include "ostro/expr.hpp"
#include "ostro/polynomial.hpp"
#include "ostro/quadrature.hpp"
#include "ostro/random.hpp"

#ifndef OSTRO_VERSION
#define OSTRO_VERSION "0.0.0"
#endif

namespace ostro {
namespace {

bool is_1d(const std::string& rule) { return rule == "t1" || rule == "t2"; }

Rectangle rect_of(const CaseInput& in) {
  return make_rectangle(in.rect[0], in.rect[1], in.rect[2], in.rect[3]);
}

// A single evaluation. The double integral, when given, must have been
// computed as integrate_2d(f, r, q) so that cached and fresh runs agree
// bit for bit.
RuleOutcome evaluate_case(const std::string& rule, const CaseInput& in, const QuadConfig& q,
                          double slack_rel, std::optional<double> integral) {
  const expr::Expr e = expr::parse(in.expr);
  if (is_1d(rule)) {
    const UnivariateFunction f = expr::to_univariate(e);
    const Interval1D iv(in.rect[0], in.rect[1]);
    if (rule == "t1") {
      const double m = std::max(std::abs(in.bounds[0]), std::abs(in.bounds[1]));
      return ostrowski_1d(f, iv, in.point[0], DerivativeBound1D::abs_bound(m), q, slack_rel);
    }
    return cheng_1d(f, iv, in.point[0], DerivativeBound1D::range(in.bounds[0], in.bounds[1]), q,
                    slack_rel);
  }
  const BivariateFunction f = expr::to_bivariate(e);
  const Rectangle r = rect_of(in);
  const EvalPoint pt{in.point[0], in.point[1]};
  const DerivativeBounds db(in.bounds[0], in.bounds[1]);
  if (!integral) integral = integrate_2d(f, r, q);
  if (rule == "t3") return sarikaya_functional(f, r, pt, db, q, integral, slack_rel);
  if (rule == "t4") return qiaoling_functional(f, r, pt, db, Lambda(*in.lambda), q, integral, slack_rel);
  if (rule == "t5") return theorem5_functional(f, r, pt, db, q, integral, slack_rel);
  return corrected_functional(f, r, pt, db, q, integral, slack_rel);
}

// Second opinion on a violation: the Cheng-type and lambda rules are
// recomputed through their kernels, the rest with refined quadrature.
bool confirm_violation(const std::string& rule, const CaseInput& in, const QuadConfig& q,
                       double slack_rel) {
  const QuadConfig fine = q.refined();
  if (rule == "t3" || rule == "t4") {
    const expr::Expr e = expr::parse(in.expr);
    const BivariateFunction f = expr::to_bivariate(e);
    const Rectangle r = rect_of(in);
    const EvalPoint pt{in.point[0], in.point[1]};
    const DerivativeBounds db(in.bounds[0], in.bounds[1]);
    const double lhs = rule == "t3" ? sarikaya_kernel_route(f, r, pt, db, fine)
                                    : qiaoling_kernel_route(f, r, pt, db, Lambda(*in.lambda), fine);
    const double rhs = rule == "t3" ? sarikaya_rhs(r, pt, db)
                                    : qiaoling_rhs(r, pt, db, Lambda(*in.lambda));
    return !make_outcome(lhs, rhs, slack_rel).satisfied;
  }
  return !evaluate_case(rule, in, fine, slack_rel, std::nullopt).satisfied;
}

struct Slot {
  std::string rule;
  std::optional<double> lambda;
};

std::vector<Slot> make_slots(const VerifyOptions& o) {
  std::vector<Slot> slots;
  for (const std::string& name : kRuleNames) {
    if (std::find(o.rules.begin(), o.rules.end(), name) == o.rules.end()) continue;
    if (name == "t4") {
      for (double lam : o.lambdas) slots.push_back({name, lam});
    } else {
      slots.push_back({name, std::nullopt});
    }
  }
  return slots;
}

struct Evaluation {
  std::size_t slot;
  CaseInput input;
  RuleOutcome outcome;
  bool confirmed;
};

struct Fixture2D {
  const char* name;
  const char* expr;
  double x, y, lo, hi;
};

// Unit square. Constants and bilinear functions are the cases the main
// rule as stated gets wrong.
constexpr Fixture2D kFixtures2D[] = {
    {"one_mid", "1", 0.5, 0.5, 0.0, 0.0},
    {"one_corner", "1", 1.0, 1.0, 0.0, 0.0},
    {"ts_mid", "t*s", 0.5, 0.5, 1.0, 1.0},
    {"ts_corner", "t*s", 1.0, 1.0, 1.0, 1.0},
    {"one_plus_t_s_mid", "(1+t)*s", 0.5, 0.5, 1.0, 1.0},
    {"one_plus_t_s_corner", "(1+t)*s", 1.0, 1.0, 1.0, 1.0},
};

struct Fixture1D {
  const char* name;
  const char* expr;
  double x, lo, hi;
};

constexpr Fixture1D kFixtures1D[] = {
    {"t_x0", "t", 0.0, 1.0, 1.0},      {"t_mid", "t", 0.5, 1.0, 1.0},
    {"t_x1", "t", 1.0, 1.0, 1.0},      {"t_sq_x0", "t^2", 0.0, 0.0, 2.0},
    {"t_sq_mid", "t^2", 0.5, 0.0, 2.0}, {"t_sq_x1", "t^2", 1.0, 0.0, 2.0},
};

class Evaluator {
 public:
  Evaluator(const VerifyOptions& o, const std::vector<Slot>& slots) : o_(o), slots_(slots) {}

  void run_1d(const CaseInput& base, std::vector<Evaluation>& out) const {
    for (std::size_t k = 0; k < slots_.size(); ++k) {
      if (!is_1d(slots_[k].rule)) continue;
      push(k, base, std::nullopt, out);
    }
  }

  void run_2d(const CaseInput& base, std::vector<Evaluation>& out) const {
    std::optional<double> integral;
    for (std::size_t k = 0; k < slots_.size(); ++k) {
      if (is_1d(slots_[k].rule)) continue;
      CaseInput in = base;
      in.lambda = slots_[k].lambda;
      if (in.lambda &&
          !in_lambda_box(rect_of(in), EvalPoint{in.point[0], in.point[1]}, Lambda(*in.lambda)))
        continue;
      if (!integral) {
        const BivariateFunction f = expr::to_bivariate(expr::parse(in.expr));
        integral = integrate_2d(f, rect_of(in), o_.quad);
      }
      push(k, in, integral, out);
    }
  }

  // A trial has one 1D case and, per 2D slot, its own anchor; t4 draws a
  // point inside each lambda's box.
  void run_trial(long index, std::vector<Evaluation>& out) const {
    const std::uint64_t seed = trial_seed(o_.seed, index);
    Xorshift64Star rng(seed);

    const Polynomial2D p1 = random_polynomial_1d(rng, o_.degree);
    const double a1 = rng.uniform(-2.0, 2.0), b1 = a1 + rng.uniform(0.25, 2.5);
    const double x1 = rng.uniform(a1, b1);
    const Polynomial2D p2 = random_polynomial(rng, o_.degree);
    const double a = rng.uniform(-2.0, 2.0), b = a + rng.uniform(0.25, 2.5);
    const double c = rng.uniform(-2.0, 2.0), d = c + rng.uniform(0.25, 2.5);
    const double x = rng.uniform(a, b), y = rng.uniform(c, d);
    const double ux = rng.unit(), uy = rng.unit();

    CaseInput one;
    one.source = "trial";
    one.trial_index = index;
    one.trial_seed = seed;
    one.expr = expr::to_string(p1.to_expr());
    one.rect = {a1, b1, 0.0, 1.0};
    one.point = {x1, 0.0};
    const Rectangle strip = make_rectangle(a1, b1, 0.0, 1.0);
    const DerivativeBounds d1 = p1.derivative_t().value_range(strip);
    one.bounds = {d1.lower(), d1.upper()};
    run_1d(one, out);

    CaseInput two;
    two.source = "trial";
    two.trial_index = index;
    two.trial_seed = seed;
    two.expr = expr::to_string(p2.to_expr());
    two.rect = {a, b, c, d};
    const DerivativeBounds d2 = p2.mixed_partial().value_range(make_rectangle(a, b, c, d));
    two.bounds = {d2.lower(), d2.upper()};

    const BivariateFunction f = expr::to_bivariate(expr::parse(two.expr));
    const double integral = integrate_2d(f, make_rectangle(a, b, c, d), o_.quad);
    for (std::size_t k = 0; k < slots_.size(); ++k) {
      if (is_1d(slots_[k].rule)) continue;
      CaseInput in = two;
      in.lambda = slots_[k].lambda;
      if (in.lambda) {
        const double lam = *in.lambda;
        const double ht = 0.5 * lam * (b - a), hs = 0.5 * lam * (d - c);
        in.point = {lam >= 1.0 ? 0.5 * (a + b) : (a + ht) + ux * ((b - ht) - (a + ht)),
                    lam >= 1.0 ? 0.5 * (c + d) : (c + hs) + uy * ((d - hs) - (c + hs))};
        if (!in_lambda_box(make_rectangle(a, b, c, d), EvalPoint{in.point[0], in.point[1]},
                           Lambda(lam)))
          in.point = {0.5 * (a + b), 0.5 * (c + d)};
      } else {
        in.point = {x, y};
      }
      push(k, in, integral, out);
    }
  }

 private:
  void push(std::size_t k, const CaseInput& in, std::optional<double> integral,
            std::vector<Evaluation>& out) const {
    const RuleOutcome res = evaluate_case(slots_[k].rule, in, o_.quad, o_.slack_rel, integral);
    const bool confirmed =
        !res.satisfied && confirm_violation(slots_[k].rule, in, o_.quad, o_.slack_rel);
    out.push_back({k, in, res, confirmed});
  }

  const VerifyOptions& o_;
  const std::vector<Slot>& slots_;
};

void absorb(RuleTally& t, const Evaluation& ev) {
  ++t.trials;
  if (!ev.outcome.satisfied) ++t.raw_violations;
  if (ev.confirmed) ++t.violations;
  if (ev.outcome.rhs > 0.0) t.max_ratio = std::max(t.max_ratio, ev.outcome.lhs / ev.outcome.rhs);
  if (t.trials == 1 || ev.outcome.excess() > t.worst_excess) {
    t.worst_excess = ev.outcome.excess();
    t.worst_outcome = ev.outcome;
    t.worst_case = ev.input;
  }
}

}  // namespace

bool is_rule_name(const std::string& name) noexcept {
  return std::find(kRuleNames.begin(), kRuleNames.end(), name) != kRuleNames.end();
}

std::uint64_t trial_seed(std::uint64_t seed, long index) noexcept {
  return splitmix64(seed ^ splitmix64(static_cast<std::uint64_t>(index)));
}

std::string tool_version() { return OSTRO_VERSION; }

long VerifyReport::total_violations() const noexcept {
  long n = 0;
  for (const auto& t : tallies) n += t.violations;
  return n;
}

long VerifyReport::violations_for(const std::string& rule) const noexcept {
  long n = 0;
  for (const auto& t : tallies)
    if (t.rule == rule) n += t.violations;
  return n;
}

RuleOutcome rerun_case(const std::string& rule, const CaseInput& in, const QuadConfig& q,
                       double slack_rel) {
  if (!is_rule_name(rule)) throw Error(ErrorCode::InvalidConfig, "unknown rule '" + rule + "'");
  return evaluate_case(rule, in, q, slack_rel, std::nullopt);
}

VerifyReport run_verify(const VerifyOptions& options) {
  options.quad.validate();
  if (options.trials < 0) throw Error(ErrorCode::InvalidConfig, "trials must be >= 0");
  if (options.degree < 0 || options.degree > 12)
    throw Error(ErrorCode::InvalidConfig, "degree must lie in [0, 12]");
  for (const auto& r : options.rules)
    if (!is_rule_name(r)) throw Error(ErrorCode::InvalidConfig, "unknown rule '" + r + "'");
  for (double lam : options.lambdas) Lambda{lam};

  VerifyReport report;
  report.options = options;
  report.tool_version = tool_version();
  const std::vector<Slot> slots = make_slots(options);
  for (const Slot& s : slots) {
    RuleTally t;
    t.rule = s.rule;
    t.lambda = s.lambda;
    t.worst_excess = -std::numeric_limits<double>::infinity();
    report.tallies.push_back(t);
  }
  const Evaluator ev(options, slots);

  std::vector<Evaluation> fixture_evals;
  if (options.fixtures) {
    for (const auto& fx : kFixtures1D) {
      CaseInput in;
      in.source = fx.name;
      in.expr = fx.expr;
      in.rect = {0.0, 1.0, 0.0, 1.0};
      in.point = {fx.x, 0.0};
      in.bounds = {fx.lo, fx.hi};
      report.fixtures.push_back(fx.name);
      ev.run_1d(in, fixture_evals);
    }
    for (const auto& fx : kFixtures2D) {
      CaseInput in;
      in.source = fx.name;
      in.expr = fx.expr;
      in.rect = {0.0, 1.0, 0.0, 1.0};
      in.point = {fx.x, fx.y};
      in.bounds = {fx.lo, fx.hi};
      report.fixtures.push_back(fx.name);
      ev.run_2d(in, fixture_evals);
    }
  }

  const long n = options.trials;
  std::vector<std::vector<Evaluation>> per_trial(static_cast<std::size_t>(n));
  unsigned threads = options.threads > 0 ? static_cast<unsigned>(options.threads)
                                         : std::min(8u, std::max(1u, std::thread::hardware_concurrency()));
  threads = static_cast<unsigned>(std::min<long>(threads, std::max<long>(n, 1)));

  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](unsigned w) {
    try {
      for (long i = w; i < n; i += threads) ev.run_trial(i, per_trial[static_cast<std::size_t>(i)]);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (threads <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  for (const auto& e : fixture_evals) absorb(report.tallies[e.slot], e);
  for (const auto& trial : per_trial)
    for (const auto& e : trial) absorb(report.tallies[e.slot], e);
  return report;
}

}  // namespace ostro
