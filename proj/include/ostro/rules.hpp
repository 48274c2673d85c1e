#pragma once

#include <optional>

#include "ostro/core.hpp"

// The Ostrowski-type inequalities as stated, each evaluated to its two sides
// so that violations can be measured rather than just detected.
namespace ostro {

struct RuleOutcome {
  double lhs;    // the absolute-value expression
  double rhs;    // the bound
  double slack;  // satisfied <=> lhs <= rhs + slack
  bool satisfied;

  double excess() const noexcept { return lhs - rhs; }
};

inline constexpr double kDefaultSlackRel = 1e-9;

/// slack = slack_rel * (1 + |rhs|)
RuleOutcome make_outcome(double lhs, double rhs, double slack_rel = kDefaultSlackRel);

class Lambda {
 public:
  /// Throws InvalidLambda outside [0, 1].
  explicit Lambda(double value);
  double value() const noexcept { return value_; }

 private:
  double value_;
};

/// |f(x) - avg f| <= [1/4 + (x - (a+b)/2)^2/(b-a)^2] (b-a) M, with |f'| <= M.
RuleOutcome ostrowski_1d(const UnivariateFunction& f, const Interval1D& iv, double x,
                         const DerivativeBound1D& m, const QuadConfig& q = {},
                         double slack_rel = kDefaultSlackRel);

/// |f(x)/2 - ((x-b)f(b) - (x-a)f(a))/(2(b-a)) - avg f|
///   <= ((x-a)^2 + (b-x)^2)/(8(b-a)) (Gamma - gamma), with gamma <= f' <= Gamma.
RuleOutcome cheng_1d(const UnivariateFunction& f, const Interval1D& iv, double x,
                     const DerivativeBound1D& range, const QuadConfig& q = {},
                     double slack_rel = kDefaultSlackRel);

/// Corner block over (b-a)(d-c) plus the two edge blocks over (b-a) and (d-c).
double sarikaya_H(const BivariateFunction& f, const Rectangle& r, const EvalPoint& pt);

/// The two-dimensional Cheng-type rule. The double integral enters with
/// coefficient 1/((b-a)(d-c)); that is the value that makes the functional
/// the tensor product of the one-dimensional Cheng functionals and the only
/// one under which constants are annihilated.
///
/// `double_integral`, when given, is used in place of integrating f over r.
RuleOutcome sarikaya_functional(const BivariateFunction& f, const Rectangle& r,
                                const EvalPoint& pt, const DerivativeBounds& db,
                                const QuadConfig& q = {},
                                std::optional<double> double_integral = std::nullopt,
                                double slack_rel = kDefaultSlackRel);

/// x in [a + lam (b-a)/2, b - lam (b-a)/2] and likewise for y, up to a few
/// ulps of rounding.
bool in_lambda_box(const Rectangle& r, const EvalPoint& pt, const Lambda& lam) noexcept;

/// Throws PointOutsideLambdaBox unless in_lambda_box holds.
RuleOutcome qiaoling_functional(const BivariateFunction& f, const Rectangle& r,
                                const EvalPoint& pt, const DerivativeBounds& db,
                                const Lambda& lam, const QuadConfig& q = {},
                                std::optional<double> double_integral = std::nullopt,
                                double slack_rel = kDefaultSlackRel);

/// (3(x-a) - (b-x))(3(y-c) - (d-y)) / ((b-a)(d-c))
double theorem5_K(const Rectangle& r, const EvalPoint& pt);
/// The four stated blocks, summed, over (b-a)(d-c).
double theorem5_H(const BivariateFunction& f, const Rectangle& r, const EvalPoint& pt);

/// The main two-dimensional rule exactly as stated, including its sign
/// choices. It does not annihilate constants; see the identity module for
/// the audit and enclosure.hpp for the corrected rule.
RuleOutcome theorem5_functional(const BivariateFunction& f, const Rectangle& r,
                                const EvalPoint& pt, const DerivativeBounds& db,
                                const QuadConfig& q = {},
                                std::optional<double> double_integral = std::nullopt,
                                double slack_rel = kDefaultSlackRel);

/// Independent recomputation of the Cheng-type and lambda-rule left-hand
/// sides: |integral of k_t(t) k_s(s) (d2f/dtds - M)| / area with each rule's
/// own piecewise-linear kernels (roots (a+x)/2, (b+x)/2 and a + lam(b-a)/2,
/// b - lam(b-a)/2 respectively). Uses the exact mixed partial when present,
/// finite differences otherwise.
double sarikaya_kernel_route(const BivariateFunction& f, const Rectangle& r, const EvalPoint& pt,
                             const DerivativeBounds& db, const QuadConfig& q = {});
double qiaoling_kernel_route(const BivariateFunction& f, const Rectangle& r, const EvalPoint& pt,
                             const DerivativeBounds& db, const Lambda& lam,
                             const QuadConfig& q = {});

/// Right-hand sides alone; they depend only on the geometry and on
/// Gamma - gamma.
double sarikaya_rhs(const Rectangle& r, const EvalPoint& pt, const DerivativeBounds& db);
double qiaoling_rhs(const Rectangle& r, const EvalPoint& pt, const DerivativeBounds& db,
                    const Lambda& lam);
double theorem5_rhs(const Rectangle& r, const EvalPoint& pt, const DerivativeBounds& db);

}  // namespace ostro
