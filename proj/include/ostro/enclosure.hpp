#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ostro/core.hpp"
#include "ostro/rules.hpp"

// Enclosures of the double integral built on the derived boundary functional
// V = (Lambda_t (x) Lambda_s) f and the moment bound
//   |V - M S| <= h A,   M = (Gamma+gamma)/2, h = (Gamma-gamma)/2,
// with S, A the signed and absolute kernel moments. Writing V as
// nodes - lines + integral, the integral lies in
//   [M S - nodes + lines - h A, M S - nodes + lines + h A].
namespace ostro {

struct EnclosureReport {
  Enclosure enclosure;
  EvalPoint point_used;
  DerivativeBounds bounds_used;
  /// False when bounds were estimated, the function has no exact mixed
  /// partial, or the padding exceeds QuadConfig::abs_tol scaled by
  /// 1 + |center| + radius.
  bool rigorous;
  bool bounds_estimated;
  int cells;
  std::vector<double> per_cell_width;
  /// h * A summed over cells.
  double radius;
  /// Added to each side: line-integral disagreement between two GL orders
  /// plus a rounding budget.
  double quadrature_padding;
};

EnclosureReport single_cell_enclosure(const BivariateFunction& f, const Rectangle& r,
                                      const EvalPoint& pt, const DerivativeBounds& db,
                                      const QuadConfig& q = {});

/// Bounds estimated on each cell from grid samples of the mixed partial.
struct PerCellEstimated {
  int grid_n = 17;
  double pad_rel = 0.05;
};

using BoundsStrategy = std::variant<DerivativeBounds, PerCellEstimated>;

/// m x n equal cells, each enclosed at its midpoint (where S = 0), reduced in
/// row-major order. With global bounds the total width is
/// 25 (Gamma-gamma) (b-a)^2 (d-c)^2 / (1024 m n) plus padding.
EnclosureReport composite_enclosure(const BivariateFunction& f, const Rectangle& r,
                                    const BoundsStrategy& strategy, int m, int n,
                                    const QuadConfig& q = {});

/// |V - M S| and h A for one anchor, not normalised by the area.
struct CorrectedBound {
  double deviation;
  double radius;
};

CorrectedBound corrected_bound(const BivariateFunction& f, const Rectangle& r,
                               const EvalPoint& pt, const DerivativeBounds& db,
                               const QuadConfig& q = {},
                               std::optional<double> double_integral = std::nullopt);

/// The corrected rule in the same normalisation as the other rules:
/// lhs = |V - M S| / area, rhs = h A / area.
RuleOutcome corrected_functional(const BivariateFunction& f, const Rectangle& r,
                                 const EvalPoint& pt, const DerivativeBounds& db,
                                 const QuadConfig& q = {},
                                 std::optional<double> double_integral = std::nullopt,
                                 double slack_rel = kDefaultSlackRel);

struct ComparisonRow {
  std::string rule;  // "sarikaya", "qiaoling", "theorem5_verbatim", "corrected"
  double lhs;
  double rhs;
  /// Width of the interval each rule induces for the double integral.
  double width;
  bool violated;
};

struct ComparisonReport {
  double lambda;
  std::vector<ComparisonRow> rows;

  const ComparisonRow& row(const std::string& rule) const;
};

/// Throws PointOutsideLambdaBox when lambda > 0 and pt is outside its box.
ComparisonReport compare_bounds(const BivariateFunction& f, const Rectangle& r,
                                const EvalPoint& pt, const DerivativeBounds& db,
                                const Lambda& lam, const QuadConfig& q = {});

}  // namespace ostro
