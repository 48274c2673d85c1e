#include "ostro/enclosure.hpp"

#include <cmath>
#include <limits>

#include "ostro/identity.hpp"
#include "ostro/kernels.hpp"
#include "ostro/quadrature.hpp"

namespace ostro {
namespace {

constexpr double kRoundingFactor = 8.0 * std::numeric_limits<double>::epsilon();

struct CellResult {
  double center;
  double radius;
  double padding;
};

// Padding counts against abs_tol relative to the size of the result.
bool padding_within_budget(double padding, double center, double radius, const QuadConfig& q) {
  return padding <= q.abs_tol * (1.0 + std::abs(center) + radius);
}

CellResult enclose_cell(const BivariateFunction& f, const Rectangle& r, const EvalPoint& pt,
                        const DerivativeBounds& db, const QuadConfig& q) {
  const ExpansionParts parts = derived_expansion_parts(f, r, pt, q, false, true);
  const double ms = db.midpoint() * signed_moment(r, pt);
  const double center = ms - parts.node_terms + parts.line_terms;
  const double radius = db.halfwidth() * abs_moment(r, pt);
  const double padding =
      parts.line_noise + kRoundingFactor * (parts.magnitude + std::abs(ms) + radius);
  return {center, radius, padding};
}

}  // namespace

EnclosureReport single_cell_enclosure(const BivariateFunction& f, const Rectangle& r,
                                      const EvalPoint& pt, const DerivativeBounds& db,
                                      const QuadConfig& q) {
  require_inside(r, pt);
  const CellResult cell = enclose_cell(f, r, pt, db, q);
  EnclosureReport rep{{cell.center - cell.radius - cell.padding,
                       cell.center + cell.radius + cell.padding},
                      pt,
                      db,
                      false,
                      false,
                      1,
                      {},
                      cell.radius,
                      cell.padding};
  rep.per_cell_width.push_back(rep.enclosure.width());
  rep.rigorous =
      f.has_exact_mixed() && padding_within_budget(cell.padding, cell.center, cell.radius, q);
  return rep;
}

EnclosureReport composite_enclosure(const BivariateFunction& f, const Rectangle& r,
                                    const BoundsStrategy& strategy, int m, int n,
                                    const QuadConfig& q) {
  if (m < 1 || n < 1) throw Error(ErrorCode::InvalidConfig, "subdivision counts must be >= 1");
  const bool estimated = std::holds_alternative<PerCellEstimated>(strategy);
  const double wt = r.t_axis().length() / m;
  const double ws = r.s_axis().length() / n;

  double center = 0.0, radius = 0.0, padding = 0.0;
  double lo_bound = std::numeric_limits<double>::infinity();
  double hi_bound = -lo_bound;
  std::vector<double> widths;
  widths.reserve(static_cast<std::size_t>(m) * n);
  for (int i = 0; i < m; ++i) {
    const double t0 = r.a() + i * wt;
    const double t1 = i + 1 == m ? r.b() : r.a() + (i + 1) * wt;
    for (int j = 0; j < n; ++j) {
      const double s0 = r.c() + j * ws;
      const double s1 = j + 1 == n ? r.d() : r.c() + (j + 1) * ws;
      const Rectangle cell = make_rectangle(t0, t1, s0, s1);
      const DerivativeBounds db =
          estimated ? estimate_bounds(f, cell, std::get<PerCellEstimated>(strategy).grid_n,
                                      std::get<PerCellEstimated>(strategy).pad_rel)
                          .bounds
                    : std::get<DerivativeBounds>(strategy);
      lo_bound = std::min(lo_bound, db.lower());
      hi_bound = std::max(hi_bound, db.upper());
      const CellResult res = enclose_cell(f, cell, midpoint(cell), db, q);
      center += res.center;
      radius += res.radius;
      padding += res.padding;
      widths.push_back(2.0 * (res.radius + res.padding));
    }
  }
  padding += kRoundingFactor * (std::abs(center) + radius);
  EnclosureReport rep{{center - radius - padding, center + radius + padding},
                      midpoint(r),
                      DerivativeBounds(lo_bound, hi_bound),
                      false,
                      estimated,
                      m * n,
                      std::move(widths),
                      radius,
                      padding};
  rep.rigorous = !estimated && f.has_exact_mixed() && padding_within_budget(padding, center, radius, q);
  return rep;
}

CorrectedBound corrected_bound(const BivariateFunction& f, const Rectangle& r,
                               const EvalPoint& pt, const DerivativeBounds& db,
                               const QuadConfig& q, std::optional<double> double_integral) {
  ExpansionParts parts = derived_expansion_parts(f, r, pt, q, !double_integral, false);
  if (double_integral) parts.double_integral = *double_integral;
  return {std::abs(parts.value() - db.midpoint() * signed_moment(r, pt)),
          db.halfwidth() * abs_moment(r, pt)};
}

RuleOutcome corrected_functional(const BivariateFunction& f, const Rectangle& r,
                                 const EvalPoint& pt, const DerivativeBounds& db,
                                 const QuadConfig& q, std::optional<double> double_integral,
                                 double slack_rel) {
  const CorrectedBound cb = corrected_bound(f, r, pt, db, q, double_integral);
  return make_outcome(cb.deviation / r.area(), cb.radius / r.area(), slack_rel);
}

const ComparisonRow& ComparisonReport::row(const std::string& rule) const {
  for (const auto& rw : rows)
    if (rw.rule == rule) return rw;
  throw Error(ErrorCode::InvalidConfig, "no comparison row named " + rule);
}

ComparisonReport compare_bounds(const BivariateFunction& f, const Rectangle& r,
                                const EvalPoint& pt, const DerivativeBounds& db,
                                const Lambda& lam, const QuadConfig& q) {
  require_inside(r, pt);
  if (lam.value() > 0.0 && !in_lambda_box(r, pt, lam))
    throw Error(ErrorCode::PointOutsideLambdaBox, "point outside the lambda box");
  const double area = r.area();
  const double integral = integrate_2d(f, r, q);

  ComparisonReport rep{lam.value(), {}};
  auto add = [&](const char* name, const RuleOutcome& o, double width) {
    rep.rows.push_back({name, o.lhs, o.rhs, width, !o.satisfied});
  };
  const RuleOutcome t3 = sarikaya_functional(f, r, pt, db, q, integral);
  add("sarikaya", t3, 2.0 * area * t3.rhs);
  const RuleOutcome t4 = qiaoling_functional(f, r, pt, db, lam, q, integral);
  add("qiaoling", t4, 2.0 * area * t4.rhs);
  const RuleOutcome t5 = theorem5_functional(f, r, pt, db, q, integral);
  add("theorem5_verbatim", t5, 2.0 * area * t5.rhs);
  const RuleOutcome corr = corrected_functional(f, r, pt, db, q, integral);
  add("corrected", corr, single_cell_enclosure(f, r, pt, db, q).enclosure.width());
  return rep;
}

}  // namespace ostro
