#include "ostro/rules.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "ostro/quadrature.hpp"

namespace ostro {
namespace {

void require_in_interval(const Interval1D& iv, double x) {
  if (!iv.contains(x)) {
    std::ostringstream os;
    os << "x = " << x << " outside [" << iv.lo() << ", " << iv.hi() << "]";
    throw Error(ErrorCode::PointOutsideDomain, os.str());
  }
}

double line_t(const BivariateFunction& f, const Rectangle& r, double s, const QuadConfig& q) {
  return integrate_segment([&f, s](double t) { return f(t, s); }, r.a(), r.b(), q);
}

double line_s(const BivariateFunction& f, const Rectangle& r, double t, const QuadConfig& q) {
  return integrate_segment([&f, t](double s) { return f(t, s); }, r.c(), r.d(), q);
}

double double_integral_or(const BivariateFunction& f, const Rectangle& r, const QuadConfig& q,
                          std::optional<double> given) {
  return given ? *given : integrate_2d(f, r, q);
}

// |sum over quadrants of int (t - rt)(s - rs)(d2f/dtds - M)| / area, with the
// root chosen by the side of the anchor.
double kernel_route(const BivariateFunction& f, const Rectangle& r, const EvalPoint& pt,
                    double m, double t_left_root, double t_right_root, double s_low_root,
                    double s_high_root, const QuadConfig& q) {
  double total = 0.0;
  const double ts[3] = {r.a(), pt.x, r.b()};
  const double ss[3] = {r.c(), pt.y, r.d()};
  for (int i = 0; i < 2; ++i) {
    const double rt = i == 0 ? t_left_root : t_right_root;
    for (int j = 0; j < 2; ++j) {
      const double rs = j == 0 ? s_low_root : s_high_root;
      total += integrate_box(
          [&](double t, double s) { return (t - rt) * (s - rs) * (mixed_partial_or_fd(f, r, t, s) - m); },
          ts[i], ts[i + 1], ss[j], ss[j + 1], q);
    }
  }
  return std::abs(total) / r.area();
}

}  // namespace

RuleOutcome make_outcome(double lhs, double rhs, double slack_rel) {
  const double slack = slack_rel * (1.0 + std::abs(rhs));
  return {lhs, rhs, slack, lhs <= rhs + slack};
}

Lambda::Lambda(double value) : value_(value) {
  if (!(value >= 0.0 && value <= 1.0))
    throw Error(ErrorCode::InvalidLambda, "lambda must lie in [0, 1]");
}

RuleOutcome ostrowski_1d(const UnivariateFunction& f, const Interval1D& iv, double x,
                         const DerivativeBound1D& m, const QuadConfig& q, double slack_rel) {
  require_in_interval(iv, x);
  const double len = iv.length();
  const double avg = integrate_1d(f, iv, q) / len;
  const double lhs = std::abs(f(x) - avg);
  const double off = x - iv.midpoint();
  const double rhs = (0.25 + off * off / (len * len)) * len * m.abs_value();
  return make_outcome(lhs, rhs, slack_rel);
}

RuleOutcome cheng_1d(const UnivariateFunction& f, const Interval1D& iv, double x,
                     const DerivativeBound1D& range, const QuadConfig& q, double slack_rel) {
  require_in_interval(iv, x);
  const double a = iv.lo(), b = iv.hi(), len = iv.length();
  const double avg = integrate_1d(f, iv, q) / len;
  const double lhs =
      std::abs(0.5 * f(x) - ((x - b) * f(b) - (x - a) * f(a)) / (2.0 * len) - avg);
  const double rhs = ((x - a) * (x - a) + (b - x) * (b - x)) / (8.0 * len) *
                     (range.upper() - range.lower());
  return make_outcome(lhs, rhs, slack_rel);
}

double sarikaya_H(const BivariateFunction& f, const Rectangle& r, const EvalPoint& pt) {
  require_inside(r, pt);
  const double a = r.a(), b = r.b(), c = r.c(), d = r.d(), x = pt.x, y = pt.y;
  const double wt = b - a, ws = d - c;
  const double corner = ((x - a) * ((y - c) * f(a, c) + (d - y) * f(a, d)) +
                         (b - x) * ((y - c) * f(b, c) + (d - y) * f(b, d))) /
                        (wt * ws);
  const double edge_t = ((x - a) * f(a, y) + (b - x) * f(b, y)) / wt;
  const double edge_s = ((y - c) * f(x, c) + (d - y) * f(x, d)) / ws;
  return corner + edge_t + edge_s;
}

double sarikaya_rhs(const Rectangle& r, const EvalPoint& pt, const DerivativeBounds& db) {
  require_inside(r, pt);
  const double xa = pt.x - r.a(), bx = r.b() - pt.x, yc = pt.y - r.c(), dy = r.d() - pt.y;
  return (xa * xa + bx * bx) * (yc * yc + dy * dy) / (32.0 * r.area()) * db.range();
}

RuleOutcome sarikaya_functional(const BivariateFunction& f, const Rectangle& r,
                                const EvalPoint& pt, const DerivativeBounds& db,
                                const QuadConfig& q, std::optional<double> double_integral,
                                double slack_rel) {
  require_inside(r, pt);
  const double a = r.a(), b = r.b(), c = r.c(), d = r.d(), x = pt.x, y = pt.y;
  const double wt = b - a, ws = d - c, area = r.area();

  const double value = 0.25 * f(x, y) + 0.25 * sarikaya_H(f, r, pt) -
                       line_t(f, r, y, q) / (2.0 * wt) - line_s(f, r, x, q) / (2.0 * ws) -
                       ((y - c) * line_t(f, r, c, q) + (d - y) * line_t(f, r, d, q)) /
                           (2.0 * area) -
                       ((x - a) * line_s(f, r, a, q) + (b - x) * line_s(f, r, b, q)) /
                           (2.0 * area) +
                       double_integral_or(f, r, q, double_integral) / area;
  return make_outcome(std::abs(value), sarikaya_rhs(r, pt, db), slack_rel);
}

bool in_lambda_box(const Rectangle& r, const EvalPoint& pt, const Lambda& lam) noexcept {
  const double eps = std::numeric_limits<double>::epsilon();
  const double lam_half = 0.5 * lam.value();
  const double tol_t = 4.0 * eps * (std::abs(r.a()) + std::abs(r.b()));
  const double tol_s = 4.0 * eps * (std::abs(r.c()) + std::abs(r.d()));
  const double wt = r.t_axis().length(), ws = r.s_axis().length();
  return pt.x >= r.a() + lam_half * wt - tol_t && pt.x <= r.b() - lam_half * wt + tol_t &&
         pt.y >= r.c() + lam_half * ws - tol_s && pt.y <= r.d() - lam_half * ws + tol_s &&
         r.contains(pt.x, pt.y);
}

double qiaoling_rhs(const Rectangle& r, const EvalPoint& pt, const DerivativeBounds& db,
                    const Lambda& lam) {
  require_inside(r, pt);
  const double l = lam.value();
  const double mix = l * l + (1.0 - l) * (1.0 - l);
  const double wt = r.t_axis().length(), ws = r.s_axis().length();
  const double ox = pt.x - r.t_axis().midpoint(), oy = pt.y - r.s_axis().midpoint();
  return 0.5 * db.range() / r.area() * (mix * wt * wt / 4.0 + ox * ox) *
         (mix * ws * ws / 4.0 + oy * oy);
}

RuleOutcome qiaoling_functional(const BivariateFunction& f, const Rectangle& r,
                                const EvalPoint& pt, const DerivativeBounds& db,
                                const Lambda& lam, const QuadConfig& q,
                                std::optional<double> double_integral, double slack_rel) {
  require_inside(r, pt);
  if (!in_lambda_box(r, pt, lam)) {
    std::ostringstream os;
    os << "point (" << pt.x << ", " << pt.y << ") outside the lambda = " << lam.value()
       << " box";
    throw Error(ErrorCode::PointOutsideLambdaBox, os.str());
  }
  const double a = r.a(), b = r.b(), c = r.c(), d = r.d(), x = pt.x, y = pt.y;
  const double l = lam.value(), one = 1.0 - l, half = 0.5 * l;
  const double wt = b - a, ws = d - c;

  const double value =
      one * one * f(x, y) + half * one * (f(a, y) + f(b, y) + f(x, c) + f(x, d)) +
      half * half * (f(a, c) + f(b, c) + f(a, d) + f(b, d)) -
      (one * line_t(f, r, y, q) + half * (line_t(f, r, c, q) + line_t(f, r, d, q))) / wt -
      (one * line_s(f, r, x, q) + half * (line_s(f, r, a, q) + line_s(f, r, b, q))) / ws -
      db.midpoint() * one * one * (x - r.t_axis().midpoint()) * (y - r.s_axis().midpoint()) +
      double_integral_or(f, r, q, double_integral) / r.area();
  return make_outcome(std::abs(value), qiaoling_rhs(r, pt, db, lam), slack_rel);
}

double sarikaya_kernel_route(const BivariateFunction& f, const Rectangle& r, const EvalPoint& pt,
                             const DerivativeBounds& db, const QuadConfig& q) {
  require_inside(r, pt);
  return kernel_route(f, r, pt, db.midpoint(), 0.5 * (r.a() + pt.x), 0.5 * (r.b() + pt.x),
                      0.5 * (r.c() + pt.y), 0.5 * (r.d() + pt.y), q);
}

double qiaoling_kernel_route(const BivariateFunction& f, const Rectangle& r, const EvalPoint& pt,
                             const DerivativeBounds& db, const Lambda& lam, const QuadConfig& q) {
  require_inside(r, pt);
  const double ht = 0.5 * lam.value() * r.t_axis().length();
  const double hs = 0.5 * lam.value() * r.s_axis().length();
  return kernel_route(f, r, pt, db.midpoint(), r.a() + ht, r.b() - ht, r.c() + hs, r.d() - hs, q);
}

double theorem5_K(const Rectangle& r, const EvalPoint& pt) {
  require_inside(r, pt);
  const double xa = pt.x - r.a(), bx = r.b() - pt.x, yc = pt.y - r.c(), dy = r.d() - pt.y;
  return (3.0 * xa - bx) * (3.0 * yc - dy) / r.area();
}

double theorem5_H(const BivariateFunction& f, const Rectangle& r, const EvalPoint& pt) {
  require_inside(r, pt);
  const double a = r.a(), b = r.b(), c = r.c(), d = r.d(), x = pt.x, y = pt.y;
  const double xa = x - a, bx = b - x, yc = y - c, dy = d - y;
  const double blocks = (3.0 * bx * f(b, y) - xa * f(a, y)) * (3.0 * yc - dy) +
                        (3.0 * dy * f(x, d) - yc * f(x, c)) * (3.0 * xa - bx) +
                        (yc * f(a, c) - 3.0 * dy * f(a, d)) * xa +
                        (3.0 * dy * f(b, d) - yc * f(b, c)) * bx;
  return blocks / r.area();
}

double theorem5_rhs(const Rectangle& r, const EvalPoint& pt, const DerivativeBounds& db) {
  require_inside(r, pt);
  const double xa = pt.x - r.a(), bx = r.b() - pt.x, yc = pt.y - r.c(), dy = r.d() - pt.y;
  return 25.0 * (yc * yc + dy * dy) * (xa * xa + bx * bx) / (512.0 * r.area()) * db.range();
}

RuleOutcome theorem5_functional(const BivariateFunction& f, const Rectangle& r,
                                const EvalPoint& pt, const DerivativeBounds& db,
                                const QuadConfig& q, std::optional<double> double_integral,
                                double slack_rel) {
  require_inside(r, pt);
  const double a = r.a(), b = r.b(), c = r.c(), d = r.d(), x = pt.x, y = pt.y;
  const double xa = x - a, bx = b - x, yc = y - c, dy = d - y;
  const double area = r.area();
  const double w = 1.0 / (4.0 * area);

  // The first two stated integrands are (3(x-a) - (b-x)) f(x, s) and
  // (3(y-c) - (d-y)) f(t, y).
  const double value =
      theorem5_K(r, pt) * f(x, y) / 16.0 + theorem5_H(f, r, pt) / 16.0 -
      w * (3.0 * xa - bx) * line_s(f, r, x, q) - w * (3.0 * yc - dy) * line_t(f, r, y, q) -
      w * (3.0 * bx * line_s(f, r, b, q) - xa * line_s(f, r, a, q)) -
      w * (3.0 * dy * line_t(f, r, d, q) - yc * line_t(f, r, c, q)) -
      (yc * yc - dy * dy) * (xa * xa - bx * bx) / (32.0 * area) * (db.lower() + db.upper()) +
      double_integral_or(f, r, q, double_integral) / area;
  return make_outcome(std::abs(value), theorem5_rhs(r, pt, db), slack_rel);
}

}  // namespace ostro
