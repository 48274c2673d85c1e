#include "ostro/identity.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "ostro/kernels.hpp"
#include "ostro/quadrature.hpp"

namespace ostro {

std::string_view to_string(Quadrant q) noexcept {
  switch (q) {
    case Quadrant::LL: return "LL";
    case Quadrant::LU: return "LU";
    case Quadrant::RL: return "RL";
    case Quadrant::RU: return "RU";
  }
  return "?";
}

namespace {

struct Box {
  double t0, t1, s0, s1;
  bool left_t, low_s;
};

Box quadrant_box(const Rectangle& r, const EvalPoint& pt, Quadrant quad) {
  const bool left = quad == Quadrant::LL || quad == Quadrant::LU;
  const bool low = quad == Quadrant::LL || quad == Quadrant::RL;
  return {left ? r.a() : pt.x, left ? pt.x : r.b(), low ? r.c() : pt.y, low ? pt.y : r.d(),
          left, low};
}

double seg_t(const BivariateFunction& f, double s, double lo, double hi, const QuadConfig& q) {
  return integrate_segment([&f, s](double t) { return f(t, s); }, lo, hi, q);
}

double seg_s(const BivariateFunction& f, double t, double lo, double hi, const QuadConfig& q) {
  return integrate_segment([&f, t](double s) { return f(t, s); }, lo, hi, q);
}

// One axis of a boundary functional: point weights, and the segment whose
// integral is subtracted.
struct AxisFunctional {
  std::vector<double> nodes;
  std::vector<double> weights;
  double lo;
  double hi;
  std::vector<double> breaks;
};

ExpansionParts tensor_functional(const BivariateFunction& f, const AxisFunctional& ft,
                                 const AxisFunctional& fs, const QuadConfig& q,
                                 bool include_double_integral, bool estimate_line_noise) {
  ExpansionParts parts;
  for (std::size_t i = 0; i < ft.nodes.size(); ++i) {
    for (std::size_t j = 0; j < fs.nodes.size(); ++j) {
      const double term = ft.weights[i] * fs.weights[j] * f(ft.nodes[i], fs.nodes[j]);
      parts.node_terms += term;
      parts.magnitude += std::abs(term);
    }
  }
  const QuadConfig fine = q.refined();
  auto line = [&](const ScalarFn1& g, double lo, double hi, const std::vector<double>& br,
                  double weight) {
    const double v = integrate_segment(g, lo, hi, q, br);
    parts.line_terms += weight * v;
    parts.magnitude += std::abs(weight * v);
    if (estimate_line_noise)
      parts.line_noise += std::abs(weight * (v - integrate_segment(g, lo, hi, fine, br)));
  };
  for (std::size_t i = 0; i < ft.nodes.size(); ++i) {
    const double t = ft.nodes[i];
    line([&f, t](double s) { return f(t, s); }, fs.lo, fs.hi, fs.breaks, ft.weights[i]);
  }
  for (std::size_t j = 0; j < fs.nodes.size(); ++j) {
    const double s = fs.nodes[j];
    line([&f, s](double t) { return f(t, s); }, ft.lo, ft.hi, ft.breaks, fs.weights[j]);
  }
  if (include_double_integral) {
    parts.double_integral = integrate_box([&f](double t, double s) { return f(t, s); }, ft.lo,
                                          ft.hi, fs.lo, fs.hi, q, ft.breaks, fs.breaks);
  }
  return parts;
}

// Left branch on [lo, anchor]: 3L/4 g(anchor) + L/4 g(lo) - int.
// Right branch on [anchor, hi]: 3R/4 g(anchor) + R/4 g(hi) - int.
AxisFunctional branch_functional(double lo, double anchor, double hi, bool left) {
  if (left) {
    const double w = anchor - lo;
    return {{anchor, lo}, {0.75 * w, 0.25 * w}, lo, anchor, {}};
  }
  const double w = hi - anchor;
  return {{anchor, hi}, {0.75 * w, 0.25 * w}, anchor, hi, {}};
}

AxisFunctional full_functional(double lo, double anchor, double hi) {
  return {{anchor, lo, hi},
          {0.75 * (hi - lo), 0.25 * (anchor - lo), 0.25 * (hi - anchor)},
          lo,
          hi,
          {anchor}};
}

}  // namespace

double quadrant_kernel_weighted_integral(const BivariateFunction& f, const Rectangle& r,
                                         const EvalPoint& pt, Quadrant quad, const QuadConfig& q,
                                         MixedSource src) {
  require_inside(r, pt);
  if (src == MixedSource::ExactOnly && !f.has_exact_mixed())
    throw Error(ErrorCode::MissingMixedPartial,
                "kernel-weighted integral needs an exact mixed partial");
  const Box box = quadrant_box(r, pt, quad);
  const Kernel1D kt = t_kernel(r, pt);
  const Kernel1D ks = s_kernel(r, pt);
  const double t_shift = box.left_t ? kt.left_root() : kt.right_root();
  const double s_shift = box.low_s ? ks.left_root() : ks.right_root();
  return integrate_box(
      [&](double t, double s) {
        return (t - t_shift) * (s - s_shift) * mixed_partial_or_fd(f, r, t, s);
      },
      box.t0, box.t1, box.s0, box.s1, q);
}

double kernel_weighted_integral(const BivariateFunction& f, const Rectangle& r,
                                const EvalPoint& pt, const QuadConfig& q, MixedSource src) {
  double total = 0.0;
  for (Quadrant quad : kQuadrants) total += quadrant_kernel_weighted_integral(f, r, pt, quad, q, src);
  return total;
}

double quadrant_expansion_verbatim(const BivariateFunction& f, const Rectangle& r,
                                   const EvalPoint& pt, Quadrant quad, const QuadConfig& q) {
  require_inside(r, pt);
  const Box bx = quadrant_box(r, pt, quad);
  const double wt = bx.t1 - bx.t0, ws = bx.s1 - bx.s0;
  const double corners = 9.0 * f(bx.t1, bx.s1) - 3.0 * f(bx.t1, bx.s0) - 3.0 * f(bx.t0, bx.s1) +
                         f(bx.t0, bx.s0);
  const double along_s =
      3.0 * seg_s(f, bx.t1, bx.s0, bx.s1, q) - seg_s(f, bx.t0, bx.s0, bx.s1, q);
  const double along_t =
      3.0 * seg_t(f, bx.s1, bx.t0, bx.t1, q) - seg_t(f, bx.s0, bx.t0, bx.t1, q);
  const double area_int = integrate_box([&f](double t, double s) { return f(t, s); }, bx.t0,
                                        bx.t1, bx.s0, bx.s1, q);
  return wt * ws / 16.0 * corners - wt / 4.0 * along_s - ws / 4.0 * along_t + area_int;
}

double verbatim_reassembly_terms(const BivariateFunction& f, const Rectangle& r,
                                 const EvalPoint& pt) {
  require_inside(r, pt);
  const double bx = r.b() - pt.x, yc = pt.y - r.c(), dy = r.d() - pt.y;
  return bx * yc / 8.0 * f(r.b(), r.c()) - 3.0 * bx * dy / 8.0 * f(r.b(), r.d());
}

double full_expansion_verbatim(const BivariateFunction& f, const Rectangle& r,
                               const EvalPoint& pt, const QuadConfig& q) {
  require_inside(r, pt);
  const double a = r.a(), b = r.b(), c = r.c(), d = r.d(), x = pt.x, y = pt.y;
  const double xa = x - a, bx = b - x, yc = y - c, dy = d - y;
  const double kt = 3.0 * xa - bx, ks = 3.0 * yc - dy;

  const double block = kt * ks * f(x, y) + (3.0 * bx * f(b, y) - xa * f(a, y)) * ks +
                       (3.0 * dy * f(x, d) - yc * f(x, c)) * kt +
                       (yc * f(a, c) - 3.0 * dy * f(a, d)) * xa +
                       (3.0 * dy * f(b, d) - yc * f(b, c)) * bx;
  const double ls_x = seg_s(f, x, c, d, q), ls_a = seg_s(f, a, c, d, q),
               ls_b = seg_s(f, b, c, d, q);
  const double lt_y = seg_t(f, y, a, b, q), lt_c = seg_t(f, c, a, b, q),
               lt_d = seg_t(f, d, a, b, q);
  const double area_int = integrate_2d(f, r, q, pt);
  return block / 16.0 - 0.25 * kt * ls_x - 0.25 * ks * lt_y -
         0.25 * (3.0 * bx * ls_b - xa * ls_a) - 0.25 * (3.0 * dy * lt_d - yc * lt_c) + area_int;
}

ExpansionParts derived_expansion_parts(const BivariateFunction& f, const Rectangle& r,
                                       const EvalPoint& pt, const QuadConfig& q,
                                       bool include_double_integral, bool estimate_line_noise) {
  require_inside(r, pt);
  return tensor_functional(f, full_functional(r.a(), pt.x, r.b()),
                           full_functional(r.c(), pt.y, r.d()), q, include_double_integral,
                           estimate_line_noise);
}

double full_expansion_derived(const BivariateFunction& f, const Rectangle& r,
                              const EvalPoint& pt, const QuadConfig& q) {
  return derived_expansion_parts(f, r, pt, q, true, false).value();
}

double quadrant_expansion_derived(const BivariateFunction& f, const Rectangle& r,
                                  const EvalPoint& pt, Quadrant quad, const QuadConfig& q) {
  require_inside(r, pt);
  const Box bx = quadrant_box(r, pt, quad);
  return tensor_functional(f, branch_functional(r.a(), pt.x, r.b(), bx.left_t),
                           branch_functional(r.c(), pt.y, r.d(), bx.low_s), q, true, false)
      .value();
}

IdentityReport identity_report(const BivariateFunction& f, const Rectangle& r,
                               const EvalPoint& pt, const QuadConfig& q, double tol) {
  if (!f.has_exact_mixed())
    throw Error(ErrorCode::MissingMixedPartial, "identity audit needs an exact mixed partial");
  IdentityReport rep{};
  rep.tol = tol;
  double max_v = 0.0, max_d = 0.0;
  for (std::size_t i = 0; i < kQuadrants.size(); ++i) {
    const Quadrant quad = kQuadrants[i];
    QuadrantAudit qa{quad, quadrant_expansion_verbatim(f, r, pt, quad, q),
                     quadrant_expansion_derived(f, r, pt, quad, q),
                     quadrant_kernel_weighted_integral(f, r, pt, quad, q, MixedSource::ExactOnly)};
    max_v = std::max(max_v, std::abs(qa.verbatim - qa.oracle));
    max_d = std::max(max_d, std::abs(qa.derived - qa.oracle));
    rep.per_quadrant[i] = qa;
  }
  rep.oracle_value = kernel_weighted_integral(f, r, pt, q, MixedSource::ExactOnly);
  rep.verbatim_value = full_expansion_verbatim(f, r, pt, q);
  rep.derived_value = full_expansion_derived(f, r, pt, q);
  max_v = std::max(max_v, std::abs(rep.verbatim_value - rep.oracle_value));
  max_d = std::max(max_d, std::abs(rep.derived_value - rep.oracle_value));
  rep.max_abs_discrepancy_verbatim = max_v;
  rep.max_abs_discrepancy_derived = max_d;
  rep.ok = std::abs(rep.derived_value - rep.oracle_value) <= tol * (1.0 + std::abs(rep.oracle_value));
  return rep;
}

}  // namespace ostro
