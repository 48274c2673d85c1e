#include "ostro/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace ostro {
namespace {

GLRule build_rule(int n) {
  GLRule rule{n, std::vector<double>(n), std::vector<double>(n)};
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi initial guess for the i-th root, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-15) break;
    }
    // Recompute the derivative at the converged root for the weight.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = pk;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

struct RuleTable {
  std::array<GLRule, 65> rules;
  RuleTable() {
    for (int n = 2; n <= 64; ++n) rules[n] = build_rule(n);
  }
};

void check_sample(double v, double t, double s) {
  if (!std::isfinite(v)) {
    std::ostringstream os;
    os << "integrand returned " << v << " at (" << t << ", " << s << ")";
    throw Error(ErrorCode::NonFiniteSample, os.str());
  }
}

}  // namespace

const GLRule& gl_rule(int order) {
  if (order < 2 || order > 64) {
    throw Error(ErrorCode::UnsupportedOrder,
                "Gauss-Legendre order " + std::to_string(order) + " not in [2, 64]");
  }
  static const RuleTable table;
  return table.rules[order];
}

std::vector<double> panel_edges(double lo, double hi, int panels,
                                std::span<const double> breakpoints) {
  std::vector<double> edges;
  if (!(lo < hi)) {
    edges.push_back(lo);
    return edges;
  }
  edges.reserve(panels + 1 + breakpoints.size());
  const double step = (hi - lo) / panels;
  for (int i = 0; i < panels; ++i) edges.push_back(lo + i * step);
  edges.push_back(hi);
  for (double bp : breakpoints)
    if (lo < bp && bp < hi) edges.push_back(bp);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return edges;
}

double integrate_segment(const ScalarFn1& g, double lo, double hi, const QuadConfig& q,
                         std::span<const double> breakpoints) {
  q.validate();
  if (!(lo < hi)) return 0.0;
  const GLRule& rule = gl_rule(q.gl_order);
  const auto edges = panel_edges(lo, hi, q.panels, breakpoints);
  double total = 0.0;
  for (std::size_t p = 0; p + 1 < edges.size(); ++p) {
    const double half = 0.5 * (edges[p + 1] - edges[p]);
    const double mid = 0.5 * (edges[p + 1] + edges[p]);
    double acc = 0.0;
    for (int k = 0; k < rule.order; ++k) {
      const double t = mid + half * rule.nodes[k];
      const double v = g(t);
      check_sample(v, t, std::numeric_limits<double>::quiet_NaN());
      acc += rule.weights[k] * v;
    }
    total += half * acc;
  }
  return total;
}

double integrate_1d(const UnivariateFunction& g, const Interval1D& iv, const QuadConfig& q,
                    std::span<const double> breakpoints) {
  for (double bp : breakpoints) {
    if (!iv.contains(bp))
      throw Error(ErrorCode::OutOfRange, "breakpoint outside the integration interval");
  }
  return integrate_segment(g.eval, iv.lo(), iv.hi(), q, breakpoints);
}

double integrate_box(const ScalarFn2& f, double tlo, double thi, double slo, double shi,
                     const QuadConfig& q, std::span<const double> t_breaks,
                     std::span<const double> s_breaks) {
  q.validate();
  if (!(tlo < thi) || !(slo < shi)) return 0.0;
  const GLRule& rule = gl_rule(q.gl_order);
  const auto te = panel_edges(tlo, thi, q.panels, t_breaks);
  const auto se = panel_edges(slo, shi, q.panels, s_breaks);

  // Expand the s-direction nodes once; every t-node reuses them.
  std::vector<double> s_nodes;
  std::vector<double> s_weights;
  for (std::size_t p = 0; p + 1 < se.size(); ++p) {
    const double half = 0.5 * (se[p + 1] - se[p]);
    const double mid = 0.5 * (se[p + 1] + se[p]);
    for (int k = 0; k < rule.order; ++k) {
      s_nodes.push_back(mid + half * rule.nodes[k]);
      s_weights.push_back(half * rule.weights[k]);
    }
  }

  double total = 0.0;
  for (std::size_t p = 0; p + 1 < te.size(); ++p) {
    const double half = 0.5 * (te[p + 1] - te[p]);
    const double mid = 0.5 * (te[p + 1] + te[p]);
    double panel = 0.0;
    for (int k = 0; k < rule.order; ++k) {
      const double t = mid + half * rule.nodes[k];
      double inner = 0.0;
      for (std::size_t j = 0; j < s_nodes.size(); ++j) {
        const double v = f(t, s_nodes[j]);
        check_sample(v, t, s_nodes[j]);
        inner += s_weights[j] * v;
      }
      panel += rule.weights[k] * inner;
    }
    total += half * panel;
  }
  return total;
}

double integrate_2d(const BivariateFunction& f, const Rectangle& r, const QuadConfig& q,
                    std::optional<EvalPoint> split) {
  const ScalarFn2 g = [&f](double t, double s) { return f.eval(t, s); };
  if (split) {
    require_inside(r, *split);
    const double tb[] = {split->x};
    const double sb[] = {split->y};
    return integrate_box(g, r.a(), r.b(), r.c(), r.d(), q, tb, sb);
  }
  return integrate_box(g, r.a(), r.b(), r.c(), r.d(), q);
}

double mixed_partial_fd(const BivariateFunction& f, double t, double s, double h_t, double h_s) {
  const double v = (f(t + h_t, s + h_s) - f(t + h_t, s - h_s) - f(t - h_t, s + h_s) +
                    f(t - h_t, s - h_s)) /
                   (4.0 * h_t * h_s);
  check_sample(v, t, s);
  return v;
}

std::pair<double, double> default_fd_steps(const Rectangle& r) noexcept {
  const double base = std::cbrt(std::numeric_limits<double>::epsilon());
  return {base * r.t_axis().length(), base * r.s_axis().length()};
}

double mixed_partial_or_fd(const BivariateFunction& f, const Rectangle& r, double t, double s) {
  if (f.has_exact_mixed()) {
    const double v = f.mixed(t, s);
    check_sample(v, t, s);
    return v;
  }
  const auto [ht, hs] = default_fd_steps(r);
  const double tc = std::clamp(t, r.a() + ht, r.b() - ht);
  const double sc = std::clamp(s, r.c() + hs, r.d() - hs);
  return mixed_partial_fd(f, tc, sc, ht, hs);
}

BoundsEstimate estimate_bounds(const BivariateFunction& f, const Rectangle& r, int grid_n,
                               double pad_rel) {
  if (grid_n < 2) throw Error(ErrorCode::InvalidConfig, "grid_n must be >= 2");
  if (!(pad_rel >= 0.0)) throw Error(ErrorCode::InvalidConfig, "pad_rel must be >= 0");
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int i = 0; i < grid_n; ++i) {
    const double t = (i == grid_n - 1) ? r.b()
                                       : r.a() + r.t_axis().length() * i / (grid_n - 1);
    for (int j = 0; j < grid_n; ++j) {
      const double s = (j == grid_n - 1) ? r.d()
                                         : r.c() + r.s_axis().length() * j / (grid_n - 1);
      const double v = mixed_partial_or_fd(f, r, t, s);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  }
  const double pad = pad_rel * (hi - lo) + 1e-12;
  return BoundsEstimate{DerivativeBounds(lo - pad, hi + pad), lo, hi, !f.has_exact_mixed()};
}

}  // namespace ostro
