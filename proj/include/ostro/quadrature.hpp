#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ostro/core.hpp"

namespace ostro {

/// Gauss-Legendre rule on [-1, 1].
struct GLRule {
  int order;
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Tables are built once on first use and shared. Throws UnsupportedOrder
/// outside [2, 64].
const GLRule& gl_rule(int order);

/// Panel edges for [lo, hi]: `panels` equal panels with every breakpoint in
/// (lo, hi) inserted as an extra edge. lo == hi yields a single edge.
std::vector<double> panel_edges(double lo, double hi, int panels,
                                std::span<const double> breakpoints = {});

/// Composite GL integral of g over [lo, hi]. Unlike Interval1D the segment
/// may be empty (lo == hi), which integrates to zero.
double integrate_segment(const ScalarFn1& g, double lo, double hi, const QuadConfig& q,
                         std::span<const double> breakpoints = {});

double integrate_1d(const UnivariateFunction& g, const Interval1D& iv, const QuadConfig& q,
                    std::span<const double> breakpoints = {});

/// Tensor-product composite GL over [tlo, thi] x [slo, shi] for any
/// callable; degenerate sides integrate to zero.
double integrate_box(const ScalarFn2& f, double tlo, double thi, double slo, double shi,
                     const QuadConfig& q, std::span<const double> t_breaks = {},
                     std::span<const double> s_breaks = {});

double integrate_2d(const BivariateFunction& f, const Rectangle& r, const QuadConfig& q,
                    std::optional<EvalPoint> split = std::nullopt);

/// Cross central difference for d2f/dtds.
double mixed_partial_fd(const BivariateFunction& f, double t, double s, double h_t, double h_s);

/// h = cbrt(eps) * axis length, per axis.
std::pair<double, double> default_fd_steps(const Rectangle& r) noexcept;

/// Mixed partial of f at (t, s): the exact one when present, otherwise the
/// cross stencil with default steps, re-centred so all four stencil points
/// stay inside r.
double mixed_partial_or_fd(const BivariateFunction& f, const Rectangle& r, double t, double s);

struct BoundsEstimate {
  DerivativeBounds bounds;
  double sampled_min;
  double sampled_max;
  bool used_finite_differences;
  /// Always false: sampling cannot certify a global bound.
  bool rigorous = false;
};

/// Min/max of the mixed partial over a grid_n x grid_n grid that includes the
/// boundary lines, widened on each side by pad_rel * (max - min) + 1e-12.
BoundsEstimate estimate_bounds(const BivariateFunction& f, const Rectangle& r, int grid_n,
                               double pad_rel);

}  // namespace ostro
