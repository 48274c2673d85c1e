#pragma once

#include "ostro/core.hpp"

namespace ostro {

/// Piecewise-linear Peano kernel on [lo, hi] anchored at `anchor`:
///   t - (3 lo + anchor)/4   for t in [lo, anchor]
///   t - (3 hi + anchor)/4   for t in (anchor, hi]
/// p(x, .) is the kernel on [a,b] anchored at x; q(y, .) the one on [c,d] at y.
class Kernel1D {
 public:
  /// Throws PointOutsideDomain if the anchor is not in the interval.
  Kernel1D(Interval1D interval, double anchor);

  const Interval1D& interval() const noexcept { return iv_; }
  double anchor() const noexcept { return anchor_; }
  /// Zero of the left branch, (3 lo + anchor)/4.
  double left_root() const noexcept { return 0.25 * (3.0 * iv_.lo() + anchor_); }
  /// Zero of the right branch, (3 hi + anchor)/4.
  double right_root() const noexcept { return 0.25 * (3.0 * iv_.hi() + anchor_); }

 private:
  Interval1D iv_;
  double anchor_;
};

Kernel1D t_kernel(const Rectangle& r, const EvalPoint& pt);
Kernel1D s_kernel(const Rectangle& r, const EvalPoint& pt);

/// At t == anchor the left branch applies. Throws OutOfRange outside the interval.
double kernel_eval(const Kernel1D& k, double t);

struct KernelJump {
  double left_limit;   // 3(x - a)/4
  double right_limit;  // -3(b - x)/4
};

/// Throws AnchorOnBoundary when the anchor is an endpoint.
KernelJump kernel_jump(const Kernel1D& k);

/// Integral of the kernel over its interval: ((x-a)^2 - (b-x)^2)/4.
double signed_moment_1d(const Kernel1D& k) noexcept;
/// Integral of |kernel|: 5((x-a)^2 + (b-x)^2)/16.
double abs_moment_1d(const Kernel1D& k) noexcept;

/// Integral of p(x,t) q(y,s) over the rectangle:
/// [(y-c)^2 - (d-y)^2][(x-a)^2 - (b-x)^2] / 16.
double signed_moment(const Rectangle& r, const EvalPoint& pt);
/// Integral of |p(x,t) q(y,s)|: 25[(y-c)^2 + (d-y)^2][(x-a)^2 + (b-x)^2] / 256.
double abs_moment(const Rectangle& r, const EvalPoint& pt);

}  // namespace ostro
