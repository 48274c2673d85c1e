#include "ostro/kernels.hpp"

#include <sstream>

namespace ostro {

Kernel1D::Kernel1D(Interval1D interval, double anchor) : iv_(interval), anchor_(anchor) {
  if (!iv_.contains(anchor)) {
    std::ostringstream os;
    os << "kernel anchor " << anchor << " outside [" << iv_.lo() << ", " << iv_.hi() << "]";
    throw Error(ErrorCode::PointOutsideDomain, os.str());
  }
}

Kernel1D t_kernel(const Rectangle& r, const EvalPoint& pt) { return {r.t_axis(), pt.x}; }
Kernel1D s_kernel(const Rectangle& r, const EvalPoint& pt) { return {r.s_axis(), pt.y}; }

double kernel_eval(const Kernel1D& k, double t) {
  if (!k.interval().contains(t)) {
    std::ostringstream os;
    os << "t = " << t << " outside kernel interval";
    throw Error(ErrorCode::OutOfRange, os.str());
  }
  return t <= k.anchor() ? t - k.left_root() : t - k.right_root();
}

KernelJump kernel_jump(const Kernel1D& k) {
  const double a = k.interval().lo();
  const double b = k.interval().hi();
  const double x = k.anchor();
  if (x == a || x == b)
    throw Error(ErrorCode::AnchorOnBoundary, "kernel jump needs an interior anchor");
  return {0.75 * (x - a), -0.75 * (b - x)};
}

double signed_moment_1d(const Kernel1D& k) noexcept {
  const double left = k.anchor() - k.interval().lo();
  const double right = k.interval().hi() - k.anchor();
  return 0.25 * (left * left - right * right);
}

double abs_moment_1d(const Kernel1D& k) noexcept {
  const double left = k.anchor() - k.interval().lo();
  const double right = k.interval().hi() - k.anchor();
  return 5.0 * (left * left + right * right) / 16.0;
}

double signed_moment(const Rectangle& r, const EvalPoint& pt) {
  require_inside(r, pt);
  const double xa = pt.x - r.a(), bx = r.b() - pt.x;
  const double yc = pt.y - r.c(), dy = r.d() - pt.y;
  return (yc * yc - dy * dy) * (xa * xa - bx * bx) / 16.0;
}

double abs_moment(const Rectangle& r, const EvalPoint& pt) {
  require_inside(r, pt);
  const double xa = pt.x - r.a(), bx = r.b() - pt.x;
  const double yc = pt.y - r.c(), dy = r.d() - pt.y;
  return 25.0 * (yc * yc + dy * dy) * (xa * xa + bx * bx) / 256.0;
}

}  // namespace ostro
