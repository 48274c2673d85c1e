#pragma once

#include <functional>
#include <string>
#include <utility>

#include "ostro/error.hpp"

namespace ostro {

/// Closed interval [lo, hi] with lo < hi.
class Interval1D {
 public:
  /// Throws DegenerateDomain unless lo < hi and both are finite.
  Interval1D(double lo, double hi);

  double lo() const noexcept { return lo_; }
  double hi() const noexcept { return hi_; }
  double length() const noexcept { return hi_ - lo_; }
  double midpoint() const noexcept { return 0.5 * (lo_ + hi_); }
  bool contains(double v) const noexcept { return lo_ <= v && v <= hi_; }

  friend bool operator==(const Interval1D&, const Interval1D&) = default;

 private:
  double lo_;
  double hi_;
};

/// The domain [a,b] x [c,d]; t runs along the first axis, s along the second.
class Rectangle {
 public:
  Rectangle(Interval1D t_axis, Interval1D s_axis) : t_(t_axis), s_(s_axis) {}

  const Interval1D& t_axis() const noexcept { return t_; }
  const Interval1D& s_axis() const noexcept { return s_; }
  double a() const noexcept { return t_.lo(); }
  double b() const noexcept { return t_.hi(); }
  double c() const noexcept { return s_.lo(); }
  double d() const noexcept { return s_.hi(); }
  double area() const noexcept { return t_.length() * s_.length(); }
  bool contains(double x, double y) const noexcept {
    return t_.contains(x) && s_.contains(y);
  }

  friend bool operator==(const Rectangle&, const Rectangle&) = default;

 private:
  Interval1D t_;
  Interval1D s_;
};

struct EvalPoint {
  double x;
  double y;
  friend bool operator==(const EvalPoint&, const EvalPoint&) = default;
};

Rectangle make_rectangle(double a, double b, double c, double d);

/// Throws PointOutsideDomain unless (x, y) lies in the closed rectangle.
EvalPoint make_point(const Rectangle& r, double x, double y);
EvalPoint midpoint(const Rectangle& r) noexcept;

/// Raises PointOutsideDomain if pt is outside r. Used by every operation that
/// takes a (Rectangle, EvalPoint) pair.
void require_inside(const Rectangle& r, const EvalPoint& pt);

/// lower <= d2f/dtds <= upper on the rectangle.
class DerivativeBounds {
 public:
  DerivativeBounds(double lower, double upper);

  double lower() const noexcept { return lower_; }
  double upper() const noexcept { return upper_; }
  /// (upper + lower) / 2
  double midpoint() const noexcept { return mid_; }
  /// (upper - lower) / 2
  double halfwidth() const noexcept { return half_; }
  double range() const noexcept { return upper_ - lower_; }

  friend bool operator==(const DerivativeBounds&, const DerivativeBounds&) = default;

 private:
  double lower_;
  double upper_;
  double mid_;
  double half_;
};

DerivativeBounds derivative_bounds(double lower, double upper);

/// Bound on f' for the one-dimensional rules: either |f'| <= M or
/// lower <= f' <= upper.
class DerivativeBound1D {
 public:
  enum class Kind { AbsBound, Range };

  static DerivativeBound1D abs_bound(double m);
  static DerivativeBound1D range(double lower, double upper);

  Kind kind() const noexcept { return kind_; }
  double abs_value() const;
  double lower() const;
  double upper() const;

 private:
  DerivativeBound1D(Kind kind, double v0, double v1) : kind_(kind), v0_(v0), v1_(v1) {}
  Kind kind_;
  double v0_;
  double v1_;
};

using ScalarFn1 = std::function<double(double)>;
using ScalarFn2 = std::function<double(double, double)>;

struct UnivariateFunction {
  ScalarFn1 eval;
  ScalarFn1 deriv;  // may be empty

  double operator()(double t) const { return eval(t); }
  bool has_deriv() const noexcept { return static_cast<bool>(deriv); }
};

/// f(t, s) with an optional exact mixed partial d2f/dtds. Implementations
/// must be safe to call concurrently.
class BivariateFunction {
 public:
  BivariateFunction() = default;
  explicit BivariateFunction(ScalarFn2 eval, ScalarFn2 mixed = {}, std::string label = {})
      : eval_(std::move(eval)), mixed_(std::move(mixed)), label_(std::move(label)) {}

  double operator()(double t, double s) const { return eval_(t, s); }
  double eval(double t, double s) const { return eval_(t, s); }

  bool has_exact_mixed() const noexcept { return static_cast<bool>(mixed_); }
  /// Throws MissingMixedPartial when has_exact_mixed() is false.
  double mixed(double t, double s) const;

  const std::string& label() const noexcept { return label_; }

  /// f(t, s) restricted to a line: s fixed.
  UnivariateFunction along_t(double s) const;
  /// f(t, s) restricted to a line: t fixed.
  UnivariateFunction along_s(double t) const;
  BivariateFunction scaled(double k) const;

 private:
  ScalarFn2 eval_;
  ScalarFn2 mixed_;
  std::string label_;
};

struct Enclosure {
  double lo;
  double hi;

  double center() const noexcept { return 0.5 * (lo + hi); }
  double width() const noexcept { return hi - lo; }
  bool contains(double v) const noexcept { return lo <= v && v <= hi; }
};

/// Composite Gauss-Legendre settings.
struct QuadConfig {
  int gl_order = 16;
  int panels = 8;
  /// Quadrature-noise budget; enclosures whose padding exceeds
  /// abs_tol (1 + |center| + radius) are not marked rigorous.
  double abs_tol = 1e-10;

  void validate() const;
  QuadConfig refined() const;
};

}  // namespace ostro
