#include "ostro/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ostro {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::DegenerateDomain: return "DegenerateDomain";
    case ErrorCode::PointOutsideDomain: return "PointOutsideDomain";
    case ErrorCode::InvalidBounds: return "InvalidBounds";
    case ErrorCode::InvalidLambda: return "InvalidLambda";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::AnchorOnBoundary: return "AnchorOnBoundary";
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::NonFiniteSample: return "NonFiniteSample";
    case ErrorCode::MissingMixedPartial: return "MissingMixedPartial";
    case ErrorCode::PointOutsideLambdaBox: return "PointOutsideLambdaBox";
    case ErrorCode::LexError: return "LexError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::UnsupportedDerivative: return "UnsupportedDerivative";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorCode code, const std::string& message,
                     std::optional<std::size_t> position) {
  std::ostringstream os;
  os << to_string(code) << ": " << message;
  if (position) os << " (at offset " << *position << ")";
  return os.str();
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message, std::optional<std::size_t> position)
    : std::runtime_error(decorate(code, message, position)), code_(code), position_(position) {}

Interval1D::Interval1D(double lo, double hi) : lo_(lo), hi_(hi) {
  if (!std::isfinite(lo) || !std::isfinite(hi) || !(lo < hi)) {
    std::ostringstream os;
    os << "interval [" << lo << ", " << hi << "] must satisfy lo < hi";
    throw Error(ErrorCode::DegenerateDomain, os.str());
  }
}

Rectangle make_rectangle(double a, double b, double c, double d) {
  return Rectangle(Interval1D(a, b), Interval1D(c, d));
}

void require_inside(const Rectangle& r, const EvalPoint& pt) {
  if (!r.contains(pt.x, pt.y)) {
    std::ostringstream os;
    os << "point (" << pt.x << ", " << pt.y << ") outside [" << r.a() << ", " << r.b()
       << "] x [" << r.c() << ", " << r.d() << "]";
    throw Error(ErrorCode::PointOutsideDomain, os.str());
  }
}

EvalPoint make_point(const Rectangle& r, double x, double y) {
  EvalPoint pt{x, y};
  require_inside(r, pt);
  return pt;
}

EvalPoint midpoint(const Rectangle& r) noexcept {
  return {r.t_axis().midpoint(), r.s_axis().midpoint()};
}

DerivativeBounds::DerivativeBounds(double lower, double upper) : lower_(lower), upper_(upper) {
  if (!std::isfinite(lower) || !std::isfinite(upper) || lower > upper) {
    std::ostringstream os;
    os << "derivative bounds (" << lower << ", " << upper << ") need lower <= upper";
    throw Error(ErrorCode::InvalidBounds, os.str());
  }
  mid_ = 0.5 * (upper_ + lower_);
  half_ = 0.5 * (upper_ - lower_);
}

DerivativeBounds derivative_bounds(double lower, double upper) {
  return DerivativeBounds(lower, upper);
}

DerivativeBound1D DerivativeBound1D::abs_bound(double m) {
  if (!std::isfinite(m) || m < 0.0)
    throw Error(ErrorCode::InvalidBounds, "|f'| bound must be a finite value >= 0");
  return DerivativeBound1D(Kind::AbsBound, m, m);
}

DerivativeBound1D DerivativeBound1D::range(double lower, double upper) {
  if (!std::isfinite(lower) || !std::isfinite(upper) || lower > upper)
    throw Error(ErrorCode::InvalidBounds, "f' range needs lower <= upper");
  return DerivativeBound1D(Kind::Range, lower, upper);
}

double DerivativeBound1D::abs_value() const {
  if (kind_ != Kind::AbsBound)
    throw Error(ErrorCode::InvalidBounds, "expected an |f'| <= M bound, got a range");
  return v0_;
}

double DerivativeBound1D::lower() const {
  if (kind_ != Kind::Range)
    throw Error(ErrorCode::InvalidBounds, "expected a range bound, got |f'| <= M");
  return v0_;
}

double DerivativeBound1D::upper() const {
  if (kind_ != Kind::Range)
    throw Error(ErrorCode::InvalidBounds, "expected a range bound, got |f'| <= M");
  return v1_;
}

double BivariateFunction::mixed(double t, double s) const {
  if (!mixed_) throw Error(ErrorCode::MissingMixedPartial, "function has no exact mixed partial");
  return mixed_(t, s);
}

UnivariateFunction BivariateFunction::along_t(double s) const {
  return {[f = eval_, s](double t) { return f(t, s); }, {}};
}

UnivariateFunction BivariateFunction::along_s(double t) const {
  return {[f = eval_, t](double s) { return f(t, s); }, {}};
}

BivariateFunction BivariateFunction::scaled(double k) const {
  ScalarFn2 m;
  if (mixed_) m = [g = mixed_, k](double t, double s) { return k * g(t, s); };
  return BivariateFunction([g = eval_, k](double t, double s) { return k * g(t, s); },
                           std::move(m), label_);
}

void QuadConfig::validate() const {
  if (gl_order < 2 || gl_order > 64)
    throw Error(ErrorCode::UnsupportedOrder, "gl_order must be in [2, 64]");
  if (panels < 1) throw Error(ErrorCode::InvalidConfig, "panels must be >= 1");
  if (!(abs_tol > 0.0)) throw Error(ErrorCode::InvalidConfig, "abs_tol must be > 0");
}

QuadConfig QuadConfig::refined() const {
  QuadConfig q = *this;
  q.gl_order = std::min(64, 2 * gl_order);
  if (q.gl_order == gl_order) q.panels = 2 * panels;
  return q;
}

}  // namespace ostro
