#pragma once

#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "ostro/error.hpp"
#include "ostro/expr.hpp"

namespace testing {

inline ostro::BivariateFunction fn(const char* text) {
  return ostro::expr::to_bivariate(ostro::expr::parse(text));
}

inline ostro::UnivariateFunction fn1(const char* text) {
  return ostro::expr::to_univariate(ostro::expr::parse(text));
}

inline bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

inline bool close_rel(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max({1.0, std::abs(a), std::abs(b)});
}

template <class F>
ostro::ErrorCode error_code_of(F&& f) {
  try {
    f();
  } catch (const ostro::Error& e) {
    return e.code();
  }
  FAIL("expected an ostro::Error");
  return ostro::ErrorCode::UsageError;
}

}  // namespace testing
