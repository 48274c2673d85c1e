#pragma once

#include <vector>

#include "ostro/core.hpp"
#include "ostro/expr.hpp"
#include "ostro/random.hpp"

namespace ostro {

/// p(t, s) = sum_ij coef[i][j] t^i s^j. Besides producing an expression,
/// it evaluates, integrates and differentiates itself from the coefficients
/// so tests have a route independent of the expression engine.
class Polynomial2D {
 public:
  explicit Polynomial2D(std::vector<std::vector<double>> coef);

  int degree_t() const noexcept { return static_cast<int>(coef_.size()) - 1; }
  int degree_s() const noexcept { return static_cast<int>(coef_.front().size()) - 1; }
  const std::vector<std::vector<double>>& coefficients() const noexcept { return coef_; }

  double operator()(double t, double s) const noexcept;
  double integral(const Rectangle& r) const noexcept;
  Polynomial2D mixed_partial() const;
  Polynomial2D derivative_t() const;

  /// Guaranteed bounds on p over r: each monomial c t^i s^j contributes the
  /// exact range of t^i times that of s^j, and the sum is widened by a
  /// relative 1e-12 of the total magnitude to absorb rounding.
  DerivativeBounds value_range(const Rectangle& r) const;

  /// Left-associated sum of c*t^i*s^j terms (negative coefficients become
  /// subtraction), coefficients written at full precision.
  expr::Expr to_expr() const;

 private:
  std::vector<std::vector<double>> coef_;
};

/// Degrees drawn uniformly from [0, max_degree] per variable, coefficients
/// uniform in [-1, 1].
Polynomial2D random_polynomial(Xorshift64Star& rng, int max_degree);
/// Polynomial in t only (degree in s is zero).
Polynomial2D random_polynomial_1d(Xorshift64Star& rng, int max_degree);

}  // namespace ostro
