#pragma once

#include <optional>

#include "ostro/expr.hpp"

// Scalar semantics shared by the tree walker and the compiled evaluator.
namespace ostro::expr::detail {

double apply_fn(Fn fn, double x);
double divide(double a, double b);
double pow_int(double base, int n);
double pow_real(double base, double exponent);
/// Integer value in [-1024, 1024], used for the repeated-squaring power path.
std::optional<int> small_integer(double v);

}  // namespace ostro::expr::detail
