#include "ostro/polynomial.hpp"

#include <algorithm>
#include <cmath>

namespace ostro {

Polynomial2D::Polynomial2D(std::vector<std::vector<double>> coef) : coef_(std::move(coef)) {
  if (coef_.empty() || coef_.front().empty())
    throw Error(ErrorCode::InvalidConfig, "polynomial needs at least one coefficient");
  for (const auto& row : coef_) {
    if (row.size() != coef_.front().size())
      throw Error(ErrorCode::InvalidConfig, "polynomial coefficient rows must have equal length");
  }
}

double Polynomial2D::operator()(double t, double s) const noexcept {
  double acc = 0.0;
  for (std::size_t i = coef_.size(); i-- > 0;) {
    double row = 0.0;
    for (std::size_t j = coef_[i].size(); j-- > 0;) row = row * s + coef_[i][j];
    acc = acc * t + row;
  }
  return acc;
}

double Polynomial2D::integral(const Rectangle& r) const noexcept {
  auto moment = [](double lo, double hi, std::size_t k) {
    return (std::pow(hi, static_cast<double>(k + 1)) - std::pow(lo, static_cast<double>(k + 1))) /
           static_cast<double>(k + 1);
  };
  double acc = 0.0;
  for (std::size_t i = 0; i < coef_.size(); ++i) {
    const double mt = moment(r.a(), r.b(), i);
    for (std::size_t j = 0; j < coef_[i].size(); ++j)
      acc += coef_[i][j] * mt * moment(r.c(), r.d(), j);
  }
  return acc;
}

Polynomial2D Polynomial2D::mixed_partial() const {
  const std::size_t nt = coef_.size() > 1 ? coef_.size() - 1 : 1;
  const std::size_t ns = coef_.front().size() > 1 ? coef_.front().size() - 1 : 1;
  std::vector<std::vector<double>> out(nt, std::vector<double>(ns, 0.0));
  for (std::size_t i = 1; i < coef_.size(); ++i)
    for (std::size_t j = 1; j < coef_[i].size(); ++j)
      out[i - 1][j - 1] = static_cast<double>(i * j) * coef_[i][j];
  return Polynomial2D(std::move(out));
}

Polynomial2D Polynomial2D::derivative_t() const {
  const std::size_t nt = coef_.size() > 1 ? coef_.size() - 1 : 1;
  std::vector<std::vector<double>> out(nt, std::vector<double>(coef_.front().size(), 0.0));
  for (std::size_t i = 1; i < coef_.size(); ++i)
    for (std::size_t j = 0; j < coef_[i].size(); ++j)
      out[i - 1][j] = static_cast<double>(i) * coef_[i][j];
  return Polynomial2D(std::move(out));
}

namespace {

struct Range {
  double lo, hi;
};

Range power_range(double lo, double hi, std::size_t k) {
  if (k == 0) return {1.0, 1.0};
  const double e = static_cast<double>(k);
  const double plo = std::pow(lo, e), phi = std::pow(hi, e);
  if (k % 2 == 0 && lo < 0.0 && hi > 0.0) return {0.0, std::max(plo, phi)};
  return {std::min(plo, phi), std::max(plo, phi)};
}

}  // namespace

DerivativeBounds Polynomial2D::value_range(const Rectangle& r) const {
  double lo = 0.0, hi = 0.0, mag = 0.0;
  for (std::size_t i = 0; i < coef_.size(); ++i) {
    const Range rt = power_range(r.a(), r.b(), i);
    for (std::size_t j = 0; j < coef_[i].size(); ++j) {
      const Range rs = power_range(r.c(), r.d(), j);
      const double c = coef_[i][j];
      const double p[4] = {c * rt.lo * rs.lo, c * rt.lo * rs.hi, c * rt.hi * rs.lo, c * rt.hi * rs.hi};
      const double mn = std::min(std::min(p[0], p[1]), std::min(p[2], p[3]));
      const double mx = std::max(std::max(p[0], p[1]), std::max(p[2], p[3]));
      lo += mn;
      hi += mx;
      mag += std::max(std::abs(mn), std::abs(mx));
    }
  }
  const double pad = 1e-12 * mag;
  return DerivativeBounds(lo - pad, hi + pad);
}

expr::Expr Polynomial2D::to_expr() const {
  using namespace expr;
  Expr sum;
  for (std::size_t i = 0; i < coef_.size(); ++i) {
    for (std::size_t j = 0; j < coef_[i].size(); ++j) {
      const double c = coef_[i][j];
      if (c == 0.0) continue;
      Expr term = constant(sum ? std::abs(c) : c);
      if (i > 0) {
        Expr tp = i == 1 ? variable(Var::T)
                         : binary(BinOp::Pow, variable(Var::T), constant(static_cast<double>(i)));
        term = binary(BinOp::Mul, term, tp);
      }
      if (j > 0) {
        Expr sp = j == 1 ? variable(Var::S)
                         : binary(BinOp::Pow, variable(Var::S), constant(static_cast<double>(j)));
        term = binary(BinOp::Mul, term, sp);
      }
      if (!sum) sum = term;
      else sum = binary(c < 0.0 ? BinOp::Sub : BinOp::Add, sum, term);
    }
  }
  return sum ? sum : constant(0.0);
}

Polynomial2D random_polynomial(Xorshift64Star& rng, int max_degree) {
  const int dt = rng.uniform_int(0, max_degree);
  const int ds = rng.uniform_int(0, max_degree);
  std::vector<std::vector<double>> coef(dt + 1, std::vector<double>(ds + 1));
  for (auto& row : coef)
    for (auto& c : row) c = rng.uniform(-1.0, 1.0);
  return Polynomial2D(std::move(coef));
}

Polynomial2D random_polynomial_1d(Xorshift64Star& rng, int max_degree) {
  const int dt = rng.uniform_int(0, max_degree);
  std::vector<std::vector<double>> coef(dt + 1, std::vector<double>(1));
  for (auto& row : coef) row[0] = rng.uniform(-1.0, 1.0);
  return Polynomial2D(std::move(coef));
}

}  // namespace ostro
