#include <doctest.h>

#include "ostro/identity.hpp"
#include "ostro/kernels.hpp"
#include "ostro/polynomial.hpp"
#include "ostro/quadrature.hpp"
#include "../support/helpers.hpp"
#include "../support/oracles.hpp"

using namespace ostro;
using testing::close;
using testing::close_rel;
using testing::error_code_of;
using testing::fn;

namespace {
const Rectangle kUnit = make_rectangle(0, 1, 0, 1);
const EvalPoint kMid{0.5, 0.5};
const EvalPoint kCorner{1, 1};
}  // namespace

TEST_CASE("kernel_weighted_integral") {
  CHECK(close(kernel_weighted_integral(fn("t*s"), kUnit, kMid), 0.0, 1e-15));
  CHECK(close(kernel_weighted_integral(fn("t*s"), kUnit, kCorner), 1.0 / 16, 1e-15));
  const Polynomial2D t2s2({{0, 0, 0}, {0, 0, 0}, {0, 0, 1}});
  CHECK(close(kernel_weighted_integral(fn("t^2*s^2"), kUnit, kMid),
              oracle::exact_kernel_weighted(t2s2, kUnit, kMid), 1e-15));
  // 400 x 400 midpoint grid, per quadrant, of p q 4ts.
  double grid = 0.0;
  const int n = 200;
  for (double t0 : {0.0, 0.5})
    for (double s0 : {0.0, 0.5})
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          const double t = t0 + 0.5 * (i + 0.5) / n, s = s0 + 0.5 * (j + 0.5) / n;
          grid += oracle::kernel(0, 1, 0.5, t) * oracle::kernel(0, 1, 0.5, s) * 4 * t * s * 0.25 / (n * n);
        }
  CHECK(close(kernel_weighted_integral(fn("t^2*s^2"), kUnit, kMid), grid, 1e-6));
  const BivariateFunction plain([](double t, double s) { return t * s; });
  CHECK(error_code_of([&] {
          kernel_weighted_integral(plain, kUnit, kMid, {}, MixedSource::ExactOnly);
        }) == ErrorCode::MissingMixedPartial);
  CHECK(close(kernel_weighted_integral(plain, kUnit, kCorner), 1.0 / 16, 1e-8));
}

TEST_CASE("verbatim quadrant and assembled expansions") {
  CHECK(quadrant_expansion_verbatim(fn("0"), kUnit, kMid, Quadrant::RU) == 0.0);
  CHECK(close(quadrant_expansion_verbatim(fn("(1+t)*s"), kUnit, kCorner, Quadrant::LL), -1.0 / 16, 1e-12));
  CHECK(close(quadrant_kernel_weighted_integral(fn("(1+t)*s"), kUnit, kCorner, Quadrant::LL), 1.0 / 16, 1e-12));
  CHECK(close(quadrant_expansion_verbatim(fn("t*s"), kUnit, kCorner, Quadrant::LL), 1.0 / 16, 1e-12));
  CHECK(close(full_expansion_verbatim(fn("1"), kUnit, kMid), 3.0 / 16, 1e-12));
  CHECK(full_expansion_verbatim(fn("0"), kUnit, kMid) == 0.0);
  CHECK(close(full_expansion_verbatim(fn("t*s"), kUnit, kMid), -3.0 / 32, 1e-12));
}

TEST_CASE("assembly consistency of the verbatim form") {
  Xorshift64Star rng(4);
  for (int i = 0; i < 30; ++i) {
    const Polynomial2D p = random_polynomial(rng, 4);
    const auto g = oracle::random_geometry(rng);
    const BivariateFunction f = expr::to_bivariate(p.to_expr());
    double sum = verbatim_reassembly_terms(f, g.rect, g.point);
    for (Quadrant qd : kQuadrants) sum += quadrant_expansion_verbatim(f, g.rect, g.point, qd);
    const double full = full_expansion_verbatim(f, g.rect, g.point);
    CHECK(std::abs(full - sum) <= 1e-12 * std::max(1.0, std::abs(full)) * 100);
  }
}

TEST_CASE("derived expansion") {
  for (EvalPoint pt : {kMid, kCorner, EvalPoint{0, 0}, EvalPoint{0.2, 0.9}})
    CHECK(close(full_expansion_derived(fn("1"), kUnit, pt), 0.0, 1e-14));
  CHECK(close(full_expansion_derived(fn("t*s"), kUnit, kMid), 0.0, 1e-14));
  CHECK(close(full_expansion_derived(fn("(1+t)*s"), kUnit, kCorner), 1.0 / 16, 1e-14));
  double sum = 0;
  for (Quadrant qd : kQuadrants) sum += quadrant_expansion_derived(fn("exp(t*s)"), kUnit, {0.3, 0.6}, qd);
  CHECK(close(sum, full_expansion_derived(fn("exp(t*s)"), kUnit, {0.3, 0.6}), 1e-13));
  for (Quadrant qd : kQuadrants)
    CHECK(close(quadrant_expansion_derived(fn("exp(t*s)"), kUnit, {0.3, 0.6}, qd),
                quadrant_kernel_weighted_integral(fn("exp(t*s)"), kUnit, {0.3, 0.6}, qd), 1e-12));
}

TEST_CASE("identity_report") {
  auto rep = identity_report(fn("t*s"), kUnit, kMid);
  CHECK(close(rep.oracle_value, 0, 1e-15));
  CHECK(close(rep.derived_value, 0, 1e-14));
  CHECK(close(rep.verbatim_value, -3.0 / 32, 1e-12));
  CHECK(close(rep.max_abs_discrepancy_verbatim, 3.0 / 32, 1e-12));
  CHECK(rep.ok);
  rep = identity_report(fn("1"), kUnit, kMid);
  CHECK(close(rep.oracle_value, 0, 1e-15));
  CHECK(close(rep.derived_value, 0, 1e-14));
  CHECK(close(rep.verbatim_value, 3.0 / 16, 1e-12));
  CHECK(rep.ok);

  Xorshift64Star rng(7);
  const Polynomial2D p = random_polynomial(rng, 4);
  const auto g = oracle::random_geometry(rng);
  rep = identity_report(expr::to_bivariate(p.to_expr()), g.rect, g.point);
  CHECK(rep.ok);
  CHECK(error_code_of([] {
          identity_report(BivariateFunction([](double t, double) { return t; }), kUnit, kMid);
        }) == ErrorCode::MissingMixedPartial);
}

TEST_CASE("all three computations are linear in f") {
  Xorshift64Star rng(8);
  for (int i = 0; i < 20; ++i) {
    const Polynomial2D p = random_polynomial(rng, 4), r = random_polynomial(rng, 4);
    const auto g = oracle::random_geometry(rng);
    const double alpha = rng.uniform(-2, 2), beta = rng.uniform(-2, 2);
    const BivariateFunction f = expr::to_bivariate(p.to_expr()), h = expr::to_bivariate(r.to_expr());
    const BivariateFunction combo([&](double t, double s) { return alpha * f(t, s) + beta * h(t, s); },
                                  [&](double t, double s) { return alpha * f.mixed(t, s) + beta * h.mixed(t, s); });
    auto check = [&](auto&& compute) {
      const double lhs = compute(combo), rhs = alpha * compute(f) + beta * compute(h);
      const double scale = std::abs(alpha * compute(f)) + std::abs(beta * compute(h)) + 1.0;
      CHECK(std::abs(lhs - rhs) <= 1e-12 * scale * 10);
    };
    check([&](const BivariateFunction& u) { return kernel_weighted_integral(u, g.rect, g.point); });
    check([&](const BivariateFunction& u) { return full_expansion_verbatim(u, g.rect, g.point); });
    check([&](const BivariateFunction& u) { return full_expansion_derived(u, g.rect, g.point); });
  }
}

TEST_CASE("derived expansion matches closed form on polynomials") {
  Xorshift64Star rng(99);
  for (int i = 0; i < 100; ++i) {
    const Polynomial2D p = random_polynomial(rng, 6);
    const auto g = oracle::random_geometry(rng);
    const BivariateFunction f = expr::to_bivariate(p.to_expr());
    const double exact = oracle::exact_kernel_weighted(p, g.rect, g.point);
    const double scale = oracle::kernel_weighted_scale(p, g.rect, g.point);
    CHECK(std::abs(full_expansion_derived(f, g.rect, g.point) - exact) <= 1e-9 * (1 + scale));
    CHECK(std::abs(kernel_weighted_integral(f, g.rect, g.point) - exact) <= 1e-9 * (1 + scale));
  }
}
