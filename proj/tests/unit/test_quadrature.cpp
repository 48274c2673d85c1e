#include <doctest.h>

#include <cmath>
#include <numbers>

#include "ostro/polynomial.hpp"
#include "ostro/quadrature.hpp"
#include "../support/helpers.hpp"
#include "../support/oracles.hpp"

using namespace ostro;
using testing::close;
using testing::close_rel;
using testing::error_code_of;
using testing::fn;
using testing::fn1;

TEST_CASE("gl_rule closed forms") {
  const GLRule& g2 = gl_rule(2);
  REQUIRE(g2.nodes.size() == 2);
  CHECK(close(std::abs(g2.nodes[0]), 1 / std::sqrt(3.0), 1e-15));
  CHECK(close(g2.weights[0], 1.0, 1e-15));
  CHECK(close(g2.weights[1], 1.0, 1e-15));

  const GLRule& g3 = gl_rule(3);
  REQUIRE(g3.nodes.size() == 3);
  double w0 = 0, wside = 0;
  for (int i = 0; i < 3; ++i) {
    if (std::abs(g3.nodes[i]) < 1e-15) w0 = g3.weights[i];
    else {
      CHECK(close(std::abs(g3.nodes[i]), std::sqrt(0.6), 1e-15));
      wside = g3.weights[i];
    }
  }
  CHECK(close(w0, 8.0 / 9, 1e-15));
  CHECK(close(wside, 5.0 / 9, 1e-15));
  CHECK(error_code_of([] { gl_rule(1); }) == ErrorCode::UnsupportedOrder);
  CHECK(error_code_of([] { gl_rule(65); }) == ErrorCode::UnsupportedOrder);
}

TEST_CASE("gl_rule exactness up to degree 2n-1 at every order") {
  for (int n = 2; n <= 64; ++n) {
    const GLRule& g = gl_rule(n);
    double wsum = 0, t2 = 0;
    for (int i = 0; i < n; ++i) {
      wsum += g.weights[i];
      t2 += g.weights[i] * g.nodes[i] * g.nodes[i];
    }
    CHECK(close(wsum, 2.0, 1e-14));
    CHECK(close(t2, 2.0 / 3, 1e-14));
    for (int k : {2 * n - 2, 2 * n - 1}) {
      double acc = 0;
      for (int i = 0; i < n; ++i) acc += g.weights[i] * std::pow(g.nodes[i], k);
      const double want = k % 2 ? 0.0 : 2.0 / (k + 1);
      CHECK(close(acc, want, 1e-13));
    }
  }
}

TEST_CASE("integrate_1d") {
  const QuadConfig q{};
  CHECK(close(integrate_1d(fn1("t^2"), Interval1D(0, 1), q), 1.0 / 3, 1e-14));
  const UnivariateFunction kink{[](double t) { return std::abs(t - 0.5); }, {}};
  const double brk[] = {0.5};
  CHECK(close(integrate_1d(kink, Interval1D(0, 1), q, brk), 0.25, 1e-14));
  CHECK(close(integrate_1d(fn1("exp(t)"), Interval1D(0, 1), q), std::numbers::e - 1, 1e-12));
  // Monomials up to 2 * gl_order - 1 on one panel.
  const QuadConfig one{8, 1, 1e-10};
  for (int k = 0; k <= 15; ++k) {
    const UnivariateFunction m{[k](double t) { return std::pow(t, k); }, {}};
    const double want = (std::pow(2.0, k + 1) - std::pow(-1.0, k + 1)) / (k + 1);
    CHECK(close_rel(integrate_1d(m, Interval1D(-1, 2), one), want, 1e-13));
  }
  CHECK(integrate_segment([](double) { return 1.0; }, 2, 2, q) == 0.0);
}

TEST_CASE("integrate_1d rejects non-finite samples") {
  const QuadConfig q{2, 1, 1e-10};
  const UnivariateFunction nan{[](double) { return std::nan(""); }, {}};
  CHECK(error_code_of([&] { integrate_1d(nan, Interval1D(0, 1), q); }) == ErrorCode::NonFiniteSample);
  const BivariateFunction inf([](double t, double) { return 1.0 / (t - t); });
  CHECK(error_code_of([&] { integrate_2d(inf, make_rectangle(0, 1, 0, 1), q); }) ==
        ErrorCode::NonFiniteSample);
}

TEST_CASE("integrate_2d") {
  const QuadConfig q{};
  const Rectangle unit = make_rectangle(0, 1, 0, 1);
  CHECK(close(integrate_2d(fn("t*s"), unit, q), 0.25, 1e-14));
  const Rectangle r = make_rectangle(-1, 2, 0.5, 3);
  CHECK(close(integrate_2d(fn("1"), r, q), r.area(), 1e-13));
  CHECK(close(integrate_2d(fn("exp(t*s)"), unit, q), oracle::exp_ts_unit_square(), 1e-10));
  CHECK(close(integrate_2d(fn("exp(t*s)"), unit, q, EvalPoint{0.3, 0.7}), oracle::exp_ts_unit_square(),
              1e-10));
}

TEST_CASE("Fubini consistency and polynomial closed form") {
  const QuadConfig q{};
  Xorshift64Star rng(5);
  for (int i = 0; i < 50; ++i) {
    const Polynomial2D p = random_polynomial(rng, 6);
    const auto g = oracle::random_geometry(rng);
    const BivariateFunction f([&p](double t, double s) { return p(t, s); });
    const double two_d = integrate_2d(f, g.rect, q);
    const double iterated = integrate_1d(
        UnivariateFunction{[&](double t) { return integrate_1d(f.along_s(t), g.rect.s_axis(), q); }, {}},
        g.rect.t_axis(), q);
    const double scale = std::max(1.0, std::abs(p.integral(g.rect)));
    CHECK(std::abs(two_d - iterated) <= 1e-12 * scale);
    CHECK(std::abs(two_d - p.integral(g.rect)) <= 1e-11 * scale);
  }
}

TEST_CASE("mixed_partial_fd") {
  const BivariateFunction ts = fn("t*s");
  CHECK(close(mixed_partial_fd(ts, 0.3, 0.2, 0.1, 0.05), 1.0, 1e-12));
  CHECK(close(mixed_partial_fd(ts, 0.3, 0.2, 1e-4, 1e-4), 1.0, 1e-8));
  CHECK(close(mixed_partial_fd(fn("7"), 0.3, 0.2, 1e-4, 1e-4), 0.0, 1e-12));
  CHECK(close(mixed_partial_fd(fn("t^2*s^2"), 0.5, 0.5, 1e-4, 1e-4), 1.0, 1e-6));
  const auto [ht, hs] = default_fd_steps(make_rectangle(0, 2, 0, 1));
  CHECK(close(ht, 2 * std::cbrt(std::numeric_limits<double>::epsilon()), 1e-18));
  CHECK(close(hs, std::cbrt(std::numeric_limits<double>::epsilon()), 1e-18));
  // Corner evaluation keeps the stencil inside the domain.
  const BivariateFunction guarded([](double t, double s) {
    if (t < 0 || s < 0 || t > 1 || s > 1) throw std::runtime_error("outside");
    return t * t * s;
  });
  CHECK(close(mixed_partial_or_fd(guarded, make_rectangle(0, 1, 0, 1), 0, 0), 0.0, 1e-4));
}

TEST_CASE("estimate_bounds") {
  const Rectangle unit = make_rectangle(0, 1, 0, 1);
  const BoundsEstimate ts = estimate_bounds(fn("t*s"), unit, 9, 0.0);
  CHECK(ts.sampled_min == 1.0);
  CHECK(ts.sampled_max == 1.0);
  CHECK_FALSE(ts.rigorous);
  const BoundsEstimate ex = estimate_bounds(fn("exp(t*s)"), unit, 17, 0.05);
  CHECK(close(ex.sampled_min, 1.0, 1e-12));
  CHECK(close(ex.sampled_max, 2 * std::numbers::e, 1e-12));
  CHECK(ex.bounds.lower() < 1.0);
  CHECK(ex.bounds.upper() > 2 * std::numbers::e);
  const BoundsEstimate sc = estimate_bounds(fn("sin(t)*s"), make_rectangle(0, std::numbers::pi, 0, 1), 33, 0);
  CHECK(close(sc.sampled_min, -1.0, 1e-12));
  CHECK(close(sc.sampled_max, 1.0, 1e-12));
  // Without an exact mixed partial the estimate falls back to differences.
  const BivariateFunction plain([](double t, double s) { return t * s; });
  CHECK(estimate_bounds(plain, unit, 5, 0.05).used_finite_differences);
}

TEST_CASE("estimate_bounds brackets finer sampling on the polynomial corpus") {
  Xorshift64Star rng(9);
  for (int i = 0; i < 40; ++i) {
    const Polynomial2D p = random_polynomial(rng, 6);
    const Polynomial2D m = p.mixed_partial();
    const auto g = oracle::random_geometry(rng);
    const BivariateFunction f([&p](double t, double s) { return p(t, s); },
                              [&m](double t, double s) { return m(t, s); });
    const BoundsEstimate est = estimate_bounds(f, g.rect, 33, 0.05);
    const int n = 330;
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= n; ++b) {
        const double t = g.rect.a() + (g.rect.b() - g.rect.a()) * a / n;
        const double s = g.rect.c() + (g.rect.d() - g.rect.c()) * b / n;
        const double v = m(t, s);
        REQUIRE(v >= est.bounds.lower());
        REQUIRE(v <= est.bounds.upper());
      }
  }
}
