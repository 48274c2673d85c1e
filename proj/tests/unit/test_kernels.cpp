#include <doctest.h>

#include "ostro/kernels.hpp"
#include "ostro/random.hpp"
#include "../support/helpers.hpp"
#include "../support/oracles.hpp"

using namespace ostro;
using testing::close;
using testing::close_rel;
using testing::error_code_of;

namespace {

Kernel1D k01(double anchor) { return Kernel1D(Interval1D(0, 1), anchor); }

// Composite trapezoid over [lo, hi] split at the anchor and both roots.
double trapezoid(const Kernel1D& k, bool absolute, int panels = 2000) {
  const double lo = k.interval().lo(), hi = k.interval().hi(), x = k.anchor();
  std::vector<double> edges{lo, 0.25 * (3 * lo + x), x, 0.25 * (3 * hi + x), hi};
  auto g = [&](double t, bool left) {
    const double v = left ? t - 0.25 * (3 * lo + x) : t - 0.25 * (3 * hi + x);
    return absolute ? std::abs(v) : v;
  };
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const double a = edges[i], b = edges[i + 1];
    const bool left = b <= x;
    const double h = (b - a) / panels;
    for (int j = 0; j < panels; ++j) total += 0.5 * h * (g(a + j * h, left) + g(a + (j + 1) * h, left));
  }
  return total;
}

}  // namespace

TEST_CASE("kernel_eval") {
  CHECK(kernel_eval(k01(0.5), 0) == doctest::Approx(-0.125).epsilon(1e-15));
  CHECK(kernel_eval(k01(0.5), 0.125) == 0.0);
  CHECK(kernel_eval(k01(0.5), 1) == doctest::Approx(0.125).epsilon(1e-15));
  // Left branch at the anchor itself.
  CHECK(kernel_eval(k01(0.5), 0.5) == doctest::Approx(0.375).epsilon(1e-15));
  CHECK(error_code_of([] { kernel_eval(k01(0.5), 1.5); }) == ErrorCode::OutOfRange);
  CHECK(error_code_of([] { Kernel1D(Interval1D(0, 1), 2); }) == ErrorCode::PointOutsideDomain);
}

TEST_CASE("kernel is affine with unit slope on each branch") {
  const Kernel1D k(Interval1D(-1, 2), 0.3);
  for (double t : {-0.9, -0.2, 0.1, 0.6, 1.4, 1.9}) {
    const double h = 1e-3;
    const double slope = (kernel_eval(k, t + h) - kernel_eval(k, t - h)) / (2 * h);
    CHECK(close(slope, 1.0, 1e-12));
  }
}

TEST_CASE("kernel_jump") {
  auto j = kernel_jump(k01(0.5));
  CHECK(j.left_limit == doctest::Approx(0.375));
  CHECK(j.right_limit == doctest::Approx(-0.375));
  j = kernel_jump(k01(0.25));
  CHECK(j.left_limit == doctest::Approx(0.1875));
  CHECK(j.right_limit == doctest::Approx(-0.5625));
  j = kernel_jump(Kernel1D(Interval1D(0, 2), 1));
  CHECK(j.left_limit == doctest::Approx(0.75));
  CHECK(j.right_limit == doctest::Approx(-0.75));
  CHECK(error_code_of([] { kernel_jump(k01(0)); }) == ErrorCode::AnchorOnBoundary);
  CHECK(error_code_of([] { kernel_jump(k01(1)); }) == ErrorCode::AnchorOnBoundary);

  // Limits from the oracle kernel.
  const Kernel1D k(Interval1D(-1, 3), 0.7);
  const auto jk = kernel_jump(k);
  CHECK(close(jk.left_limit, oracle::kernel(-1, 3, 0.7, 0.7), 1e-15));
  CHECK(close(jk.right_limit, oracle::kernel(-1, 3, 0.7, std::nextafter(0.7, 1.0)), 1e-12));
}

TEST_CASE("one-dimensional moments against trapezoid oracle") {
  CHECK(close(signed_moment_1d(k01(0.5)), 0.0, 1e-15));
  CHECK(close(signed_moment_1d(k01(1)), 0.25, 1e-15));
  CHECK(close(signed_moment_1d(k01(0)), -0.25, 1e-15));
  CHECK(close(abs_moment_1d(k01(0.5)), 5.0 / 32, 1e-15));
  CHECK(close(abs_moment_1d(k01(1)), 5.0 / 16, 1e-15));
  CHECK(close(abs_moment_1d(k01(0)), 5.0 / 16, 1e-15));
  for (double x : {0.0, 0.1, 0.25, 0.5, 0.8, 1.0}) {
    CHECK(close(signed_moment_1d(k01(x)), trapezoid(k01(x), false), 1e-9));
    CHECK(close(abs_moment_1d(k01(x)), trapezoid(k01(x), true), 1e-9));
  }
}

TEST_CASE("two-dimensional moments") {
  const Rectangle unit = make_rectangle(0, 1, 0, 1);
  CHECK(close(signed_moment(unit, {0.5, 0.5}), 0.0, 1e-15));
  CHECK(close(signed_moment(unit, {1, 1}), 1.0 / 16, 1e-15));
  CHECK(close(signed_moment(make_rectangle(0, 2, 0, 1), {2, 1}), 0.25, 1e-15));
  CHECK(close(abs_moment(unit, {0.5, 0.5}), 25.0 / 1024, 1e-15));
  CHECK(close(abs_moment(unit, {1, 1}), 25.0 / 256, 1e-15));

  // 400 x 400 midpoint grid per quadrant of |p q|.
  double grid = 0.0;
  const int n = 400;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double t = (i + 0.5) / n, s = (j + 0.5) / n;
      grid += std::abs(oracle::kernel(0, 1, 0.5, t) * oracle::kernel(0, 1, 0.5, s)) / (n * n);
    }
  CHECK(close(abs_moment(unit, {0.5, 0.5}), grid, 1e-5));
}

TEST_CASE("product law, ordering and oracle agreement on random geometry") {
  Xorshift64Star rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto g = oracle::random_geometry(rng);
    const double sm = signed_moment(g.rect, g.point), am = abs_moment(g.rect, g.point);
    const Kernel1D kt = t_kernel(g.rect, g.point), ks = s_kernel(g.rect, g.point);
    CHECK(close_rel(sm, signed_moment_1d(kt) * signed_moment_1d(ks), 1e-12));
    CHECK(close_rel(am, abs_moment_1d(kt) * abs_moment_1d(ks), 1e-12));
    CHECK(am >= std::abs(sm));
    const auto bf = oracle::brute_moments(g.rect, g.point);
    CHECK(std::abs(sm - bf.signed_value) <= 1e-8 * std::max(am, 1e-300));
    CHECK(std::abs(am - bf.abs_value) <= 1e-8 * am);
  }
}
