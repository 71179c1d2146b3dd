#include <doctest.h>

#include <cmath>
#include <numbers>

#include "tangent/error.hpp"
#include "tangent/fourier.hpp"
#include "tangent/radon.hpp"

using namespace tangent;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST_CASE("chord integral of the disk density is 1 inside") {
  for (double theta : {0.0, 0.4, 2.0, 5.0}) {
    CHECK(std::abs(radon_disk_density({theta, 0.5}) - 1.0) <= 1e-10);
    CHECK(std::abs(radon_disk_density({theta, 0.99}) - 1.0) <= 1e-8);
    CHECK(std::abs(radon_disk_density({theta, -0.3}) - 1.0) <= 1e-10);
  }
}

TEST_CASE("lines missing the disk give 0; tangent lines are errors") {
  CHECK(radon_disk_density({0.3, 2.0}) == 0.0);
  CHECK(radon_disk_density({0.3, -1.0000001}) == 0.0);
  CHECK_THROWS_AS(radon_disk_density({0.3, 1.0}), SingularLine);
  CHECK_THROWS_AS(radon_disk_density({0.3, -1.0}), SingularLine);
}

TEST_CASE("rotational invariance") {
  const double ref = radon_disk_density({0.0, 0.7});
  for (int i = 1; i < 64; ++i) CHECK(std::abs(radon_disk_density({grid_angle(i, 64), 0.7}) - ref) <= 1e-12);
}

TEST_CASE("two Chebyshev nodes already reproduce the constant") {
  for (int nodes : {2, 3, 8}) CHECK(std::abs(radon_disk_density({1.0, 0.25}, nodes) - 1.0) <= 4e-16);
}

TEST_CASE("gauss_chebyshev is exact for low-degree polynomials") {
  // ∫ t² / sqrt(1 − t²) = π/2, ∫ 1 / sqrt(1 − t²) = π
  CHECK(gauss_chebyshev([](double) { return 1.0; }, 3) == doctest::Approx(pi));
  CHECK(gauss_chebyshev([](double t) { return t * t; }, 2) == doctest::Approx(pi / 2));
  CHECK_THROWS_AS(gauss_chebyshev([](double) { return 1.0; }, 0), InvalidParameter);
}

TEST_CASE("LineParam canonical form") {
  const auto c = LineParam{pi + 0.5, 0.3}.canonical();
  CHECK(c.theta == doctest::Approx(0.5));
  CHECK(c.p == doctest::Approx(-0.3));
  const auto d = LineParam{-0.5, 0.3}.canonical();
  CHECK(d.theta == doctest::Approx(pi - 0.5));
  CHECK(d.p == doctest::Approx(-0.3));
}

TEST_CASE("moments of the second p-derivative") {
  // ∫ δ′(p − a) p^k dp = −k a^{k−1}
  CHECK(second_p_derivative_moments(0) == 0.0);
  CHECK(second_p_derivative_moments(2) == 4.0);
  CHECK(second_p_derivative_moments(4) == 8.0);
  CHECK(second_p_derivative_moments(6) == 12.0);
  CHECK_THROWS_AS(second_p_derivative_moments(3), InvalidParameter);
  CHECK_THROWS_AS(second_p_derivative_moments(-2), InvalidParameter);
}

TEST_CASE("mollifier has unit mass and shrinks with h") {
  for (double h : {0.1, 0.5}) {
    double mass = 0.0;
    const int n = 20000;
    for (int i = 0; i < n; ++i) {
      const double x = -h + 2 * h * (i + 0.5) / n;
      mass += mollifier(x, h) * 2 * h / n;
    }
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(mollifier(h, h) == 0.0);
    CHECK(mollifier(1.01 * h, h) == 0.0);
  }
  CHECK_THROWS_AS(mollifier(0.0, 0.0), InvalidParameter);
}

TEST_CASE("mollified finite differences converge at second order") {
  // Exact mollified value for k = 4 is 8 + 24 σ² with σ² = h²/15.
  for (int k : {0, 2, 4, 6}) {
    const double exact = second_p_derivative_moments(k);
    std::vector<double> err;
    for (double h : {0.1, 0.05, 0.025}) err.push_back(std::abs(mollified_second_derivative_moment(k, h) - exact));
    if (k <= 2) {
      for (double e : err) CHECK(e < 1e-9);
    } else {
      CHECK(err[0] / err[1] == doctest::Approx(4.0).epsilon(0.05));
      CHECK(err[1] / err[2] == doctest::Approx(4.0).epsilon(0.05));
    }
  }
  CHECK(mollified_second_derivative_moment(4, 0.1) == doctest::Approx(8.0 + 1.6 * 0.01).epsilon(1e-3));
}

TEST_CASE("disk_sinogram skips tangent lines") {
  int skipped = -1;
  const auto s = disk_sinogram({0.0, 1.0}, {-1.0, 0.0, 0.5, 1.0, 1.5}, &skipped);
  CHECK(skipped == 4);
  CHECK(s.size() == 6);
  for (const auto& x : s) CHECK(x.value == doctest::Approx(std::abs(x.p) < 1 ? 1.0 : 0.0));
}
