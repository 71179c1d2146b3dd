#include <doctest.h>

#include <cmath>
#include <numbers>

#include "tangent/error.hpp"
#include "tangent/fourier.hpp"
#include "tangent/reconstruct.hpp"

using namespace tangent;

namespace {

TangentialData ellipse_data(double a, double b, double tilt, std::vector<CircleFunction> q, int grid = 64) {
  return TangentialData(make_ellipse(a, b, tilt, grid), std::move(q));
}

CircleFunction constant(double v) { return CircleFunction(TrigPoly<double>::constant(v)); }

}  // namespace

TEST_CASE("synthesize_moments: second moment") {
  // q0 = 3, q1 = 1/2, q2 = 1/4 on the unit disk: p2 = q0 − 2 q1 + 2 q2
  const TangentialData d(make_ellipse(Rational(1), Rational(1), 32),
                         {CircleFunction(TrigPoly<Rational>::constant(Rational(3))),
                          CircleFunction(TrigPoly<Rational>::constant(Rational(1, 2))),
                          CircleFunction(TrigPoly<Rational>::constant(Rational(1, 4)))});
  const auto mom = synthesize_moments(d, 7);
  CHECK(mom.K() == 7);
  CHECK(mom.value(0, 0.3) == doctest::Approx(3.0));
  CHECK(mom.value(1, 0.3) == doctest::Approx(3.0 - 1.0 + 0.5));
  // p4 = q0 − 4 q1 + 12 q2
  CHECK(mom.value(2, 0.3) == doctest::Approx(3.0 - 2.0 + 3.0));
}

TEST_CASE("synthesize_moments: ellipse with q0 = 1 has p_2k = ρ^2k") {
  const auto d = ellipse_data(2.0, 1.0, 0.5, {constant(1.0)});
  const auto mom = synthesize_moments(d, 5);
  for (double t : {0.0, 0.7, 2.0}) {
    const double r2 = d.support().rho2(t);
    for (int k = 0; k <= 5; ++k) CHECK(mom.value(k, t) == doctest::Approx(std::pow(r2, k)).epsilon(1e-12));
  }
}

TEST_CASE("synthesize_moments: needs K >= 3m - 2") {
  const auto d = ellipse_data(1.0, 1.0, 0.0, {constant(1.0), constant(1.0), constant(1.0)});
  CHECK_THROWS_AS(synthesize_moments(d, 6), InvalidParameter);
  CHECK_NOTHROW(synthesize_moments(d, 7));
}

TEST_CASE("solve_rho2_point: m = 1") {
  const std::vector<double> p{2.0, 8.0};
  CHECK(solve_rho2_point(std::span<const double>(p), 1) == doctest::Approx(4.0));
  const std::vector<Rational> pe{Rational(3), Rational(5)};
  CHECK(solve_rho2_point(std::span<const Rational>(pe), 1) == Rational(5, 3));
}

TEST_CASE("solve_rho2_point: degenerate and out of model") {
  const std::vector<double> zero{0.0, 1.0};
  CHECK_THROWS_AS(solve_rho2_point(std::span<const double>(zero), 1), DegeneratePoint);
  const std::vector<double> negative{1.0, -1.0};
  CHECK_THROWS_AS(solve_rho2_point(std::span<const double>(negative), 1), NotInModel);
}

TEST_CASE("solve_rho2 on the disk with q1 = -1") {
  const auto d = ellipse_data(1.0, 1.0, 0.0, {constant(0.0), constant(-1.0)});
  const auto mom = synthesize_moments(d, 4);
  for (double t : {0.0, 1.0, 2.5}) {
    CHECK(solve_rho2(mom, 2, t) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(solve_rho2_exact(mom, 2, t) == Rational(1));
  }
}

TEST_CASE("solve_rho2_point: inconsistent powers") {
  // p = (1, 1, 1, 1, 2, ...) forces u_2 != u_1^2 for m = 2
  const std::vector<Rational> p{Rational(1), Rational(2), Rational(3), Rational(5)};
  CHECK_THROWS(solve_rho2_point(std::span<const Rational>(p), 2));
}

TEST_CASE("Window::contains wraps around") {
  const Window w{-0.5, 0.5};
  CHECK(w.contains(0.0));
  CHECK(w.contains(2 * std::numbers::pi - 0.1));
  CHECK_FALSE(w.contains(1.0));
  CHECK_FALSE(w.contains(0.5));
}

TEST_CASE("reconstruct recovers a tilted ellipse") {
  const auto d = ellipse_data(1.5, 0.75, 0.4, {constant(1.0), constant(0.25)});
  const auto mom = synthesize_moments(d, 6);
  const auto report = reconstruct(mom, 2);
  CHECK(report.not_in_model_count == 0);
  CHECK(report.degenerate_count == 0);
  REQUIRE(report.quadratic_verdict);
  CHECK(report.quadratic_verdict->pass);
  REQUIRE(report.ellipse);
  const auto& truth = *d.support().quadratic_form();
  CHECK(report.ellipse->xx == doctest::Approx(truth.xx).epsilon(1e-9));
  CHECK(report.ellipse->xy == doctest::Approx(truth.xy).epsilon(1e-9));
  CHECK(report.ellipse->yy == doctest::Approx(truth.yy).epsilon(1e-9));
  CHECK(report.max_residual <= 1e-10);
}

TEST_CASE("reconstruct flags a perturbed disk") {
  const TangentialData d(perturb(make_ellipse(1.0, 1.0, 0.0, 64), 0.05, 4), {constant(1.0)});
  const auto report = reconstruct(synthesize_moments(d, 4), 1);
  REQUIRE(report.quadratic_verdict);
  CHECK_FALSE(report.quadratic_verdict->pass);
  CHECK_FALSE(report.ellipse);
  REQUIRE(report.rho2_estimate);
  CHECK(std::abs(report.rho2_estimate->cos_coeff(4)) == doctest::Approx(0.05).epsilon(1e-9));
}

TEST_CASE("windowed reconstruct reports no global verdict") {
  const auto d = ellipse_data(2.0, 1.0, 0.0, {constant(1.0)}, 64);
  const Window w{-0.4, 0.4};
  const auto report = reconstruct(synthesize_moments(d, 3), 1, w);
  CHECK_FALSE(report.locally_testable());
  CHECK_FALSE(report.quadratic_verdict);
  CHECK_FALSE(report.ellipse);
  CHECK(!report.points.empty());
  for (const auto& pt : report.points) {
    CHECK(w.contains(pt.theta));
    CHECK(pt.rho2 == doctest::Approx(d.support().rho2(pt.theta)).epsilon(1e-12));
  }
}

TEST_CASE("reconstruct fails when too many points are degenerate") {
  const auto d = ellipse_data(1.0, 1.0, 0.0, {constant(0.0)}, 32);
  CHECK_THROWS_AS(reconstruct(synthesize_moments(d, 3), 1), ReconstructionFailed);
}

TEST_CASE("exact reconstruct agrees with the float path") {
  const TangentialData d(make_ellipse(Rational(2), Rational(1, 2), 32),
                         {CircleFunction(TrigPoly<Rational>::constant(Rational(1))),
                          CircleFunction(TrigPoly<Rational>::constant(Rational(1, 3)))});
  const auto mom = synthesize_moments(d, 6);
  ReconstructOptions exact;
  exact.exact = true;
  const auto a = reconstruct(mom, 2, std::nullopt, exact);
  const auto b = reconstruct(mom, 2);
  REQUIRE(a.points.size() == b.points.size());
  for (std::size_t i = 0; i < a.points.size(); ++i)
    CHECK(a.points[i].rho2 == doctest::Approx(b.points[i].rho2).epsilon(1e-12));
  CHECK(a.ellipse);
}
