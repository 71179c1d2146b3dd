#include "tangent/radon.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tangent/error.hpp"
#include "tangent/geometry.hpp"
#include "tangent/moments.hpp"

namespace tangent {

LineParam LineParam::canonical() const {
  constexpr double pi = std::numbers::pi;
  double t = std::fmod(theta, 2.0 * pi);
  if (t < 0.0) t += 2.0 * pi;
  if (t >= pi) return {t - pi, -p};
  return {t, p};
}

double gauss_chebyshev(const std::function<double(double)>& g, int nodes) {
  if (nodes < 1) throw InvalidParameter("Gauss-Chebyshev rule needs at least one node");
  double sum = 0.0;
  for (int i = 1; i <= nodes; ++i) sum += g(std::cos((2.0 * i - 1.0) * std::numbers::pi / (2.0 * nodes)));
  return std::numbers::pi / nodes * sum;
}

double disk_density(double x1, double x2) {
  const double r2 = x1 * x1 + x2 * x2;
  if (r2 >= 1.0) return 0.0;
  return 1.0 / (std::numbers::pi * std::sqrt(1.0 - r2));
}

double radon_disk_density(const LineParam& line, int nodes) {
  const double p = line.p;
  if (std::abs(p) == 1.0) throw SingularLine("line is tangent to the unit circle (|p| = 1)");
  if (std::abs(p) > 1.0) return 0.0;

  // Chord x = p ω + s ω⊥, |s| < L. With s = L t, f₀ ds = g(t) dt / sqrt(1 − t²)
  // where g is constant, so the rule is exact.
  const double c = std::cos(line.theta);
  const double s = std::sin(line.theta);
  const double half_chord2 = (1.0 - p) * (1.0 + p);
  const double half_chord = std::sqrt(half_chord2);
  auto smooth_part = [&](double t) {
    const double arc = half_chord * t;
    const double x1 = p * c - arc * s;
    const double x2 = p * s + arc * c;
    return disk_density(x1, x2) * half_chord * std::sqrt((1.0 - t) * (1.0 + t));
  };
  return gauss_chebyshev(smooth_part, nodes);
}

double second_p_derivative_moments(int k) {
  if (k < 0 || k % 2 != 0) throw InvalidParameter("moment order must be even and nonnegative");
  // ∂_p² R f₀ = δ′(p + 1) − δ′(p − 1): the unit disk with q_1 = −1.
  const TangentialData disk(make_ellipse(1.0, 1.0, 0.0), {CircleFunction(TrigPoly<double>()),
                                                          CircleFunction(TrigPoly<double>::constant(-1.0))});
  return moment_at(disk.at(0.0), k);
}

namespace {

// Centered quartic B-spline, support [−5/2, 5/2], unit mass.
double quartic_bspline(double x) {
  x = std::abs(x);
  if (x < 0.5) return 115.0 / 192.0 - 5.0 / 8.0 * x * x + 0.25 * x * x * x * x;
  if (x < 1.5) return (55.0 + 20.0 * x - 120.0 * x * x + 80.0 * x * x * x - 16.0 * x * x * x * x) / 96.0;
  if (x < 2.5) {
    const double u = 5.0 - 2.0 * x;
    return u * u * u * u / 384.0;
  }
  return 0.0;
}

constexpr double kSplineHalfWidth = 2.5;

// Breakpoints of the integrand s ↦ R(s) φ_h(p − s) inside [p − h, p + h].
std::vector<double> convolution_breaks(double p, double h) {
  const double unit = h / kSplineHalfWidth;
  std::vector<double> breaks;
  for (double knot : {-2.5, -1.5, -0.5, 0.5, 1.5, 2.5}) breaks.push_back(p + knot * unit);
  for (double jump : {-1.0, 1.0})
    if (jump > p - h && jump < p + h) breaks.push_back(jump);
  std::sort(breaks.begin(), breaks.end());
  return breaks;
}

// (R f₀ * φ_h)(p), with R f₀ taken from the quadrature on the line (0, s).
double mollified_projection(double p, double h) {
  using Rule = boost::math::quadrature::gauss<double, 7>;
  const auto breaks = convolution_breaks(p, h);
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = breaks[i];
    const double b = breaks[i + 1];
    if (b <= a) continue;
    total += Rule::integrate(
        [&](double s) {
          if (std::abs(s) == 1.0) return 0.0;
          return radon_disk_density(LineParam{0.0, s}) * mollifier(p - s, h);
        },
        a, b);
  }
  return total;
}

}  // namespace

double mollifier(double x, double h) {
  if (!(h > 0.0)) throw InvalidParameter("mollifier width must be positive");
  const double scale = kSplineHalfWidth / h;
  return scale * quartic_bspline(x * scale);
}

double mollified_second_derivative_moment(int k, double h) {
  if (k < 0) throw InvalidParameter("moment order must be nonnegative");
  if (!(h > 0.0) || h >= 0.5) throw InvalidParameter("mollifier width must be in (0, 0.5)");
  using Rule = boost::math::quadrature::gauss<double, 20>;
  const double step = h / 10.0;
  auto second_derivative = [&](double p) {
    return (mollified_projection(p + step, h) - 2.0 * mollified_projection(p, h) +
            mollified_projection(p - step, h)) /
           (step * step);
  };
  // The difference quotient is a piecewise polynomial supported on
  // [±1 − h − step, ±1 + h + step], with breaks at the spline knots shifted
  // by 0 and ±step; integrate it piece by piece.
  const double unit = h / kSplineHalfWidth;
  std::vector<double> breaks;
  for (double centre : {-1.0, 1.0})
    for (double knot : {-2.5, -1.5, -0.5, 0.5, 1.5, 2.5})
      for (double shift : {-step, 0.0, step}) breaks.push_back(centre + knot * unit + shift);
  std::sort(breaks.begin(), breaks.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (!(breaks[i + 1] > breaks[i])) continue;
    total += Rule::integrate([&](double p) { return second_derivative(p) * std::pow(p, k); },
                             breaks[i], breaks[i + 1]);
  }
  return total;
}

std::vector<SinogramSample> disk_sinogram(const std::vector<double>& thetas,
                                          const std::vector<double>& offsets, int* skipped) {
  std::vector<SinogramSample> out;
  out.reserve(thetas.size() * offsets.size());
  int skip = 0;
  for (double theta : thetas) {
    for (double p : offsets) {
      if (std::abs(p) == 1.0) {
        ++skip;
        continue;
      }
      out.push_back({theta, p, radon_disk_density(LineParam{theta, p})});
    }
  }
  if (skipped) *skipped = skip;
  return out;
}

}  // namespace tangent
