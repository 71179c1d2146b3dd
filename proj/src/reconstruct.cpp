#include "tangent/reconstruct.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "tangent/algebra.hpp"
#include "tangent/error.hpp"
#include "tangent/fourier.hpp"
#include "tangent/moments.hpp"

namespace tangent {

namespace {

CircleFunction halved(const CircleFunction& h) {
  if (h.exact()) return CircleFunction(*h.exact() * Rational(1, 2));
  if (h.trig()) return CircleFunction(*h.trig() * 0.5);
  std::vector<double> values(h.sampled()->values().begin(), h.sampled()->values().end());
  for (auto& v : values) v *= 0.5;
  return CircleFunction(SampledFunction(std::move(values)));
}

void check_solve_inputs(std::size_t available, int m) {
  if (m < 1) throw InvalidParameter("m must be at least 1");
  if (static_cast<int>(available) < 2 * m)
    throw InvalidParameter("solving for rho^2 needs moments through order 4m - 2");
}

// Row r, column i (u_i = ρ^{2i}): (−1)^{m−i} C(m, m−i) p_{r+m−i}; rhs −(−1)^m p_{r+m}.
template <class S>
void build_system(std::span<const S> p, int m, Matrix<S>& a, std::vector<S>& rhs) {
  a = Matrix<S>(m, m);
  rhs.assign(m, S(0));
  for (int r = 0; r < m; ++r) {
    for (int i = 1; i <= m; ++i) {
      S v = from_bigint<S>(binomial(m, m - i)) * p[r + m - i];
      a(r, i - 1) = ((m - i) % 2 == 0) ? v : S(-v);
    }
    rhs[r] = (m % 2 == 0) ? S(-p[r + m]) : p[r + m];
  }
}

}  // namespace

MomentSequence synthesize_moments(const TangentialData& data, int K) {
  if (K < 3 * data.m() - 2)
    throw InvalidParameter("K = " + std::to_string(K) + " is below 3m - 2 = " +
                           std::to_string(3 * data.m() - 2));
  std::vector<CircleFunction> half_orders;
  half_orders.reserve(K + 1);
  for (int k = 0; k <= K; ++k) half_orders.push_back(halved(moment(data, 2 * k)));
  return MomentSequence(std::make_shared<const TangentialData>(data), std::move(half_orders));
}

double solve_rho2_point(std::span<const double> p, int m, double consistency_tol) {
  check_solve_inputs(p.size(), m);
  RealMatrix a;
  std::vector<double> rhs;
  build_system<double>(p, m, a, rhs);

  // Unknowns ρ^{2i} differ widely in size; equilibrate the columns first.
  std::vector<double> column_scale(m, 1.0);
  for (int j = 0; j < m; ++j) {
    double largest = 0.0;
    for (int i = 0; i < m; ++i) largest = std::max(largest, std::abs(a(i, j)));
    if (largest > 0.0) column_scale[j] = largest;
    for (int i = 0; i < m; ++i) a(i, j) /= column_scale[j];
  }
  auto u = solve(a, rhs);
  if (!u) throw DegeneratePoint("moment system is singular (det A_0 = 0)");
  for (int j = 0; j < m; ++j) (*u)[j] /= column_scale[j];

  const double u1 = (*u)[0];
  if (!std::isfinite(u1)) throw DegeneratePoint("moment system is numerically singular");
  if (!(u1 > 0.0)) throw NotInModel("recovered rho^2 is not positive (" + std::to_string(u1) + ")");
  for (int i = 2; i <= m; ++i) {
    const double expected = std::pow(u1, i);
    const double got = (*u)[i - 1];
    if (std::abs(got - expected) > consistency_tol * std::max(std::abs(got), std::abs(expected)))
      throw NotInModel("u_" + std::to_string(i) + " != u_1^" + std::to_string(i));
  }
  return u1;
}

Rational solve_rho2_point(std::span<const Rational> p, int m) {
  check_solve_inputs(p.size(), m);
  ExactMatrix a;
  std::vector<Rational> rhs;
  build_system<Rational>(p, m, a, rhs);
  const auto u = solve(a, rhs);
  if (!u) throw DegeneratePoint("moment system is singular (det A_0 = 0)");
  const Rational& u1 = (*u)[0];
  if (sgn(u1) <= 0) throw NotInModel("recovered rho^2 is not positive (" + to_string(u1) + ")");
  for (int i = 2; i <= m; ++i)
    if ((*u)[i - 1] != ipow(u1, static_cast<unsigned>(i)))
      throw NotInModel("u_" + std::to_string(i) + " != u_1^" + std::to_string(i));
  return u1;
}

double solve_rho2(const MomentSequence& moments, int m, double theta) {
  check_solve_inputs(moments.K() + 1, m);
  return solve_rho2_point(moments.values_at(theta, 2 * m), m);
}

Rational solve_rho2_exact(const MomentSequence& moments, int m, double theta) {
  check_solve_inputs(moments.K() + 1, m);
  const auto p = moments.exact_values_at(theta, 2 * m);
  return solve_rho2_point(std::span<const Rational>(p), m);
}

bool Window::contains(double theta) const {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  auto wrap = [](double x) {
    x = std::fmod(x, two_pi);
    return x < 0.0 ? x + two_pi : x;
  };
  const double width = hi - lo;
  if (width >= two_pi) return true;
  if (!(width > 0.0)) return false;
  const double offset = wrap(theta - lo);
  return offset > 0.0 && offset < width;
}

namespace {

// Least-squares trigonometric fit through the solved directions only.
TrigPoly<double> fit_partial(const std::vector<PointEstimate>& points, int grid) {
  const int freq = grid / 4;
  std::vector<const PointEstimate*> used;
  for (const auto& pt : points)
    if (pt.status == PointEstimate::Status::ok) used.push_back(&pt);
  const int cols = 2 * freq + 1;
  if (static_cast<int>(used.size()) < cols)
    throw ReconstructionFailed("too few solved directions to fit rho^2");
  Eigen::MatrixXd design(used.size(), cols);
  Eigen::VectorXd target(used.size());
  for (std::size_t i = 0; i < used.size(); ++i) {
    const double t = used[i]->theta;
    design(i, 0) = 1.0;
    for (int f = 1; f <= freq; ++f) {
      design(i, 2 * f - 1) = std::cos(f * t);
      design(i, 2 * f) = std::sin(f * t);
    }
    target(i) = used[i]->rho2;
  }
  const Eigen::VectorXd x = design.colPivHouseholderQr().solve(target);
  std::vector<double> c(freq + 1), s(freq);
  c[0] = x(0);
  for (int f = 1; f <= freq; ++f) {
    c[f] = x(2 * f - 1);
    s[f - 1] = x(2 * f);
  }
  return TrigPoly<double>(std::move(c), std::move(s));
}

}  // namespace

ReconstructionReport reconstruct(const MomentSequence& moments, int m,
                                 std::optional<Window> window, const ReconstructOptions& options) {
  if (m < 1) throw InvalidParameter("m must be at least 1");
  if (moments.K() < 2 * m - 1)
    throw InvalidParameter("reconstruction needs moments through order 4m - 2");
  if (!(options.tol > 0.0) || !(options.consistency_tol > 0.0))
    throw InvalidParameter("tolerances must be positive");
  if (options.exact && moments.source() != MomentSequence::Source::synthetic)
    throw InvalidParameter("exact reconstruction needs a synthetic moment sequence");

  ReconstructionReport report;
  report.m = m;
  report.K = moments.K();
  report.grid = moments.grid();
  report.window = window;

  const int n = moments.grid();
  const int count = moments.K() + 1;
  for (int i = 0; i < n; ++i) {
    const double theta = grid_angle(i, n);
    if (window && !window->contains(theta)) continue;
    PointEstimate pt;
    pt.theta = theta;
    try {
      if (options.exact) {
        const auto p = moments.exact_values_at(theta, count);
        const Rational u1 = solve_rho2_point(std::span<const Rational>(p).first(2 * m), m);
        pt.rho2 = to_double(u1);
        std::vector<double> pd;
        for (const auto& v : p) pd.push_back(to_double(v));
        for (int r = 0; r + m < count; ++r) {
          const Rational res = recurrence_residual_at<Rational>(p, u1, m, r);
          if (is_zero(res)) continue;
          const double scale = recurrence_scale(pd, pt.rho2, m, r);
          pt.residual = std::max(pt.residual, std::abs(to_double(res)) / (scale > 0.0 ? scale : 1.0));
        }
      } else {
        const auto p = moments.values_at(theta, count);
        pt.rho2 = solve_rho2_point(std::span<const double>(p).first(2 * m), m,
                                   options.consistency_tol);
        for (int r = 0; r + m < count; ++r) {
          const double res = recurrence_residual_at<double>(p, pt.rho2, m, r);
          const double scale = recurrence_scale(p, pt.rho2, m, r);
          pt.residual = std::max(pt.residual, std::abs(res) / (scale > 0.0 ? scale : 1.0));
        }
      }
      report.max_residual = std::max(report.max_residual, pt.residual);
    } catch (const DegeneratePoint&) {
      pt.status = PointEstimate::Status::degenerate;
      ++report.degenerate_count;
    } catch (const NotInModel&) {
      pt.status = PointEstimate::Status::not_in_model;
      ++report.not_in_model_count;
    }
    report.points.push_back(pt);
  }

  const auto considered = static_cast<double>(report.points.size());
  if (report.points.empty()) throw ReconstructionFailed("window contains no grid directions");
  if (report.degenerate_count > options.degenerate_budget * considered)
    throw ReconstructionFailed(std::to_string(report.degenerate_count) + " of " +
                               std::to_string(report.points.size()) +
                               " directions are degenerate (det A_0 = 0)");

  // Global membership needs the whole circle.
  if (window) return report;

  if (report.degenerate_count == 0 && report.not_in_model_count == 0) {
    std::vector<double> samples;
    samples.reserve(n);
    for (const auto& pt : report.points) samples.push_back(pt.rho2);
    report.rho2_estimate = fourier_coefficients(samples);
    report.quadratic_verdict = is_homogeneous_restriction(samples, 2, options.tol);
  } else {
    report.rho2_estimate = fit_partial(report.points, n);
    report.quadratic_verdict = is_homogeneous_restriction(*report.rho2_estimate, 2, options.tol);
  }

  if (report.quadratic_verdict->pass && report.not_in_model_count == 0) {
    try {
      report.ellipse = fit_quadratic_form(*report.rho2_estimate, options.tol);
    } catch (const CertificateFailure& e) {
      report.certificate_error = e.what();
    } catch (const InvalidParameter& e) {
      report.certificate_error = e.what();
    }
  }
  return report;
}

}  // namespace tangent
