#include "tangent/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "tangent/error.hpp"

namespace tangent {

namespace {

constexpr double kSampledEvenTol = 64 * std::numeric_limits<double>::epsilon();

void require_grid(int grid) {
  if (grid < 4 || grid % 2 != 0) throw InvalidParameter("grid size must be even and at least 4");
}

}  // namespace

SupportFunction::SupportFunction(Form form, CircleFunction rho2, int grid)
    : form_(form), rho2_(std::move(rho2)), grid_(grid) {}

void SupportFunction::validate() const {
  require_grid(grid_);
  if (form_ != Form::sampled) {
    const auto& poly = *rho2_.trig();
    const bool even = rho2_.exact() ? rho2_.exact()->is_even() : poly.is_even(1e-12);
    if (!even) throw InvalidParameter("rho^2 contains odd frequencies; the body is not symmetric");
  } else {
    const double scale = rho_samples_->interpolant().cos_coeff(0);
    if (CircleFunction(*rho_samples_).evenness_defect(grid_) > kSampledEvenTol * std::abs(scale))
      throw InvalidParameter("sampled rho is not invariant under theta -> theta + pi");
  }
  double min_rho2 = std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid_; ++i) min_rho2 = std::min(min_rho2, rho2(grid_angle(i, grid_)));
  if (!(min_rho2 > 0.0))
    throw InvalidParameter("rho^2 is not positive on the grid (min " + std::to_string(min_rho2) + ")");
}

SupportFunction SupportFunction::ellipse(const SymmetricForm<double>& form, int grid) {
  if (!form.is_positive_definite()) throw InvalidParameter("ellipse matrix must be positive definite");
  SupportFunction out(Form::ellipse, CircleFunction(form.restriction()), grid);
  out.form_matrix_ = form;
  out.validate();
  return out;
}

SupportFunction SupportFunction::ellipse(const SymmetricForm<Rational>& form, int grid) {
  if (!form.is_positive_definite()) throw InvalidParameter("ellipse matrix must be positive definite");
  SupportFunction out(Form::ellipse, CircleFunction(form.restriction()), grid);
  out.form_matrix_ = SymmetricForm<double>{to_double(form.xx), to_double(form.xy), to_double(form.yy)};
  out.exact_form_matrix_ = form;
  out.validate();
  return out;
}

SupportFunction SupportFunction::trig(const TrigPoly<double>& rho2, int grid) {
  SupportFunction out(Form::trig, CircleFunction(rho2.trimmed()), grid);
  out.validate();
  return out;
}

SupportFunction SupportFunction::trig(const TrigPoly<Rational>& rho2, int grid) {
  SupportFunction out(Form::trig, CircleFunction(rho2.trimmed()), grid);
  out.validate();
  return out;
}

SupportFunction SupportFunction::sampled(SampledFunction rho) {
  const int grid = rho.size();
  for (double v : rho.values())
    if (!(v > 0.0)) throw InvalidParameter("sampled rho must be positive");
  std::vector<double> squared;
  squared.reserve(grid);
  for (double v : rho.values()) squared.push_back(v * v);
  SupportFunction out(Form::sampled, CircleFunction(SampledFunction(std::move(squared))), grid);
  out.rho_samples_ = std::move(rho);
  out.validate();
  return out;
}

double SupportFunction::rho(double theta) const {
  if (rho_samples_) return (*rho_samples_)(theta);
  return std::sqrt(rho2(theta));
}

double SupportFunction::rho2(double theta) const {
  if (rho_samples_) {
    const double r = (*rho_samples_)(theta);
    return r * r;
  }
  return rho2_(theta);
}

TrigPoly<double> SupportFunction::rho2_spectrum() const { return rho2_.spectrum(); }

TangentialData::TangentialData(SupportFunction rho, std::vector<CircleFunction> densities)
    : rho_(std::move(rho)), densities_(std::move(densities)) {
  if (densities_.empty()) throw InvalidParameter("tangential data needs at least one density (m >= 1)");
  for (std::size_t j = 0; j < densities_.size(); ++j) {
    const auto& q = densities_[j];
    bool even;
    if (q.exact()) {
      even = q.exact()->is_even();
    } else if (q.trig()) {
      even = q.trig()->is_even();
    } else {
      even = q.evenness_defect(grid()) <= kSampledEvenTol * std::max(1.0, q.max_abs(grid()));
    }
    if (!even)
      throw InvalidParameter("density q_" + std::to_string(j) + " is not even (period pi)");
  }
}

PointSample<double> TangentialData::at(double theta) const {
  PointSample<double> out{rho_.rho(theta), {}};
  out.q.reserve(densities_.size());
  for (const auto& q : densities_) out.q.push_back(q(theta));
  return out;
}

PointSample<Rational> TangentialData::exact_at(double theta) const {
  const auto point = at(theta);
  PointSample<Rational> out{exact_rational(point.rho), {}};
  out.q.reserve(point.q.size());
  for (double v : point.q) out.q.push_back(exact_rational(v));
  return out;
}

bool TangentialData::leading_density_nonzero(double tol) const {
  return densities_.back().max_abs(grid()) > tol;
}

SupportFunction make_ellipse(double a, double b, double tilt, int grid) {
  if (!(a > 0.0) || !(b > 0.0)) throw InvalidParameter("ellipse semi-axes must be positive");
  const double c = std::cos(tilt);
  const double s = std::sin(tilt);
  // Rᵀ diag(a², b²) R with R = [[c, −s], [s, c]]
  const double a2 = a * a;
  const double b2 = b * b;
  SymmetricForm<double> form{c * c * a2 + s * s * b2, -c * s * a2 + s * c * b2,
                             s * s * a2 + c * c * b2};
  return SupportFunction::ellipse(form, grid);
}

SupportFunction make_ellipse(const Rational& a, const Rational& b, int grid) {
  if (sgn(a) <= 0 || sgn(b) <= 0) throw InvalidParameter("ellipse semi-axes must be positive");
  return SupportFunction::ellipse(SymmetricForm<Rational>{a * a, Rational(0), b * b}, grid);
}

namespace {

void check_perturbation_frequency(int frequency) {
  if (frequency < 4 || frequency % 2 != 0)
    throw InvalidParameter("perturbation frequency must be even and >= 4");
}

}  // namespace

SupportFunction perturb(const SupportFunction& rho, double eps, int frequency) {
  check_perturbation_frequency(frequency);
  if (eps == 0.0) return rho;
  const auto base = rho.rho2_spectrum();
  return SupportFunction::trig(base + TrigPoly<double>::cosine(frequency, eps), rho.grid());
}

SupportFunction perturb(const SupportFunction& rho, const Rational& eps, int frequency) {
  check_perturbation_frequency(frequency);
  if (!rho.rho2_exact()) throw InvalidParameter("exact perturbation needs a body with exact rho^2");
  if (sgn(eps) == 0) return rho;
  return SupportFunction::trig(*rho.rho2_exact() + TrigPoly<Rational>::cosine(frequency, eps),
                               rho.grid());
}

std::optional<SymmetricForm<double>> fit_quadratic_form(const TrigPoly<double>& rho2, double tol) {
  if (!rho2.is_even(1e-12)) throw InvalidParameter("rho^2 must be even");
  double inside = 0.0;
  double outside = 0.0;
  for (int f = 0; f <= rho2.max_frequency(); ++f)
    (f == 0 || f == 2 ? inside : outside) += rho2.energy(f);
  if (outside > tol * (inside + outside)) return std::nullopt;
  const double c0 = rho2.cos_coeff(0);
  const double c2 = rho2.cos_coeff(2);
  const double s2 = rho2.sin_coeff(2);
  SymmetricForm<double> form{c0 + c2, s2, c0 - c2};
  if (!form.is_positive_definite())
    throw CertificateFailure("rho^2 is quadratic but its matrix is not positive definite");
  return form;
}

std::optional<SymmetricForm<Rational>> fit_quadratic_form(const TrigPoly<Rational>& rho2) {
  if (!rho2.is_even()) throw InvalidParameter("rho^2 must be even");
  for (int f = 1; f <= rho2.max_frequency(); ++f)
    if (f != 2 && (!is_zero(rho2.cos_coeff(f)) || !is_zero(rho2.sin_coeff(f)))) return std::nullopt;
  const Rational c0 = rho2.cos_coeff(0);
  const Rational c2 = rho2.cos_coeff(2);
  const Rational s2 = rho2.sin_coeff(2);
  SymmetricForm<Rational> form{c0 + c2, s2, c0 - c2};
  if (!form.is_positive_definite())
    throw CertificateFailure("rho^2 is quadratic but its matrix is not positive definite");
  return form;
}

}  // namespace tangent
