#pragma once

#include <optional>
#include <vector>

#include "tangent/circle_function.hpp"
#include "tangent/rational.hpp"
#include "tangent/trig_poly.hpp"

namespace tangent {

inline constexpr int kDefaultGrid = 512;

/// Symmetric 2×2 matrix [[xx, xy], [xy, yy]] acting as the quadratic form ω·Mω.
template <class S>
struct SymmetricForm {
  S xx{0};
  S xy{0};
  S yy{0};

  double operator()(double theta) const {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    return to_double(xx) * c * c + 2.0 * to_double(xy) * c * s + to_double(yy) * s * s;
  }

  bool is_positive_definite() const {
    return xx > S(0) && xx * yy - xy * xy > S(0);
  }

  /// ω·Mω = (xx + yy)/2 + (xx − yy)/2 · cos 2θ + xy · sin 2θ.
  TrigPoly<S> restriction() const {
    return TrigPoly<S>({(xx + yy) / S(2), S(0), (xx - yy) / S(2)}, {S(0), xy});
  }

  friend bool operator==(const SymmetricForm&, const SymmetricForm&) = default;
};

/// Support function ρ(θ) > 0 of a centrally symmetric planar convex body.
class SupportFunction {
 public:
  enum class Form { ellipse, trig, sampled };

  /// ρ(θ)² = ω·Mω. M must be positive definite.
  static SupportFunction ellipse(const SymmetricForm<double>& form, int grid = kDefaultGrid);
  static SupportFunction ellipse(const SymmetricForm<Rational>& form, int grid = kDefaultGrid);

  /// ρ² given as an even trigonometric polynomial, positive on the grid.
  static SupportFunction trig(const TrigPoly<double>& rho2, int grid = kDefaultGrid);
  static SupportFunction trig(const TrigPoly<Rational>& rho2, int grid = kDefaultGrid);

  /// ρ sampled on a uniform grid; positivity and period π are checked.
  static SupportFunction sampled(SampledFunction rho);

  Form form() const { return form_; }
  int grid() const { return grid_; }

  double rho(double theta) const;
  double rho2(double theta) const;

  const std::optional<SymmetricForm<double>>& quadratic_form() const { return form_matrix_; }
  const std::optional<SymmetricForm<Rational>>& exact_quadratic_form() const {
    return exact_form_matrix_;
  }

  /// ρ² as a trigonometric polynomial; for sampled bodies, the interpolant of ρ².
  TrigPoly<double> rho2_spectrum() const;
  /// Exact rational ρ², when the body was defined with rational parameters.
  const std::optional<TrigPoly<Rational>>& rho2_exact() const { return rho2_.exact(); }

 private:
  SupportFunction(Form form, CircleFunction rho2, int grid);
  void validate() const;

  Form form_;
  CircleFunction rho2_;
  std::optional<SampledFunction> rho_samples_;
  std::optional<SymmetricForm<double>> form_matrix_;
  std::optional<SymmetricForm<Rational>> exact_form_matrix_;
  int grid_;
};

/// Values of ρ and the densities q_0..q_{m-1} at one direction.
template <class S>
struct PointSample {
  S rho;
  std::vector<S> q;
};

/// The tangentially supported distribution
///
///   g(ω, p) = Σ_j q_j(ω) (δ^(j)(p − ρ(ω)) + (−1)^j δ^(j)(p + ρ(ω))),
///
/// held as its support function and densities. Densities must be even.
/// Minimality of m (q_{m-1} not identically zero) is checked on demand by
/// the operations that need it.
class TangentialData {
 public:
  TangentialData(SupportFunction rho, std::vector<CircleFunction> densities);

  int m() const { return static_cast<int>(densities_.size()); }
  int grid() const { return rho_.grid(); }
  const SupportFunction& support() const { return rho_; }
  const std::vector<CircleFunction>& densities() const { return densities_; }
  const CircleFunction& density(int j) const { return densities_.at(j); }

  PointSample<double> at(double theta) const;
  /// The same doubles as `at`, converted to rationals without rounding.
  PointSample<Rational> exact_at(double theta) const;

  /// q_{m-1} exceeds `tol` in absolute value at some grid point.
  bool leading_density_nonzero(double tol = 1e-12) const;

 private:
  SupportFunction rho_;
  std::vector<CircleFunction> densities_;
};

/// Ellipse with semi-axes a, b rotated by `tilt`: M = Rᵀ diag(a², b²) R.
SupportFunction make_ellipse(double a, double b, double tilt, int grid = kDefaultGrid);
/// Axis-aligned ellipse with rational semi-axes; ρ² is exact.
SupportFunction make_ellipse(const Rational& a, const Rational& b, int grid = kDefaultGrid);

/// ρ² + eps·cos(frequency·θ). `frequency` must be even and at least 4.
SupportFunction perturb(const SupportFunction& rho, double eps, int frequency);
/// Exact variant; requires a body with exact ρ².
SupportFunction perturb(const SupportFunction& rho, const Rational& eps, int frequency);

/// Recovers M with ω·Mω ≡ ρ² when the energy outside frequencies {0, 2} is
/// at most tol times the total. Throws CertificateFailure if that M is not
/// positive definite.
std::optional<SymmetricForm<double>> fit_quadratic_form(const TrigPoly<double>& rho2,
                                                        double tol = 1e-8);
/// Exact variant: any nonzero coefficient outside {0, 2} means no fit.
std::optional<SymmetricForm<Rational>> fit_quadratic_form(const TrigPoly<Rational>& rho2);

}  // namespace tangent
