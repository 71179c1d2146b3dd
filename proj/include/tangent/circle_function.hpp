#pragma once

#include <optional>
#include <span>
#include <vector>

#include "tangent/fourier.hpp"
#include "tangent/trig_poly.hpp"

namespace tangent {

/// Samples on the uniform grid of [0, 2π), together with their trigonometric
/// interpolant for off-grid evaluation.
class SampledFunction {
 public:
  explicit SampledFunction(std::vector<double> values);

  template <class Fn>
  static SampledFunction tabulate(Fn&& fn, int n) {
    std::vector<double> values(n);
    for (int i = 0; i < n; ++i) values[i] = fn(grid_angle(i, n));
    return SampledFunction(std::move(values));
  }

  int size() const { return static_cast<int>(values_.size()); }
  double theta(int i) const { return grid_angle(i, size()); }
  std::span<const double> values() const { return values_; }
  const TrigPoly<double>& interpolant() const { return interpolant_; }

  /// Exact sample at grid angles, trigonometric interpolation elsewhere.
  double operator()(double theta) const;

 private:
  std::vector<double> values_;
  TrigPoly<double> interpolant_;
};

/// A function on S¹: a trigonometric polynomial (optionally with exact
/// rational coefficients) or a sampled function.
class CircleFunction {
 public:
  CircleFunction() : trig_(TrigPoly<double>()) {}
  CircleFunction(TrigPoly<double> poly) : trig_(std::move(poly)) {}  // NOLINT
  CircleFunction(const TrigPoly<Rational>& poly)                    // NOLINT
      : exact_(poly), trig_(poly.to_double_poly()) {}
  CircleFunction(SampledFunction samples) : samples_(std::move(samples)) {}  // NOLINT

  double operator()(double theta) const;

  std::vector<double> sample(int n) const;

  const std::optional<TrigPoly<Rational>>& exact() const { return exact_; }
  const std::optional<TrigPoly<double>>& trig() const { return trig_; }
  const std::optional<SampledFunction>& sampled() const { return samples_; }

  /// Trigonometric form: the polynomial itself, or the interpolant of the samples.
  TrigPoly<double> spectrum() const;

  /// max_i |h(θ_i) - h(θ_i + π)| on the n-point grid.
  double evenness_defect(int n) const;

  /// max_i |h(θ_i)| on the n-point grid.
  double max_abs(int n) const;

 private:
  std::optional<TrigPoly<Rational>> exact_;
  std::optional<TrigPoly<double>> trig_;
  std::optional<SampledFunction> samples_;
};

}  // namespace tangent
