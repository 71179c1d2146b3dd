#include "tangent/circle_function.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace tangent {

SampledFunction::SampledFunction(std::vector<double> values)
    : values_(std::move(values)), interpolant_(fourier_coefficients(values_)) {}

double SampledFunction::operator()(double theta) const {
  const int n = size();
  const double pos = theta / (2.0 * std::numbers::pi) * n;
  const double nearest = std::round(pos);
  if (std::abs(pos - nearest) < 1e-9) {
    int i = static_cast<int>(nearest) % n;
    if (i < 0) i += n;
    return values_[i];
  }
  return interpolant_(theta);
}

double CircleFunction::operator()(double theta) const {
  if (trig_) return (*trig_)(theta);
  return (*samples_)(theta);
}

std::vector<double> CircleFunction::sample(int n) const {
  if (samples_ && samples_->size() == n)
    return {samples_->values().begin(), samples_->values().end()};
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = (*this)(grid_angle(i, n));
  return out;
}

TrigPoly<double> CircleFunction::spectrum() const {
  if (trig_) return *trig_;
  return samples_->interpolant();
}

double CircleFunction::evenness_defect(int n) const {
  if (n % 2 != 0) throw InvalidParameter("evenness check needs an even grid");
  const auto values = sample(n);
  double defect = 0.0;
  for (int i = 0; i < n / 2; ++i) defect = std::max(defect, std::abs(values[i] - values[i + n / 2]));
  return defect;
}

double CircleFunction::max_abs(int n) const {
  double out = 0.0;
  for (double v : sample(n)) out = std::max(out, std::abs(v));
  return out;
}

}  // namespace tangent
