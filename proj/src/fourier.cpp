#include "tangent/fourier.hpp"

#include <fftw3.h>

#include <cmath>
#include <complex>
#include <mutex>
#include <numbers>

namespace tangent {

namespace {

// The FFTW planner is not reentrant; execution with a private plan is.
std::mutex& planner_mutex() {
  static std::mutex mutex;
  return mutex;
}

}  // namespace

double grid_angle(int i, int n) { return 2.0 * std::numbers::pi * i / n; }

std::vector<double> uniform_grid(int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = grid_angle(i, n);
  return out;
}

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

TrigPoly<double> fourier_coefficients(std::span<const double> samples) {
  const int n = static_cast<int>(samples.size());
  if (n < 1) throw InvalidParameter("no samples");
  const int half = n / 2;

  std::vector<double> in(samples.begin(), samples.end());
  std::vector<std::complex<double>> out(half + 1);
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_r2c_1d(n, in.data(), reinterpret_cast<fftw_complex*>(out.data()),
                                FFTW_ESTIMATE);
  }
  fftw_execute(plan);
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }

  // H_f = Σ h_i e^{−i f θ_i}; a_f = 2 Re H_f / n, b_f = −2 Im H_f / n.
  std::vector<double> cos(half + 1), sin(half);
  cos[0] = out[0].real() / n;
  for (int f = 1; f <= half; ++f) {
    const bool nyquist = (n % 2 == 0) && f == half;
    const double scale = nyquist ? 1.0 / n : 2.0 / n;
    cos[f] = scale * out[f].real();
    sin[f - 1] = nyquist ? 0.0 : -scale * out[f].imag();
  }
  return TrigPoly<double>(std::move(cos), std::move(sin));
}

std::vector<double> sample(const TrigPoly<double>& poly, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = poly(grid_angle(i, n));
  return out;
}

}  // namespace tangent
