#include "tangent/polytest.hpp"

#include <cmath>
#include <string>

#include "tangent/error.hpp"
#include "tangent/fourier.hpp"
#include "tangent/moments.hpp"

namespace tangent {

namespace {

// Amplitudes below this fraction of the largest coefficient are not listed.
constexpr double kSpectrumFloor = 1e-12;

}  // namespace

bool is_allowed_frequency(int frequency, int degree) {
  return frequency <= degree && (degree - frequency) % 2 == 0;
}

MembershipReport is_homogeneous_restriction(std::span<const double> samples, int k, double tol) {
  if (k < 0) throw InvalidParameter("degree must be nonnegative");
  if (static_cast<int>(samples.size()) < 4 * k + 4)
    throw InvalidParameter("membership test at degree " + std::to_string(k) + " needs at least " +
                           std::to_string(4 * k + 4) + " samples");
  return is_homogeneous_restriction(fourier_coefficients(samples), k, tol);
}

MembershipReport is_homogeneous_restriction(const TrigPoly<double>& h, int k, double tol) {
  if (k < 0) throw InvalidParameter("degree must be nonnegative");
  if (!(tol >= 0.0)) throw InvalidParameter("tolerance must be nonnegative");
  MembershipReport report;
  report.degree = k;
  report.tol = tol;
  double largest = 0.0;
  for (int f = 0; f <= h.max_frequency(); ++f)
    largest = std::max(largest, std::hypot(h.cos_coeff(f), h.sin_coeff(f)));
  for (int f = 0; f <= h.max_frequency(); ++f) {
    const double e = h.energy(f);
    if (is_allowed_frequency(f, k)) {
      report.allowed_energy += e;
    } else {
      report.forbidden_energy += e;
      const double amplitude = std::hypot(h.cos_coeff(f), h.sin_coeff(f));
      if (amplitude > kSpectrumFloor * largest) report.residual_spectrum[f] = amplitude;
    }
  }
  report.pass =
      report.forbidden_energy <= tol * (report.allowed_energy + report.forbidden_energy);
  return report;
}

MembershipReport is_homogeneous_restriction(const TrigPoly<Rational>& h, int k) {
  if (k < 0) throw InvalidParameter("degree must be nonnegative");
  MembershipReport report;
  report.degree = k;
  report.tol = 0.0;
  report.exact = true;
  Rational allowed(0), forbidden(0);
  for (int f = 0; f <= h.max_frequency(); ++f) {
    const Rational e = h.energy(f);
    if (is_allowed_frequency(f, k)) {
      allowed += e;
    } else {
      forbidden += e;
      if (sgn(e) != 0)
        report.residual_spectrum[f] =
            std::hypot(to_double(h.cos_coeff(f)), to_double(h.sin_coeff(f)));
    }
  }
  report.allowed_energy = to_double(allowed);
  report.forbidden_energy = to_double(forbidden);
  report.pass = sgn(forbidden) == 0;
  return report;
}

std::vector<MembershipReport> range_check(const TangentialData& data, int K, double tol,
                                          bool exact) {
  if (K < 0) throw InvalidParameter("K must be nonnegative");
  if (data.grid() < 8 * K + 4)
    throw InvalidParameter("range check through order 2K needs a grid of at least 8K + 4 points");
  std::vector<MembershipReport> reports;
  reports.reserve(K + 1);
  for (int k = 0; k <= K; ++k) {
    const CircleFunction h = moment(data, 2 * k);
    if (exact && h.exact()) {
      reports.push_back(is_homogeneous_restriction(*h.exact(), 2 * k));
    } else {
      reports.push_back(is_homogeneous_restriction(h.sample(data.grid()), 2 * k, tol));
    }
  }
  return reports;
}

}  // namespace tangent
