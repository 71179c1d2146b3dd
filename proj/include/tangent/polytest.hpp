#pragma once

#include <map>
#include <span>
#include <vector>

#include "tangent/geometry.hpp"
#include "tangent/trig_poly.hpp"

namespace tangent {

inline constexpr double kDefaultMembershipTol = 1e-8;

/// Outcome of testing whether h on S¹ is the restriction of a homogeneous
/// polynomial of degree k. In the plane that holds exactly when h is a
/// trigonometric polynomial whose frequencies all lie in {k, k−2, ..., k mod 2}.
struct MembershipReport {
  int degree = 0;
  double allowed_energy = 0.0;
  double forbidden_energy = 0.0;
  double tol = kDefaultMembershipTol;
  bool exact = false;
  bool pass = false;
  /// Forbidden frequencies with non-negligible amplitude, f ↦ sqrt(a_f² + b_f²).
  std::map<int, double> residual_spectrum;
};

bool is_allowed_frequency(int frequency, int degree);

/// Samples on the uniform grid; needs at least 4k + 4 of them.
MembershipReport is_homogeneous_restriction(std::span<const double> samples, int k,
                                            double tol = kDefaultMembershipTol);
MembershipReport is_homogeneous_restriction(const TrigPoly<double>& h, int k,
                                            double tol = kDefaultMembershipTol);
/// Exact: passes only if the forbidden energy is exactly zero.
MembershipReport is_homogeneous_restriction(const TrigPoly<Rational>& h, int k);

/// Tests moment(data, 2k) for k = 0..K. With `exact` set, moments that carry
/// an exact trigonometric form are tested exactly.
std::vector<MembershipReport> range_check(const TangentialData& data, int K,
                                          double tol = kDefaultMembershipTol, bool exact = false);

}  // namespace tangent
