#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tangent/geometry.hpp"
#include "tangent/matrix.hpp"
#include "tangent/moment_sequence.hpp"
#include "tangent/polytest.hpp"

namespace tangent {

/// p_{2k} = Σ_j c_{2k,j} ρ^{2k−j} (−1)^j q_j for k = 0..K, i.e. half of the
/// distributional moment. Requires K >= 3m − 2.
MomentSequence synthesize_moments(const TangentialData& data, int K);

/// Solves the m recurrence identities r = 0..m−1 for u_i = ρ^{2i} and returns
/// u_1. `p` holds half-order moments p_0..p_{2(2m−1)}. Throws DegeneratePoint
/// when the system is singular and NotInModel when u_i ≠ u_1^i or u_1 <= 0.
double solve_rho2_point(std::span<const double> p, int m, double consistency_tol = 1e-8);
Rational solve_rho2_point(std::span<const Rational> p, int m);

double solve_rho2(const MomentSequence& moments, int m, double theta);
/// Exact solve from the generating data; synthetic sequences only.
Rational solve_rho2_exact(const MomentSequence& moments, int m, double theta);

/// Open arc (lo, hi) of directions, taken modulo 2π.
struct Window {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double theta) const;
};

struct ReconstructOptions {
  double tol = kDefaultMembershipTol;
  bool exact = false;
  double degenerate_budget = 0.05;
  double consistency_tol = 1e-8;
};

struct PointEstimate {
  enum class Status { ok, degenerate, not_in_model };
  double theta = 0.0;
  double rho2 = 0.0;
  double residual = 0.0;  // max over r of |residual| / scale
  Status status = Status::ok;
};

struct ReconstructionReport {
  int m = 0;
  int K = 0;
  int grid = 0;
  std::optional<Window> window;
  std::vector<PointEstimate> points;
  std::optional<TrigPoly<double>> rho2_estimate;
  std::optional<MembershipReport> quadratic_verdict;  // absent in windowed mode
  std::optional<SymmetricForm<double>> ellipse;
  std::string certificate_error;
  double max_residual = 0.0;
  int degenerate_count = 0;
  int not_in_model_count = 0;

  bool locally_testable() const { return !window.has_value(); }
};

/// Solves ρ² at every grid direction (inside `window` if given), checks the
/// recurrences through order 2K, and certifies whether ρ² is a positive
/// quadratic form. Throws ReconstructionFailed when more than the budget of
/// directions is degenerate.
ReconstructionReport reconstruct(const MomentSequence& moments, int m,
                                 std::optional<Window> window = std::nullopt,
                                 const ReconstructOptions& options = {});

}  // namespace tangent
