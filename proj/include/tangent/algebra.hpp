#pragma once

#include <span>
#include <vector>

#include "tangent/geometry.hpp"
#include "tangent/matrix.hpp"
#include "tangent/moment_sequence.hpp"
#include "tangent/moments.hpp"

namespace tangent {

/// Σ_{k=0}^{m} (−1)^k C(m,k) c_{2r+2k,j}. Zero for every r ≥ 0 and j < m
/// because k ↦ c_{2r+2k,j} is a polynomial of degree j and the sum is an
/// m-th forward difference.
BigInt binomial_difference_residual(int m, int r, int j, const CoefficientFn& c = c_table);

/// Coefficients of p_{2r+2m} = Σ_k r_k p_{2r+2k}, r_k = −C(m,k) (−ρ²)^{m−k}.
/// Each r_k is the monomial weight[k] · (ρ²)^{m−k}.
struct RecurrenceCoeffs {
  int m = 0;
  std::vector<BigInt> weight;

  int exponent(int k) const { return m - k; }

  template <class S>
  std::vector<S> at(const S& rho2) const {
    std::vector<S> out;
    out.reserve(m);
    for (int k = 0; k < m; ++k)
      out.push_back(from_bigint<S>(weight[k]) * ipow(rho2, static_cast<unsigned>(m - k)));
    return out;
  }
};

RecurrenceCoeffs build_recurrence(int m);

/// Shift p_{2k} ↦ p_{2k+2} on m-windows: ones on the superdiagonal, last row r_0..r_{m−1}.
template <class S>
Matrix<S> companion_matrix(int m, const S& rho2) {
  if (m < 1) throw InvalidParameter("companion matrix needs m >= 1");
  Matrix<S> s(m, m);
  for (int i = 0; i + 1 < m; ++i) s(i, i + 1) = S(1);
  const auto r = build_recurrence(m).at(rho2);
  for (int k = 0; k < m; ++k) s(m - 1, k) = r[k];
  return s;
}

/// B_0 with entries c_{2k,j} ρ^{2k−j}, 0 <= k, j < m; B_0 Q = P_0.
template <class S>
Matrix<S> moment_basis_matrix(int m, const S& rho, const CoefficientFn& c = c_table) {
  if (m < 1) throw InvalidParameter("basis matrix needs m >= 1");
  if (is_zero(rho)) throw InvalidParameter("basis matrix needs rho != 0");
  Matrix<S> b(m, m);
  for (int k = 0; k < m; ++k)
    for (int j = 0; j < m; ++j) {
      const BigInt coeff = c(2 * k, j);
      if (sgn(coeff) == 0) continue;
      const int e = 2 * k - j;
      b(k, j) = from_bigint<S>(coeff) *
                (e >= 0 ? ipow(rho, static_cast<unsigned>(e))
                        : S(1) / ipow(rho, static_cast<unsigned>(-e)));
    }
  return b;
}

/// A_shift = (p_{2(shift+i+j)})_{i,j<m} from half-order moments p.
template <class S>
Matrix<S> hankel_moments(std::span<const S> p, int m, int shift = 0) {
  if (static_cast<int>(p.size()) < shift + 2 * m - 1)
    throw InvalidParameter("not enough moments for the Hankel matrix");
  Matrix<S> a(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) a(i, j) = p[shift + i + j];
  return a;
}

/// Σ_{k=0}^{m} (−1)^k C(m,k) ρ^{2(m−k)} p_{2r+2k} for half-order moments p.
template <class S>
S recurrence_residual_at(std::span<const S> p, const S& rho2, int m, int r) {
  if (static_cast<int>(p.size()) < r + m + 1)
    throw InvalidParameter("recurrence residual needs moments through order 2r + 2m");
  S sum(0);
  for (int k = 0; k <= m; ++k) {
    S term = from_bigint<S>(binomial(m, k)) * ipow(rho2, static_cast<unsigned>(m - k)) * p[r + k];
    sum += (k % 2 == 0) ? term : S(-term);
  }
  return sum;
}

/// Σ_k C(m,k) ρ^{2(m−k)} |p_{2r+2k}|: the scale a residual is measured against.
double recurrence_scale(std::span<const double> p, double rho2, int m, int r);

/// recurrence_residual_at with ρ from `rho` and moments from `moments` at theta.
double recurrence_residual(const MomentSequence& moments, const SupportFunction& rho, int m,
                           int r, double theta);

/// Structure of B_0⁻¹ S B_0 − ρ² I.
struct ConjugationStructure {
  bool lower_zero = false;           // strictly lower part vanishes
  bool constant_diagonal = false;    // diagonal is ρ²
  bool superdiagonal = false;        // entry (k−1, k) is 2ρk
  bool second_superdiagonal = false; // entry (k−2, k) is k(k−1), the rest zero
  bool nilpotent_index = false;      // N^{m−1} ≠ 0 and N^m = 0

  bool ok() const {
    return lower_zero && constant_diagonal && superdiagonal && second_superdiagonal &&
           nilpotent_index;
  }
};

ConjugationStructure inspect_conjugate(const ExactMatrix& conj, const Rational& rho);

/// B_0⁻¹ S B_0 = ρ² I + N. Throws InternalConsistency if the structure check fails.
ExactMatrix conjugate_companion(int m, const Rational& rho, const CoefficientFn& c = c_table);

/// Whether z, Az, ..., A^{m−1}z span, for A with the single m-fold eigenvalue
/// lambda. Decided both by the rank of the Krylov matrix and by
/// (A − λI)^{m−1} z ≠ 0; the two must agree.
bool krylov_spans(const ExactMatrix& a, const std::vector<Rational>& z, const Rational& lambda);

struct CertificatePoint {
  double theta = 0.0;
  Rational determinant;         // det A_0 from the moments at theta
  bool structure_ok = false;    // conjugation has the expected form
  bool leading_identity = false;// N^{m−1}Q = (2ρ)^{m−1}(m−1)! q_{m−1} e_1
  bool basis_identity = false;  // B_0 (2(−1)^j q_j)_j = P_0
  bool krylov_consistent = false; // Krylov span of (J, B_0⁻¹P_0) iff det A_0 ≠ 0
};

/// Non-singularity certificate for the Hankel moment matrix A_0 of `data`,
/// computed exactly at the rationalized point samples.
struct NonsingularityCertificate {
  int m = 0;
  std::vector<CertificatePoint> points;
  double max_abs_determinant = 0.0;
  bool verdict = false;
};

/// Throws HypothesisViolated when q_{m−1} vanishes on the whole grid.
NonsingularityCertificate certify_nonsingular(const TangentialData& data,
                                              std::span<const double> thetas);

}  // namespace tangent
