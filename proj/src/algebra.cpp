#include "tangent/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tangent/error.hpp"

namespace tangent {

BigInt binomial_difference_residual(int m, int r, int j, const CoefficientFn& c) {
  if (m < 1 || r < 0 || j < 0) throw InvalidParameter("need m >= 1, r >= 0, j >= 0");
  BigInt sum = 0;
  for (int k = 0; k <= m; ++k) {
    const BigInt term = binomial(m, k) * c(2 * r + 2 * k, j);
    if (k % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
  }
  return sum;
}

RecurrenceCoeffs build_recurrence(int m) {
  if (m < 1) throw InvalidParameter("recurrence needs m >= 1");
  RecurrenceCoeffs out;
  out.m = m;
  for (int k = 0; k < m; ++k) {
    BigInt w = -binomial(m, k);
    if ((m - k) % 2 != 0) w = -w;
    out.weight.push_back(w);
  }
  return out;
}

double recurrence_scale(std::span<const double> p, double rho2, int m, int r) {
  if (static_cast<int>(p.size()) < r + m + 1)
    throw InvalidParameter("recurrence scale needs moments through order 2r + 2m");
  double sum = 0.0;
  for (int k = 0; k <= m; ++k)
    sum += binomial(m, k).get_d() * std::pow(std::abs(rho2), m - k) * std::abs(p[r + k]);
  return sum;
}

double recurrence_residual(const MomentSequence& moments, const SupportFunction& rho, int m,
                           int r, double theta) {
  if (m < 1 || r < 0) throw InvalidParameter("need m >= 1 and r >= 0");
  const auto p = moments.values_at(theta, r + m + 1);
  return recurrence_residual_at<double>(p, rho.rho2(theta), m, r);
}

ConjugationStructure inspect_conjugate(const ExactMatrix& conj, const Rational& rho) {
  const int m = conj.rows();
  if (conj.cols() != m) throw InvalidParameter("conjugate must be square");
  const Rational rho2 = rho * rho;
  ConjugationStructure s;
  s.lower_zero = true;
  s.constant_diagonal = true;
  s.superdiagonal = true;
  s.second_superdiagonal = true;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      const Rational& v = conj(i, j);
      if (j < i) {
        if (!is_zero(v)) s.lower_zero = false;
      } else if (j == i) {
        if (v != rho2) s.constant_diagonal = false;
      } else if (j == i + 1) {
        if (v != Rational(2 * j) * rho) s.superdiagonal = false;
      } else if (j == i + 2) {
        if (v != Rational(j * (j - 1))) s.second_superdiagonal = false;
      } else if (!is_zero(v)) {
        s.second_superdiagonal = false;
      }
    }
  }
  const ExactMatrix n = conj - ExactMatrix::identity(m) * rho2;
  const ExactMatrix below = power(n, static_cast<unsigned>(m - 1));
  s.nilpotent_index = !below.is_zero_matrix() && (below * n).is_zero_matrix();
  return s;
}

ExactMatrix conjugate_companion(int m, const Rational& rho, const CoefficientFn& c) {
  if (is_zero(rho)) throw InvalidParameter("conjugation needs rho != 0");
  const ExactMatrix b0 = moment_basis_matrix<Rational>(m, rho, c);
  const auto b0_inv = inverse(b0);
  if (!b0_inv) throw InternalConsistency("basis matrix B_0 is singular");
  const ExactMatrix conj = *b0_inv * companion_matrix<Rational>(m, rho * rho) * b0;
  if (!inspect_conjugate(conj, rho).ok())
    throw InternalConsistency("B_0^-1 S B_0 is not rho^2 I + N with the expected N (m = " +
                              std::to_string(m) + ")");
  return conj;
}

bool krylov_spans(const ExactMatrix& a, const std::vector<Rational>& z, const Rational& lambda) {
  const int m = a.rows();
  if (a.cols() != m || static_cast<int>(z.size()) != m)
    throw InvalidParameter("Krylov test needs a square matrix and a matching vector");
  const ExactMatrix shifted = a - ExactMatrix::identity(m) * lambda;
  const ExactMatrix top = power(shifted, static_cast<unsigned>(m - 1));
  if (!(top * shifted).is_zero_matrix())
    throw InvalidParameter("(A - lambda I)^m is not zero; lambda is not an m-fold eigenvalue");

  ExactMatrix krylov(m, m);
  std::vector<Rational> v = z;
  for (int i = 0; i < m; ++i) {
    krylov.set_column(i, v);
    v = a * v;
  }
  const bool by_rank = rank(krylov) == m;
  const auto leading = top * z;
  const bool by_criterion =
      std::any_of(leading.begin(), leading.end(), [](const Rational& x) { return !is_zero(x); });
  if (by_rank != by_criterion)
    throw InternalConsistency("Krylov rank and the (A - lambda I)^(m-1) z criterion disagree");
  return by_rank;
}

namespace {

CertificatePoint certify_point(const TangentialData& data, double theta) {
  const int m = data.m();
  const auto point = data.exact_at(theta);
  const Rational& rho = point.rho;

  std::vector<Rational> p;
  for (int k = 0; k <= 2 * m - 2; ++k) p.push_back(moment_at(point, 2 * k));

  CertificatePoint out;
  out.theta = theta;
  out.determinant = determinant(hankel_moments<Rational>(p, m));

  const ExactMatrix b0 = moment_basis_matrix<Rational>(m, rho);
  const ExactMatrix s = companion_matrix<Rational>(m, rho * rho);
  const ExactMatrix conj = *inverse(b0) * s * b0;
  out.structure_ok = inspect_conjugate(conj, rho).ok();

  // N^{m−1} Q against (2ρ)^{m−1} (m−1)! q_{m−1} e_1
  const ExactMatrix n = conj - ExactMatrix::identity(m) * (rho * rho);
  const auto lead = power(n, static_cast<unsigned>(m - 1)) * point.q;
  BigInt factorial = 1;
  for (int i = 2; i < m; ++i) factorial *= i;
  std::vector<Rational> expected(m, Rational(0));
  expected[0] = ipow(Rational(2 * rho), static_cast<unsigned>(m - 1)) * Rational(factorial) *
                point.q[m - 1];
  out.leading_identity = lead == expected;

  // B_0 (2 (−1)^j q_j)_j = P_0
  std::vector<Rational> signed_q(m);
  for (int j = 0; j < m; ++j) signed_q[j] = (j % 2 == 0 ? Rational(2) : Rational(-2)) * point.q[j];
  const auto p0 = b0 * signed_q;
  out.basis_identity = std::equal(p0.begin(), p0.end(), p.begin());

  // A_0 = B_0 [z, Jz, ..., J^{m−1}z] with z = B_0⁻¹ P_0
  const auto z = *solve(b0, std::vector<Rational>(p.begin(), p.begin() + m));
  out.krylov_consistent = krylov_spans(conj, z, rho * rho) == !is_zero(out.determinant);
  return out;
}

}  // namespace

NonsingularityCertificate certify_nonsingular(const TangentialData& data,
                                              std::span<const double> thetas) {
  if (!data.leading_density_nonzero())
    throw HypothesisViolated("q_" + std::to_string(data.m() - 1) +
                             " vanishes on the grid; m is not minimal");
  NonsingularityCertificate cert;
  cert.m = data.m();
  bool identities = true;
  bool any_nonzero = false;
  for (double theta : thetas) {
    auto point = certify_point(data, theta);
    cert.max_abs_determinant =
        std::max(cert.max_abs_determinant, std::abs(to_double(point.determinant)));
    any_nonzero = any_nonzero || !is_zero(point.determinant);
    identities = identities && point.structure_ok && point.leading_identity &&
                 point.basis_identity && point.krylov_consistent;
    cert.points.push_back(std::move(point));
  }
  cert.verdict = any_nonzero && identities;
  return cert;
}

}  // namespace tangent
