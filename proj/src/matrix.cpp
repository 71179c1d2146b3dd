#include "tangent/matrix.hpp"

#include <cmath>
#include <utility>

namespace tangent {

namespace {

using IntRows = std::vector<std::vector<BigInt>>;

// Multiplies each row by the lcm of its denominators. Returns the integer
// rows and the product of the scale factors.
IntRows to_integer_rows(const ExactMatrix& a, const ExactMatrix* rhs, Rational* total_scale) {
  IntRows rows(a.rows());
  Rational scale_product(1);
  for (int i = 0; i < a.rows(); ++i) {
    BigInt lcm = 1;
    auto absorb = [&](const Rational& x) { mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.get_den_mpz_t()); };
    for (int j = 0; j < a.cols(); ++j) absorb(a(i, j));
    if (rhs)
      for (int j = 0; j < rhs->cols(); ++j) absorb((*rhs)(i, j));
    auto push = [&](const Rational& x) {
      BigInt v = x.get_num() * (lcm / x.get_den());
      rows[i].push_back(std::move(v));
    };
    for (int j = 0; j < a.cols(); ++j) push(a(i, j));
    if (rhs)
      for (int j = 0; j < rhs->cols(); ++j) push((*rhs)(i, j));
    scale_product *= Rational(lcm);
  }
  if (total_scale) *total_scale = scale_product;
  return rows;
}

// Fraction-free forward elimination over the first `pivot_cols` columns.
// Records pivot columns; returns the sign of the row permutation.
int bareiss_echelon(IntRows& rows, int pivot_cols, std::vector<int>& pivots) {
  const int n_rows = static_cast<int>(rows.size());
  const int width = n_rows == 0 ? 0 : static_cast<int>(rows[0].size());
  int sign = 1;
  int row = 0;
  BigInt previous = 1;
  for (int col = 0; col < pivot_cols && row < n_rows; ++col) {
    int p = row;
    while (p < n_rows && sgn(rows[p][col]) == 0) ++p;
    if (p == n_rows) continue;
    if (p != row) {
      std::swap(rows[p], rows[row]);
      sign = -sign;
    }
    const BigInt& pivot = rows[row][col];
    for (int i = row + 1; i < n_rows; ++i) {
      for (int j = col + 1; j < width; ++j) {
        BigInt v = rows[i][j] * pivot - rows[i][col] * rows[row][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        rows[i][j] = std::move(v);
      }
      rows[i][col] = 0;
    }
    previous = pivot;
    pivots.push_back(col);
    ++row;
  }
  return sign;
}

std::optional<ExactMatrix> solve_many(const ExactMatrix& a, const ExactMatrix& b) {
  const int n = a.rows();
  if (a.cols() != n || b.rows() != n) throw InvalidParameter("solve needs a square system");
  IntRows rows = to_integer_rows(a, &b, nullptr);
  std::vector<int> pivots;
  bareiss_echelon(rows, n, pivots);
  if (static_cast<int>(pivots.size()) < n) return std::nullopt;
  ExactMatrix x(n, b.cols());
  for (int c = 0; c < b.cols(); ++c) {
    for (int i = n - 1; i >= 0; --i) {
      Rational acc(rows[i][n + c]);
      for (int j = i + 1; j < n; ++j) acc -= Rational(rows[i][j]) * x(j, c);
      x(i, c) = acc / Rational(rows[i][i]);
    }
  }
  return x;
}

}  // namespace

Rational determinant(const ExactMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidParameter("determinant needs a square matrix");
  const int n = a.rows();
  if (n == 0) return Rational(1);
  Rational scale;
  IntRows rows = to_integer_rows(a, nullptr, &scale);
  std::vector<int> pivots;
  const int sign = bareiss_echelon(rows, n, pivots);
  if (static_cast<int>(pivots.size()) < n) return Rational(0);
  Rational det(rows[n - 1][n - 1]);
  if (sign < 0) det = -det;
  return det / scale;
}

int rank(const ExactMatrix& a) {
  IntRows rows = to_integer_rows(a, nullptr, nullptr);
  std::vector<int> pivots;
  bareiss_echelon(rows, a.cols(), pivots);
  return static_cast<int>(pivots.size());
}

std::optional<std::vector<Rational>> solve(const ExactMatrix& a, const std::vector<Rational>& b) {
  ExactMatrix rhs(static_cast<int>(b.size()), 1, b);
  auto x = solve_many(a, rhs);
  if (!x) return std::nullopt;
  return x->column(0);
}

std::optional<ExactMatrix> inverse(const ExactMatrix& a) {
  return solve_many(a, ExactMatrix::identity(a.rows()));
}

std::vector<Rational> characteristic_polynomial(const ExactMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidParameter("characteristic polynomial needs a square matrix");
  const int n = a.rows();
  std::vector<Rational> coeffs(n + 1, Rational(0));
  coeffs[n] = 1;
  ExactMatrix m(n, n);
  const ExactMatrix id = ExactMatrix::identity(n);
  for (int k = 1; k <= n; ++k) {
    m = a * m + id * coeffs[n - k + 1];
    const ExactMatrix am = a * m;
    Rational trace(0);
    for (int i = 0; i < n; ++i) trace += am(i, i);
    coeffs[n - k] = -trace / Rational(k);
  }
  return coeffs;
}

namespace {

struct RealLU {
  RealMatrix lu;
  std::vector<int> perm;
  int sign = 1;
  bool singular = false;
};

RealLU factor(RealMatrix a, double rel_pivot_tol) {
  const int n = a.rows();
  double largest = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) largest = std::max(largest, std::abs(a(i, j)));
  RealLU out{std::move(a), std::vector<int>(n), 1, false};
  for (int i = 0; i < n; ++i) out.perm[i] = i;
  auto& m = out.lu;
  for (int k = 0; k < n; ++k) {
    int p = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(m(i, k)) > std::abs(m(p, k))) p = i;
    if (!(std::abs(m(p, k)) > rel_pivot_tol * largest)) {
      out.singular = true;
      return out;
    }
    if (p != k) {
      for (int j = 0; j < n; ++j) std::swap(m(p, j), m(k, j));
      std::swap(out.perm[p], out.perm[k]);
      out.sign = -out.sign;
    }
    for (int i = k + 1; i < n; ++i) {
      m(i, k) /= m(k, k);
      for (int j = k + 1; j < n; ++j) m(i, j) -= m(i, k) * m(k, j);
    }
  }
  return out;
}

}  // namespace

std::optional<std::vector<double>> solve(const RealMatrix& a, const std::vector<double>& b,
                                         double rel_pivot_tol) {
  const int n = a.rows();
  if (a.cols() != n || static_cast<int>(b.size()) != n) throw InvalidParameter("solve needs a square system");
  const RealLU f = factor(a, rel_pivot_tol);
  if (f.singular) return std::nullopt;
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) {
    double acc = b[f.perm[i]];
    for (int j = 0; j < i; ++j) acc -= f.lu(i, j) * x[j];
    x[i] = acc;
  }
  for (int i = n - 1; i >= 0; --i) {
    double acc = x[i];
    for (int j = i + 1; j < n; ++j) acc -= f.lu(i, j) * x[j];
    x[i] = acc / f.lu(i, i);
  }
  return x;
}

double determinant(const RealMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidParameter("determinant needs a square matrix");
  const RealLU f = factor(a, 0.0);
  if (f.singular) return 0.0;
  double det = f.sign;
  for (int i = 0; i < a.rows(); ++i) det *= f.lu(i, i);
  return det;
}

}  // namespace tangent
