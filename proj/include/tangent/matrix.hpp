#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "tangent/error.hpp"
#include "tangent/rational.hpp"

namespace tangent {

/// Small dense row-major matrix. Used with Rational (exact) and double.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, T(0)) {}
  Matrix(int rows, int cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != std::size_t(rows) * cols)
      throw InvalidParameter("matrix data size does not match its shape");
  }

  static Matrix identity(int n) {
    Matrix out(n, n);
    for (int i = 0; i < n; ++i) out(i, i) = T(1);
    return out;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int i, int j) { return data_[std::size_t(i) * cols_ + j]; }
  const T& operator()(int i, int j) const { return data_[std::size_t(i) * cols_ + j]; }

  std::vector<T> column(int j) const {
    std::vector<T> out(rows_);
    for (int i = 0; i < rows_; ++i) out[i] = (*this)(i, j);
    return out;
  }

  void set_column(int j, const std::vector<T>& values) {
    for (int i = 0; i < rows_; ++i) (*this)(i, j) = values.at(i);
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    a.check_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    a.check_same_shape(b);
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }
  friend Matrix operator*(Matrix a, const T& s) {
    for (auto& x : a.data_) x *= s;
    return a;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InvalidParameter("matrix product shape mismatch");
    Matrix out(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (int j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }
  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& x) {
    if (std::size_t(a.cols_) != x.size()) throw InvalidParameter("matrix-vector shape mismatch");
    std::vector<T> out(a.rows_, T(0));
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < a.cols_; ++j) out[i] += a(i, j) * x[j];
    return out;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_zero_matrix() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return is_zero(x); });
  }

 private:
  void check_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw InvalidParameter("matrix shape mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using ExactMatrix = Matrix<Rational>;
using RealMatrix = Matrix<double>;

template <class T>
Matrix<T> power(const Matrix<T>& a, unsigned exponent) {
  Matrix<T> result = Matrix<T>::identity(a.rows());
  for (unsigned i = 0; i < exponent; ++i) result = result * a;
  return result;
}

/// Determinant by fraction-free (Bareiss) elimination on the row-scaled
/// integer matrix.
Rational determinant(const ExactMatrix& a);
/// Rank by fraction-free elimination.
int rank(const ExactMatrix& a);
/// Solves a x = b exactly; empty when a is singular.
std::optional<std::vector<Rational>> solve(const ExactMatrix& a, const std::vector<Rational>& b);
/// Exact inverse; empty when a is singular.
std::optional<ExactMatrix> inverse(const ExactMatrix& a);
/// Coefficients of det(λI − A), lowest degree first (Faddeev–LeVerrier).
std::vector<Rational> characteristic_polynomial(const ExactMatrix& a);

/// Gaussian elimination with partial pivoting. Empty when a pivot falls below
/// `rel_pivot_tol` times the largest entry of a.
std::optional<std::vector<double>> solve(const RealMatrix& a, const std::vector<double>& b,
                                         double rel_pivot_tol = 1e-13);
double determinant(const RealMatrix& a);

}  // namespace tangent
