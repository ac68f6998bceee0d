#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "dqgraph/dual_quaternion.hpp"
#include "dqgraph/errors.hpp"
#include "dqgraph/tolerances.hpp"

namespace dqgraph {

/// Dense row-major matrix over a (dual) quaternion scalar.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_{rows}, cols_{cols}, data_(rows * cols) {}

  static Matrix from_rows(std::initializer_list<std::initializer_list<T>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    Matrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
      if (row.size() != c) throw Error(Errc::shape_mismatch, "ragged initializer");
      std::size_t j = 0;
      for (const auto& v : row) m(i, j++) = v;
      ++i;
    }
    return m;
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1.0};
    return m;
  }

  static Matrix diagonal(std::span<const T> entries) {
    Matrix m(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> data() { return data_; }
  std::span<const T> data() const { return data_; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_{0};
  std::size_t cols_{0};
  std::vector<T> data_;
};

using QMatrix = Matrix<Quaternion>;
using DQMatrix = Matrix<DualQuaternion>;
using QVector = std::vector<Quaternion>;
using DQVector = std::vector<DualQuaternion>;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;

namespace detail {
template <class T>
void require_same_shape(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(Errc::shape_mismatch, "operand shapes differ");
}
}  // namespace detail

template <class T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
  detail::require_same_shape(a, b);
  Matrix<T> out(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.data().size(); ++k) out.data()[k] = a.data()[k] + b.data()[k];
  return out;
}

template <class T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
  detail::require_same_shape(a, b);
  Matrix<T> out(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.data().size(); ++k) out.data()[k] = a.data()[k] - b.data()[k];
  return out;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw Error(Errc::shape_mismatch, "inner dimensions differ");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

template <class T>
Matrix<T> conj_transpose(const Matrix<T>& a) {
  Matrix<T> out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j).conj();
  return out;
}

/// Matrix-vector product A x.
template <class T>
std::vector<T> apply(const Matrix<T>& a, std::span<const T> x) {
  if (a.cols() != x.size()) throw Error(Errc::shape_mismatch, "vector length differs from column count");
  std::vector<T> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
  return out;
}

inline DQMatrix dqmat_mul(const DQMatrix& a, const DQMatrix& b) { return a * b; }
inline DQMatrix dqmat_conj_transpose(const DQMatrix& a) { return conj_transpose(a); }
inline DQVector dqmat_apply(const DQMatrix& a, std::span<const DualQuaternion> x) { return apply(a, x); }

QMatrix standard_part(const DQMatrix& a);
QMatrix dual_part(const DQMatrix& a);
/// L = L_s + L_d eps.
DQMatrix combine(const QMatrix& standard, const QMatrix& dual);

/// Columns [first, first + count) of `a`.
QMatrix column_block(const QMatrix& a, std::size_t first, std::size_t count);

/// 4m x 4n real expansion with block layout
///   [A0 -A1 -A2 -A3; A1 A0 -A3 A2; A2 A3 A0 -A1; A3 -A2 A1 A0].
RealMatrix real_expand(const QMatrix& a);
/// First block column of the expansion: [x0; x1; x2; x3].
RealVector real_expand_vector(std::span<const Quaternion> x);
/// Inverse of real_expand_vector.
QVector collapse_vector(const RealVector& v);

/// Frobenius norm over the 4 real components of every entry.
double frobenius_norm(const QMatrix& a);
/// Frobenius norm over all 8 real components of every entry.
double frobenius_norm_fr(const DQMatrix& a);
double vector_norm(std::span<const Quaternion> x);
double vector_norm(std::span<const DualQuaternion> x);

struct LeastSquaresSolution {
  QVector x;
  double residual{0.0};  // |A x - b|
  bool consistent{false};
};

/// residual <= kSolveTol * (1 + |b|).
bool is_consistent(double residual, double rhs_norm);

/// Factors the real expansion of A once; each solve returns the
/// minimum-norm least-squares solution of R(A) R_v(x) = R_v(b).
class QuaternionLeastSquares {
 public:
  explicit QuaternionLeastSquares(QMatrix a, double rank_tol = kRankTol);

  LeastSquaresSolution solve(std::span<const Quaternion> b) const;

  /// Numerical rank of R(A), from the rank-revealing factorisation.
  Eigen::Index real_rank() const { return cod_.rank(); }

  const QMatrix& matrix() const { return a_; }

 private:
  QMatrix a_;
  Eigen::CompleteOrthogonalDecomposition<RealMatrix> cod_;
};

LeastSquaresSolution solve_least_squares(const QMatrix& a, std::span<const Quaternion> b);

/// Quaternion rank: (number of singular values of R(A) above tol * sigma_max) / 4.
int rank(const QMatrix& a, double tol = kRankTol);

}  // namespace dqgraph
