#include "dqgraph/qmatrix.hpp"

#include <algorithm>
#include <cmath>

namespace dqgraph {

QMatrix standard_part(const DQMatrix& a) {
  QMatrix out(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.data().size(); ++k) out.data()[k] = a.data()[k].s;
  return out;
}

QMatrix dual_part(const DQMatrix& a) {
  QMatrix out(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.data().size(); ++k) out.data()[k] = a.data()[k].d;
  return out;
}

DQMatrix combine(const QMatrix& standard, const QMatrix& dual) {
  if (standard.rows() != dual.rows() || standard.cols() != dual.cols())
    throw Error(Errc::shape_mismatch, "standard and dual parts differ in shape");
  DQMatrix out(standard.rows(), standard.cols());
  for (std::size_t k = 0; k < out.data().size(); ++k) out.data()[k] = {standard.data()[k], dual.data()[k]};
  return out;
}

QMatrix column_block(const QMatrix& a, std::size_t first, std::size_t count) {
  if (first + count > a.cols()) throw Error(Errc::shape_mismatch, "column block out of range");
  QMatrix out(a.rows(), count);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < count; ++j) out(i, j) = a(i, first + j);
  return out;
}

RealMatrix real_expand(const QMatrix& a) {
  const auto m = static_cast<Eigen::Index>(a.rows());
  const auto n = static_cast<Eigen::Index>(a.cols());
  RealMatrix r = RealMatrix::Zero(4 * m, 4 * n);
  for (Eigen::Index i = 0; i < m; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const Quaternion& q = a(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (q.is_zero()) continue;
      const double c[4] = {q.w, q.x, q.y, q.z};
      // sign/index table for the block rows of R(A)
      static constexpr int kIndex[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
      static constexpr double kSign[4][4] = {{1, -1, -1, -1}, {1, 1, -1, 1}, {1, 1, 1, -1}, {1, -1, 1, 1}};
      for (int br = 0; br < 4; ++br)
        for (int bc = 0; bc < 4; ++bc) r(br * m + i, bc * n + j) = kSign[br][bc] * c[kIndex[br][bc]];
    }
  }
  return r;
}

RealVector real_expand_vector(std::span<const Quaternion> x) {
  const auto n = static_cast<Eigen::Index>(x.size());
  RealVector v(4 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Quaternion& q = x[static_cast<std::size_t>(i)];
    v(i) = q.w;
    v(n + i) = q.x;
    v(2 * n + i) = q.y;
    v(3 * n + i) = q.z;
  }
  return v;
}

QVector collapse_vector(const RealVector& v) {
  if (v.size() % 4 != 0) throw Error(Errc::shape_mismatch, "real vector length is not a multiple of 4");
  const Eigen::Index n = v.size() / 4;
  QVector x(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) x[static_cast<std::size_t>(i)] = {v(i), v(n + i), v(2 * n + i), v(3 * n + i)};
  return x;
}

double frobenius_norm(const QMatrix& a) {
  double sum = 0.0;
  for (const auto& q : a.data()) sum += q.norm2();
  return std::sqrt(sum);
}

double frobenius_norm_fr(const DQMatrix& a) {
  double sum = 0.0;
  for (const auto& q : a.data()) sum += q.s.norm2() + q.d.norm2();
  return std::sqrt(sum);
}

double vector_norm(std::span<const Quaternion> x) {
  double sum = 0.0;
  for (const auto& q : x) sum += q.norm2();
  return std::sqrt(sum);
}

double vector_norm(std::span<const DualQuaternion> x) {
  double sum = 0.0;
  for (const auto& q : x) sum += q.s.norm2() + q.d.norm2();
  return std::sqrt(sum);
}

bool is_consistent(double residual, double rhs_norm) { return residual <= kSolveTol * (1.0 + rhs_norm); }

QuaternionLeastSquares::QuaternionLeastSquares(QMatrix a, double rank_tol) : a_{std::move(a)} {
  if (a_.rows() == 0 || a_.cols() == 0) throw Error(Errc::shape_mismatch, "empty coefficient matrix");
  cod_.setThreshold(rank_tol);
  cod_.compute(real_expand(a_));
}

LeastSquaresSolution QuaternionLeastSquares::solve(std::span<const Quaternion> b) const {
  if (b.size() != a_.rows()) throw Error(Errc::shape_mismatch, "right-hand side length differs from row count");
  LeastSquaresSolution out;
  out.x = collapse_vector(cod_.solve(real_expand_vector(b)));
  QVector r = apply(a_, std::span<const Quaternion>(out.x));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  out.residual = vector_norm(r);
  out.consistent = is_consistent(out.residual, vector_norm(b));
  return out;
}

LeastSquaresSolution solve_least_squares(const QMatrix& a, std::span<const Quaternion> b) {
  if (b.size() != a.rows()) throw Error(Errc::shape_mismatch, "right-hand side length differs from row count");
  return QuaternionLeastSquares(a).solve(b);
}

int rank(const QMatrix& a, double tol) {
  if (a.rows() == 0 || a.cols() == 0) return 0;
  const RealVector sv = Eigen::BDCSVD<RealMatrix>(real_expand(a)).singularValues();
  if (sv.size() == 0 || sv(0) == 0.0) return 0;
  const double cutoff = tol * sv(0);
  const auto real_rank = std::count_if(sv.begin(), sv.end(), [cutoff](double s) { return s > cutoff; });
  return static_cast<int>((real_rank + 2) / 4);
}

}  // namespace dqgraph
