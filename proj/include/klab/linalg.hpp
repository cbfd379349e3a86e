// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "klab/graph.hpp"

namespace klab {

template <typename Scalar = double>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar = double>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

class SingularMatrixError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class NonFiniteError : public Error {
 public:
  using Error::Error;
};

template <typename Derived>
void require_finite(const Eigen::MatrixBase<Derived>& m, const char* what = "matrix") {
  if (!m.allFinite()) throw NonFiniteError(std::string(what) + " has NaN or Inf entries");
}

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& m, const char* what = "matrix") {
  if (m.rows() != m.cols()) {
    throw DimensionError(std::string(what) + " is " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()) + ", expected square");
  }
}

/// Inverse by LU with partial pivoting.
///
/// A pivot whose magnitude is at most 1e-12 times the largest absolute row
/// sum of `m` is treated as zero and raises SingularMatrixError.
template <typename Derived>
Matrix<typename Derived::Scalar> invert(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  require_square(m);
  require_finite(m);
  if (m.rows() == 0) return Matrix<Scalar>(0, 0);

  const Scalar threshold = Scalar(1e-12) * m.cwiseAbs().rowwise().sum().maxCoeff();
  Eigen::PartialPivLU<Matrix<Scalar>> lu(m.eval());
  const auto pivots = lu.matrixLU().diagonal().cwiseAbs();
  for (Eigen::Index k = 0; k < pivots.size(); ++k) {
    if (!(pivots(k) > threshold)) {
      throw SingularMatrixError("pivot " + std::to_string(k) + " below singularity threshold");
    }
  }
  return lu.inverse();
}

/// Group inverse of the Laplacian of a connected graph, or of any positive
/// multiple of one: L# = (L + J/n)^-1 - J/n.
template <typename Derived>
Matrix<typename Derived::Scalar> group_inverse_laplacian(const Eigen::MatrixBase<Derived>& l) {
  using Scalar = typename Derived::Scalar;
  require_square(l, "Laplacian");
  const Eigen::Index n = l.rows();
  if (n == 0) return Matrix<Scalar>(0, 0);
  const Matrix<Scalar> j_over_n = Matrix<Scalar>::Constant(n, n, Scalar(1) / Scalar(n));
  Matrix<Scalar> shifted = l + j_over_n;
  try {
    return invert(shifted) - j_over_n;
  } catch (const SingularMatrixError&) {
    throw SingularMatrixError("L + J/n is singular: the graph is not connected");
  }
}

template <typename Derived>
typename Derived::Scalar trace(const Eigen::MatrixBase<Derived>& m) {
  require_square(m);
  return m.trace();
}

/// 1^T M 1.
template <typename Derived>
typename Derived::Scalar all_ones_sum(const Eigen::MatrixBase<Derived>& m) {
  return m.sum();
}

/// x^T M y for column vectors (or single-column matrices) x and y.
template <typename DX, typename DM, typename DY>
typename DM::Scalar quadratic_form(const Eigen::MatrixBase<DX>& x, const Eigen::MatrixBase<DM>& m,
                                   const Eigen::MatrixBase<DY>& y) {
  if (x.cols() != 1 || y.cols() != 1 || x.rows() != m.rows() || y.rows() != m.cols()) {
    throw DimensionError("quadratic_form: non-conformable operands");
  }
  return (x.transpose() * m * y)(0, 0);
}

/// Blocks of the symmetric {1}-inverse of [[A, B], [B^T, D]].
///
///   X = [[ H#,            -H# B D^-1                 ],
///        [ -D^-1 B^T H#,   D^-1 + D^-1 B^T H# B D^-1 ]]   with H = A - B D^-1 B^T.
template <typename Scalar = double>
struct BlockOneInverse {
  Matrix<Scalar> top_left;      // H#, p x p
  Matrix<Scalar> top_right;     // -H# B D^-1, p x q
  Matrix<Scalar> bottom_right;  // D^-1 + D^-1 B^T H# B D^-1, q x q

  Eigen::Index size() const { return top_left.rows() + bottom_right.rows(); }

  Matrix<Scalar> assemble() const {
    const Eigen::Index p = top_left.rows();
    const Eigen::Index q = bottom_right.rows();
    Matrix<Scalar> x(p + q, p + q);
    x.topLeftCorner(p, p) = top_left;
    x.topRightCorner(p, q) = top_right;
    x.bottomLeftCorner(q, p) = top_right.transpose();
    x.bottomRightCorner(q, q) = bottom_right;
    return x;
  }
};

template <typename Scalar>
using GroupInverseFn = std::function<Matrix<Scalar>(const Matrix<Scalar>&)>;

/// Symmetric {1}-inverse of a symmetric block matrix via the Schur
/// complement H of its nonsingular lower-right block D.
///
/// `h_group_inverse` receives H and must return its group inverse; the
/// default treats H as a positive multiple of a connected Laplacian.
template <typename DA, typename DB, typename DD>
BlockOneInverse<typename DA::Scalar> block_one_inverse(
    const Eigen::MatrixBase<DA>& a, const Eigen::MatrixBase<DB>& b, const Eigen::MatrixBase<DD>& d,
    GroupInverseFn<typename DA::Scalar> h_group_inverse = {}) {
  using Scalar = typename DA::Scalar;
  require_square(a, "A");
  require_square(d, "D");
  if (b.rows() != a.rows() || b.cols() != d.rows()) {
    throw DimensionError("block_one_inverse: B must be " + std::to_string(a.rows()) + "x" +
                         std::to_string(d.rows()));
  }
  require_finite(a, "A");
  require_finite(b, "B");

  const Matrix<Scalar> d_inv = invert(d);
  const Matrix<Scalar> b_dinv = b * d_inv;
  const Matrix<Scalar> h = a - b_dinv * b.transpose();
  const Matrix<Scalar> h_sharp = h_group_inverse ? h_group_inverse(h) : group_inverse_laplacian(h);

  BlockOneInverse<Scalar> x;
  x.top_left = h_sharp;
  x.top_right = -h_sharp * b_dinv;
  x.bottom_right = d_inv + d_inv * b.transpose() * h_sharp * b_dinv;
  return x;
}

}  // namespace klab
