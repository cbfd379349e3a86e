// SPDX-License-Identifier: Apache-2.0

#pragma once

// Ground truth for resistance distances of an arbitrary graph. Knows nothing
// about transforms, and obtains the group inverse by eigendecomposition so it
// shares no code path with the (L + J/n)^-1 route used elsewhere.

#include <Eigen/Dense>

#include "klab/graph.hpp"
#include "klab/linalg.hpp"

namespace klab {

/// Moore-Penrose inverse of a connected graph's Laplacian from its spectrum,
/// dropping the single zero eigenvalue.
template <typename Scalar = double>
Matrix<Scalar> oracle_group_inverse(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedGraphError("oracle needs a connected graph");
  const Matrix<Scalar> l = laplacian<Scalar>(g);
  const Eigen::Index n = l.rows();
  if (n == 0) return Matrix<Scalar>(0, 0);
  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> eig(l);
  if (eig.info() != Eigen::Success) throw Error("eigendecomposition did not converge");
  // Eigenvalues ascend; the first belongs to the all-ones vector.
  const auto& values = eig.eigenvalues();
  const auto& vectors = eig.eigenvectors();
  Vector<Scalar> inv = Vector<Scalar>::Zero(n);
  for (Eigen::Index i = 1; i < n; ++i) inv(i) = Scalar(1) / values(i);
  return vectors * inv.asDiagonal() * vectors.transpose();
}

template <typename Scalar = double>
Matrix<Scalar> oracle_resistance_matrix(const Graph& g) {
  const Matrix<Scalar> x = oracle_group_inverse<Scalar>(g);
  const Eigen::Index n = x.rows();
  Matrix<Scalar> r(n, n);
  for (Eigen::Index u = 0; u < n; ++u) {
    for (Eigen::Index v = 0; v < n; ++v) {
      r(u, v) = u == v ? Scalar(0) : x(u, u) + x(v, v) - Scalar(2) * x(u, v);
    }
  }
  return r;
}

/// Kf = n tr(L#).
template <typename Scalar = double>
Scalar oracle_kirchhoff(const Graph& g) {
  const Matrix<Scalar> x = oracle_group_inverse<Scalar>(g);
  return static_cast<Scalar>(x.rows()) * x.trace();
}

}  // namespace klab
