// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>

#include <Eigen/Dense>

#include "klab/graph.hpp"
#include "klab/linalg.hpp"
#include "klab/transforms.hpp"

namespace klab {

/// Tridiagonal (2, -1) block coupling the k subdivision vertices of one
/// factor edge, k = 2 or 3.
template <typename Scalar = double>
Matrix<Scalar> path_block(TransformKind kind) {
  const auto k = static_cast<Eigen::Index>(path_length(kind));
  Matrix<Scalar> d = Matrix<Scalar>::Zero(k, k);
  for (Eigen::Index i = 0; i < k; ++i) {
    d(i, i) = Scalar(2);
    if (i + 1 < k) d(i, i + 1) = d(i + 1, i) = Scalar(-1);
  }
  return d;
}

/// Symmetric {1}-inverse of the Laplacian of Q(G) or W(G), built from the
/// factor graph G alone.
///
/// With the transformed vertices ordered [V, V1, V2(, V3)], the Laplacian
/// splits as [[2D_G - A_G, B], [B^T, D (x) I_m]] where B = [-B1, -B2] for
/// the quadrilateral case and [-B1, 0, -B2] for the pentagonal one. The
/// Schur complement of D (x) I_m collapses to `1/top_left_scale` times L_G,
/// so every block of the inverse is a product of L_G#, B1, B2 and the small
/// path-block inverse.
template <typename Scalar = double>
struct StructuredOneInverse {
  TransformKind kind = TransformKind::Quadrilateral;
  std::size_t n = 0;
  std::size_t m = 0;
  Matrix<Scalar> lg_sharp;           // L_G#, n x n
  IncidenceSplit<Scalar> split;      // B1, B2, n x m
  Matrix<Scalar> path_inverse;       // (path block)^-1, k x k
  Matrix<Scalar> corner;             // -H# B D^-1, n x km
  Matrix<Scalar> lower;              // D^-1 + D^-1 B^T H# B D^-1, km x km
  Scalar top_left_scale = Scalar(0); // 3/4 or 4/5
  Matrix<Scalar> full;               // assembled X, N x N

  std::size_t size() const noexcept { return transformed_vertex_count(n, m, kind); }

  Matrix<Scalar> top_left() const { return top_left_scale * lg_sharp; }

  /// Entry of X for two vertex classes.
  Scalar at(VertexClass i, VertexClass j) const {
    return full(static_cast<Eigen::Index>(flat_id(i, n, m, kind)),
                static_cast<Eigen::Index>(flat_id(j, n, m, kind)));
  }
};

/// Throws DisconnectedGraphError for a disconnected g and Error when g has no
/// edges. `orientation` must match the one used to build the explicit
/// transform the result is compared against.
template <typename Scalar = double>
StructuredOneInverse<Scalar> build_structured_inverse(const Graph& g, TransformKind kind,
                                                      Orientation orientation = Orientation::SmallerIdTail) {
  if (g.num_edges() == 0) throw Error("structured inverse needs at least one edge");
  if (!is_connected(g)) throw DisconnectedGraphError("structured inverse needs a connected graph");

  StructuredOneInverse<Scalar> x;
  x.kind = kind;
  x.n = g.num_vertices();
  x.m = g.num_edges();
  const auto n = static_cast<Eigen::Index>(x.n);
  const auto m = static_cast<Eigen::Index>(x.m);
  const auto k = static_cast<Eigen::Index>(path_length(kind));

  const Matrix<Scalar> lg = laplacian<Scalar>(g);
  x.lg_sharp = group_inverse_laplacian(lg);
  x.split = incidence_split<Scalar>(g, orientation);
  x.path_inverse = invert(path_block<Scalar>(kind));

  // H = (2 - a) D_G - (1 + b) A_G with a = Dinv(0,0) = Dinv(k-1,k-1) and
  // b = Dinv(0,k-1); the two coefficients agree, giving H = scale * L_G.
  const Scalar h_scale = Scalar(2) - x.path_inverse(0, 0);
  x.top_left_scale = Scalar(1) / h_scale;

  Matrix<Scalar> a = Scalar(2) * lg + adjacency<Scalar>(g);  // 2D - A = 2L + A
  Matrix<Scalar> b = Matrix<Scalar>::Zero(n, k * m);
  b.leftCols(m) = -x.split.tail;
  b.rightCols(m) = -x.split.head;
  Matrix<Scalar> d = Matrix<Scalar>::Zero(k * m, k * m);
  const Matrix<Scalar> pb = path_block<Scalar>(kind);
  for (Eigen::Index r = 0; r < k; ++r) {
    for (Eigen::Index c = 0; c < k; ++c) {
      if (pb(r, c) != Scalar(0)) {
        d.block(r * m, c * m, m, m).diagonal().setConstant(pb(r, c));
      }
    }
  }

  const Scalar scale = x.top_left_scale;
  const Matrix<Scalar>& lg_sharp = x.lg_sharp;
  auto h_sharp = [&](const Matrix<Scalar>& h) -> Matrix<Scalar> {
    const Scalar residual = (h - h_scale * lg).cwiseAbs().maxCoeff();
    if (residual > Scalar(1e-9) * (Scalar(1) + lg.cwiseAbs().maxCoeff())) {
      throw Error("Schur complement is not a multiple of the factor Laplacian");
    }
    return scale * lg_sharp;
  };
  BlockOneInverse<Scalar> blocks = block_one_inverse(a, b, d, h_sharp);

  x.corner = std::move(blocks.top_right);
  x.lower = std::move(blocks.bottom_right);
  x.full = BlockOneInverse<Scalar>{x.top_left(), x.corner, x.lower}.assemble();
  return x;
}

/// r_ij = X_ii + X_jj - X_ij - X_ji.
template <typename Scalar>
Scalar resistance(const StructuredOneInverse<Scalar>& x, VertexClass i, VertexClass j) {
  const auto a = static_cast<Eigen::Index>(flat_id(i, x.n, x.m, x.kind));
  const auto b = static_cast<Eigen::Index>(flat_id(j, x.n, x.m, x.kind));
  if (a == b) return Scalar(0);
  return x.full(a, a) + x.full(b, b) - x.full(a, b) - x.full(b, a);
}

/// Kf = N tr(X) - 1^T X 1.
template <typename Scalar>
Scalar kirchhoff(const StructuredOneInverse<Scalar>& x) {
  return static_cast<Scalar>(x.size()) * trace(x.full) - all_ones_sum(x.full);
}

/// Resistance between every pair of a {1}-inverse's vertices.
template <typename Derived>
Matrix<typename Derived::Scalar> resistance_from_one_inverse(const Eigen::MatrixBase<Derived>& x) {
  using Scalar = typename Derived::Scalar;
  const Vector<Scalar> diag = x.diagonal();
  const Eigen::Index n = x.rows();
  Matrix<Scalar> r = diag.replicate(1, n) + diag.transpose().replicate(n, 1) - x - x.transpose();
  r.diagonal().setZero();
  return r;
}

template <typename Scalar>
Matrix<Scalar> resistance_matrix(const StructuredOneInverse<Scalar>& x) {
  return resistance_from_one_inverse(x.full);
}

}  // namespace klab
