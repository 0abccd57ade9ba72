// Copyright 2026 The qlinbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Dense>

#include "qlin/error.hpp"

namespace qlin {

/// Solves A x = b by Gaussian elimination with partial pivoting.
///
/// Throws SingularError when a pivot falls below `rel_tol` times the largest
/// entry magnitude of A.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, 1> solve_pivoted(
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> a,
    Eigen::Matrix<Scalar, Eigen::Dynamic, 1> b, double rel_tol = 1e-12) {
  using std::abs;
  const Eigen::Index n = a.rows();
  if (a.cols() != n || b.size() != n) {
    throw DimensionError("linear system shape mismatch");
  }
  double scale = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) scale = std::max(scale, double(abs(a(i, j))));
  }
  if (scale == 0.0) throw SingularError("zero matrix");
  const double tiny = rel_tol * scale;

  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    double best = abs(a(col, col));
    for (Eigen::Index r = col + 1; r < n; ++r) {
      if (abs(a(r, col)) > best) {
        best = abs(a(r, col));
        pivot = r;
      }
    }
    if (best <= tiny) {
      throw SingularError("matrix is singular to working precision");
    }
    if (pivot != col) {
      a.row(col).swap(a.row(pivot));
      std::swap(b[col], b[pivot]);
    }
    for (Eigen::Index r = col + 1; r < n; ++r) {
      const Scalar f = a(r, col) / a(col, col);
      if (f == Scalar(0)) continue;
      a.row(r).tail(n - col) -= f * a.row(col).tail(n - col);
      b[r] -= f * b[col];
    }
  }
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> x(n);
  for (Eigen::Index r = n - 1; r >= 0; --r) {
    Scalar acc = b[r];
    for (Eigen::Index c = r + 1; c < n; ++c) acc -= a(r, c) * x[c];
    x[r] = acc / a(r, r);
  }
  return x;
}

}  // namespace qlin
