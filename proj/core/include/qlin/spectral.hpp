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

/**
 * @file
 * Hermitian matrices: construction, random generation, eigendecomposition,
 * conditioning, the classical solution oracle and exact time evolution.
 */

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qlin/state.hpp"

namespace qlin {

/// Square complex matrix with A[j,k] = conj(A[k,j]) within 1e-12.
class HermitianMatrix {
 public:
  /// Throws DimensionError (non-square) or HermiticityError.
  static HermitianMatrix from_matrix(Matrix m, double tol = 1e-12);
  static HermitianMatrix diagonal(std::span<const double> entries);
  static HermitianMatrix zero(int dim);

  const Matrix& matrix() const noexcept { return m_; }
  int dim() const noexcept { return static_cast<int>(m_.rows()); }
  bool is_diagonal(double tol = 1e-12) const;

 private:
  explicit HermitianMatrix(Matrix m) : m_(std::move(m)) {}
  Matrix m_;
};

/// Eigenvalues ascending; eigenvectors are the matching orthonormal columns.
/// Each eigenvector is phased so its largest-magnitude entry is real positive.
struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;
  Matrix eigenvectors;
};

struct SparsitySpec {
  double density = 1.0;  ///< target fraction of structurally nonzero entries
  int dim = 2;
  std::uint64_t seed = 0;
};

/// B = A + A^dagger.
HermitianMatrix hermitize(const Matrix& a);

/// Random Hermitian matrix whose achieved fill tracks `spec.density`.
///
/// Entries of the pre-hermitized draw have real and imaginary parts uniform
/// on [-1, 1] (diagonal entries real). Because B = (A + A^+)/2 fills entry
/// (j,k) when either A[j,k] or A[k,j] is present, off-diagonal pairs of A are
/// drawn with probability 1 - sqrt(1 - density) so that the expected fill of
/// B equals the density; draws whose achieved fill misses the target by more
/// than 0.1 are redrawn. Throws ArgumentError for density outside [0, 1].
HermitianMatrix random_sparse_hermitian(const SparsitySpec& spec);

/// Fraction of entries with nonzero magnitude.
double achieved_density(const Matrix& m);

/// Diagonal matrix with entries uniform on [lo, hi).
HermitianMatrix random_diagonal(int dim, std::uint64_t seed, double lo = 0.5,
                                double hi = 2.5);

/// Dense positive-definite Hermitian matrix paired with random_diagonal():
/// the same diagonal draw plus positive real couplings between every pair.
HermitianMatrix random_coupled(int dim, std::uint64_t seed, double lo = 0.5,
                               double hi = 2.5);

/// Cyclic complex Jacobi eigensolver. Throws HermiticityError.
SpectralDecomposition eigendecompose(const HermitianMatrix& m);

/// max|lambda| / min|lambda|; throws SingularError if some |lambda| <= 1e-12
/// (relative to max(1, max|lambda|)).
double condition_number(const SpectralDecomposition& d);

/// Largest Gershgorin disc bound on |lambda|.
double gershgorin_bound(const HermitianMatrix& m);

/// x / ||x|| for A x = b (pivoted Gaussian elimination).
/// Throws SingularError, ZeroVector for b = 0.
StateVector classical_solve(const HermitianMatrix& m, std::span<const Complex> b);

/// exp(i A t) = sum_j e^{i lambda_j t} u_j u_j^dagger.
UnitaryMatrix evolution_unitary(const HermitianMatrix& m, double t);
UnitaryMatrix evolution_unitary(const SpectralDecomposition& d, double t);

/// {"dim": n, "entries": [[re, im], ...]} in row-major order.
std::string to_json(const HermitianMatrix& m);

}  // namespace qlin
