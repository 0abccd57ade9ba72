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
 * Dense statevector simulation primitives.
 *
 * Basis-index encoding: qubit 0 is the least significant bit, so the
 * amplitude of |q_{n-1} ... q_1 q_0> is stored at index sum_i q_i 2^i. Every
 * module in the library uses this convention, including the local ordering
 * of a gate's target list (targets[0] is the low bit of the gate matrix).
 */

#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace qlin {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

/// Largest register the dense simulator accepts.
inline constexpr int kMaxQubits = 24;

/// Normalized amplitude vector over n qubits. Immutable once constructed.
class StateVector {
 public:
  /// Computational basis state |index> on n qubits.
  static StateVector basis(int n_qubits, std::uint64_t index = 0);

  /// Wraps amplitudes that are already normalized (within `tol`); throws
  /// ArgumentError otherwise. Use normalize() for raw vectors.
  static StateVector from_amplitudes(std::vector<Complex> amplitudes,
                                     double tol = 1e-9);

  int n_qubits() const noexcept { return n_qubits_; }
  std::size_t dim() const noexcept { return amps_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }
  double norm() const;

 private:
  StateVector(int n_qubits, std::vector<Complex> amps)
      : n_qubits_(n_qubits), amps_(std::move(amps)) {}

  friend StateVector normalize(std::span<const Complex> raw);
  friend StateVector adopt_state(std::vector<Complex> amps);

  int n_qubits_ = 0;
  std::vector<Complex> amps_;
};

/// Square matrix of power-of-two dimension, unitary within 1e-9.
class UnitaryMatrix {
 public:
  static UnitaryMatrix identity(int dim);

  /// Validates U U^dagger = I entrywise within `tol`; throws UnitaryError.
  static UnitaryMatrix from_matrix(Matrix m, double tol = 1e-9);

  const Matrix& matrix() const noexcept { return m_; }
  int dim() const noexcept { return static_cast<int>(m_.rows()); }
  int n_qubits() const noexcept;
  UnitaryMatrix adjoint() const;

 private:
  explicit UnitaryMatrix(Matrix m) : m_(std::move(m)) {}
  Matrix m_;
};

/// Number of qubits for a power-of-two length; throws DimensionError.
int qubits_for_dim(std::size_t dim);

/// Largest entrywise deviation of U U^dagger from the identity.
double unitarity_error(const Matrix& u);

/// v / ||v||. Throws ZeroVector for an all-zero input and DimensionError for
/// a length that is not a power of two.
StateVector normalize(std::span<const Complex> raw);

/// Takes ownership of amplitudes already known to be normalized (simulation
/// output); only the length is checked.
StateVector adopt_state(std::vector<Complex> amps);

/// Embeds `u` on the ordered `targets` and returns u_embedded * s.
StateVector apply_unitary(const StateVector& s, const UnitaryMatrix& u,
                          std::span<const int> targets);

/// Born-rule probabilities |c_i|^2 / sum_j |c_j|^2.
std::vector<double> probabilities(const StateVector& s);

/// Basis index -> count.
using Histogram = std::map<std::uint64_t, std::uint64_t>;

/// Draws `shots` computational-basis outcomes. Each draw consumes one
/// uniform variate and inverts the cumulative distribution in index order.
Histogram sample(const StateVector& s, std::uint64_t shots, std::uint64_t seed);

/// Same draw procedure over an explicit probability vector.
Histogram sample_distribution(std::span<const double> probs,
                              std::uint64_t shots, std::uint64_t seed);

/// JSON object {"<bitstring>": count}; qubit n-1 is the leftmost character.
std::string histogram_to_json(const Histogram& h, int n_qubits);

/// Pure-state fidelity |<a|b>|^2.
double state_fidelity(const StateVector& a, const StateVector& b);

/// <a|b>.
Complex inner_product(const StateVector& a, const StateVector& b);

namespace kernels {

/// In-place application of the 2^k x 2^k matrix `u` on `targets`,
/// conditioned on every qubit in `controls` being |1>.
void apply_matrix(std::span<Complex> amps, const Matrix& u,
                  std::span<const int> targets,
                  std::span<const int> controls = {});

}  // namespace kernels

}  // namespace qlin
