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
 * Lowering of circuits to the basis alphabet {U3, Phase, CNOT}.
 *
 * Arbitrary (controlled) unitaries go through a recursive quantum Shannon
 * decomposition built on the cosine-sine decomposition; unitaries whose
 * off-diagonal entries are all below 1e-12 take a shallow phase-ladder path
 * instead. Global phase is dropped everywhere; synthesized rotations with
 * |angle| < 1e-12 are pruned.
 */

#pragma once

#include <span>
#include <vector>

#include "qlin/circuit.hpp"

namespace qlin {

/// Circuit whose gates are restricted to U3, Phase and CNOT.
class BasisCircuit {
 public:
  /// Throws ArgumentError if `c` contains any other kind.
  explicit BasisCircuit(Circuit c);

  const Circuit& circuit() const noexcept { return circuit_; }
  int n_qubits() const noexcept { return circuit_.n_qubits(); }
  std::size_t size() const noexcept { return circuit_.size(); }

  static bool is_basis_kind(GateKind kind) noexcept;

 private:
  Circuit circuit_;
};

inline int depth(const BasisCircuit& c) { return depth(c.circuit()); }
inline UnitaryMatrix to_unitary(const BasisCircuit& c) { return to_unitary(c.circuit()); }

struct DecomposeOptions {
  /// Route diagonal payloads through the phase ladder. Disable to measure
  /// the generic path on the same matrix.
  bool diagonal_shortcut = true;
  double diagonal_tol = 1e-12;
  double angle_tol = 1e-12;
};

/// Lowers every gate of `c`. Payload gates may span at most 10 qubits.
BasisCircuit decompose(const Circuit& c, const DecomposeOptions& opts = {});

/// A = [L0 0; 0 L1] [C -S; S C] [R0 0; 0 R1], with c, s >= 0.
struct CosineSine {
  Matrix l0, l1, r0, r1;
  Eigen::VectorXd c, s;
};

/// Cosine-sine decomposition of an even-dimensional unitary.
CosineSine cosine_sine_decompose(const Matrix& u);

enum class RotationAxis { Y, Z };

/// Uniformly controlled rotation on `target`: for selector value j (bit i of
/// j is the state of controls[i]) apply R_axis(angles[j]). Emits the
/// Gray-code pattern of 2^m rotations and CNOTs; rotation pairs whose
/// difference angles all vanish are collapsed.
std::vector<Gate> multiplexed_rotation(RotationAxis axis, int target,
                                       std::span<const int> controls,
                                       std::span<const double> angles,
                                       double angle_tol = 1e-12);

/// Basis gates for diag(e^{i phases[x]}) on `qubits` (qubits[i] is bit i of x).
std::vector<Gate> synthesize_diagonal(std::span<const double> phases,
                                      std::span<const int> qubits,
                                      double angle_tol = 1e-12);

/// Basis gates for an arbitrary unitary on `qubits`.
std::vector<Gate> synthesize_unitary(const Matrix& u, std::span<const int> qubits,
                                     const DecomposeOptions& opts = {});

/// At most one U3 and/or one Phase implementing a 2x2 unitary up to phase.
std::vector<Gate> synthesize_single_qubit(const Matrix& u, int qubit,
                                          double angle_tol = 1e-12);

/// Amplitude encoding of `amplitudes` (normalized internally) on `qubits`
/// starting from |0...0>: a tree of uniformly controlled Ry rotations sets the
/// magnitudes, then a diagonal phase ladder sets the phases. Exact up to
/// global phase. Throws ZeroVector for an all-zero input.
std::vector<Gate> prepare_state(std::span<const Complex> amplitudes,
                                std::span<const int> qubits,
                                double angle_tol = 1e-12);

/// Max |off-diagonal| <= tol.
bool is_diagonal(const Matrix& m, double tol = 1e-12);

}  // namespace qlin
