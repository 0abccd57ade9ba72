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
 * Gate-level circuit representation.
 *
 * Every gate is a base matrix on an ordered target list, optionally
 * conditioned on a set of control qubits all being |1>. Named gates carry
 * their controls explicitly (CNOT has one control, Toffoli two, Fredkin one
 * control and two swapped targets), so simulation, depth and synthesis all
 * see one uniform shape.
 */

#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qlin/state.hpp"

namespace qlin {

enum class GateKind {
  H,
  X,
  Y,
  Z,
  SqrtNot,
  CNOT,
  Toffoli,
  Fredkin,
  Phase,  // diag(1, e^{i theta})
  Ry,     // exp(-i theta Y / 2)
  Rz,     // exp(-i theta Z / 2)
  U3,     // three Euler angles (theta, phi, lambda)
  ControlledUnitary,
  GenericUnitary,
};

std::string_view gate_name(GateKind kind);

struct Gate {
  GateKind kind = GateKind::H;
  std::vector<int> targets;
  std::vector<int> controls;
  std::vector<double> params;
  std::shared_ptr<const Matrix> payload;  // ControlledUnitary / GenericUnitary

  /// Matrix on `targets` alone (controls not included).
  Matrix base_matrix() const;

  /// Full matrix on qubit order (targets..., controls...), i.e. the targets
  /// occupy the low local bits.
  Matrix full_matrix() const;

  /// targets followed by controls.
  std::vector<int> qubits() const;
};

/// Matrix of a named single-qubit kind with the given parameters.
Matrix single_qubit_matrix(GateKind kind, std::span<const double> params = {});

/// Builds a named gate. `qubits` lists controls first, then targets, in the
/// textbook order: CNOT(control, target), Toffoli(c1, c2, target),
/// Fredkin(control, a, b). Throws ArgumentError on a wrong arity or a
/// non-finite angle.
Gate standard_gate(GateKind kind, std::span<const int> qubits,
                   std::span<const double> params = {});

/// Same, looking the kind up by its name ("H", "CNOT", "Phase", ...).
/// Unknown names throw ArgumentError.
Gate standard_gate(std::string_view name, std::span<const int> qubits,
                   std::span<const double> params = {});

namespace gates {

Gate h(int q);
Gate x(int q);
Gate y(int q);
Gate z(int q);
Gate sqrt_not(int q);
Gate cnot(int control, int target);
Gate toffoli(int c1, int c2, int target);
Gate fredkin(int control, int a, int b);
Gate phase(int q, double theta);
Gate ry(int q, double theta);
Gate rz(int q, double theta);
Gate u3(int q, double theta, double phi, double lambda);
Gate controlled_phase(int control, int target, double theta);
Gate controlled_unitary(const UnitaryMatrix& u, std::vector<int> controls,
                        std::vector<int> targets);
Gate generic_unitary(const UnitaryMatrix& u, std::vector<int> targets);

}  // namespace gates

/// The adjoint gate.
Gate adjoint(const Gate& g);

class Circuit {
 public:
  explicit Circuit(int n_qubits);

  /// Throws TargetError if any index is out of range or repeated.
  Circuit& add(Gate g);

  /// Appends all gates of `other` (same or fewer qubits).
  Circuit& append(const Circuit& other);

  int n_qubits() const noexcept { return n_qubits_; }
  int width() const noexcept { return n_qubits_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }

 private:
  int n_qubits_;
  std::vector<Gate> gates_;
};

/// Minimal layer count with per-qubit gate order preserved.
int depth(const Circuit& c);

/// Unitary of the whole circuit (n_qubits <= 12, else SizeError).
UnitaryMatrix to_unitary(const Circuit& c);

/// Runs the circuit on `s`.
StateVector simulate(const Circuit& c, const StateVector& s);

/// Runs the circuit in place on raw amplitudes.
void simulate_inplace(const Circuit& c, std::span<Complex> amps);

/// Reversed circuit of adjoint gates.
Circuit inverse(const Circuit& c);

/// Entrywise distance between two matrices after removing the relative
/// global phase (aligned on the largest-magnitude entry of `a`).
double distance_up_to_phase(const Matrix& a, const Matrix& b);

/// JSON list of {kind, targets, controls, params}.
std::string to_json(const Circuit& c);

}  // namespace qlin
