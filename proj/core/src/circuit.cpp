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

#include "qlin/circuit.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "qlin/error.hpp"
#include "serialize.hpp"

namespace qlin {

namespace {

constexpr double kInvSqrt2 = 0.70710678118654752440;

struct KindInfo {
  GateKind kind;
  std::string_view name;
  int n_controls;
  int n_targets;
  int n_params;
};

// Arity table for the named kinds; -1 means "variable".
constexpr std::array<KindInfo, 14> kKinds = {{
    {GateKind::H, "H", 0, 1, 0},
    {GateKind::X, "X", 0, 1, 0},
    {GateKind::Y, "Y", 0, 1, 0},
    {GateKind::Z, "Z", 0, 1, 0},
    {GateKind::SqrtNot, "SqrtNot", 0, 1, 0},
    {GateKind::CNOT, "CNOT", 1, 1, 0},
    {GateKind::Toffoli, "Toffoli", 2, 1, 0},
    {GateKind::Fredkin, "Fredkin", 1, 2, 0},
    {GateKind::Phase, "Phase", 0, 1, 1},
    {GateKind::Ry, "Ry", 0, 1, 1},
    {GateKind::Rz, "Rz", 0, 1, 1},
    {GateKind::U3, "U3", 0, 1, 3},
    {GateKind::ControlledUnitary, "ControlledUnitary", -1, -1, 0},
    {GateKind::GenericUnitary, "GenericUnitary", 0, -1, 0},
}};

const KindInfo& info(GateKind kind) {
  for (const KindInfo& k : kKinds) {
    if (k.kind == kind) return k;
  }
  throw ArgumentError("unknown gate kind");
}

Matrix mat2(Complex a, Complex b, Complex c, Complex d) {
  Matrix m(2, 2);
  m << a, b, c, d;
  return m;
}

}  // namespace

std::string_view gate_name(GateKind kind) { return info(kind).name; }

Matrix single_qubit_matrix(GateKind kind, std::span<const double> params) {
  using std::cos;
  using std::sin;
  const Complex i{0.0, 1.0};
  switch (kind) {
    case GateKind::H:
      return mat2(kInvSqrt2, kInvSqrt2, kInvSqrt2, -kInvSqrt2);
    case GateKind::X:
    case GateKind::CNOT:
    case GateKind::Toffoli:
      return mat2(0, 1, 1, 0);
    case GateKind::Y:
      return mat2(0, -i, i, 0);
    case GateKind::Z:
      return mat2(1, 0, 0, -1);
    case GateKind::SqrtNot:
      return mat2(kInvSqrt2, -kInvSqrt2, kInvSqrt2, kInvSqrt2);
    case GateKind::Phase:
      return mat2(1, 0, 0, std::exp(i * params[0]));
    case GateKind::Ry: {
      const double h = params[0] / 2;
      return mat2(cos(h), -sin(h), sin(h), cos(h));
    }
    case GateKind::Rz: {
      const double h = params[0] / 2;
      return mat2(std::exp(-i * h), 0, 0, std::exp(i * h));
    }
    case GateKind::U3: {
      const double h = params[0] / 2;
      const double phi = params[1];
      const double lam = params[2];
      return mat2(cos(h), -std::exp(i * lam) * sin(h), std::exp(i * phi) * sin(h),
                  std::exp(i * (phi + lam)) * cos(h));
    }
    default:
      throw ArgumentError("gate kind has no single-qubit matrix");
  }
}

Matrix Gate::base_matrix() const {
  switch (kind) {
    case GateKind::Fredkin: {
      Matrix swap = Matrix::Zero(4, 4);
      swap(0, 0) = swap(3, 3) = 1.0;
      swap(1, 2) = swap(2, 1) = 1.0;
      return swap;
    }
    case GateKind::ControlledUnitary:
    case GateKind::GenericUnitary:
      return *payload;
    default:
      return single_qubit_matrix(kind, params);
  }
}

Matrix Gate::full_matrix() const {
  const Matrix base = base_matrix();
  const Eigen::Index block = base.rows();
  const Eigen::Index dim = block << controls.size();
  Matrix full = Matrix::Identity(dim, dim);
  full.bottomRightCorner(block, block) = base;
  return full;
}

std::vector<int> Gate::qubits() const {
  std::vector<int> q = targets;
  q.insert(q.end(), controls.begin(), controls.end());
  return q;
}

Gate standard_gate(GateKind kind, std::span<const int> qubits,
                   std::span<const double> params) {
  const KindInfo& k = info(kind);
  if (k.n_controls < 0 || k.n_targets < 0) {
    throw ArgumentError(std::string(k.name) +
                        " carries a matrix payload; use gates::controlled_unitary "
                        "or gates::generic_unitary");
  }
  if (static_cast<int>(qubits.size()) != k.n_controls + k.n_targets) {
    throw ArgumentError(std::string(k.name) + " expects " +
                        std::to_string(k.n_controls + k.n_targets) + " qubits");
  }
  if (static_cast<int>(params.size()) != k.n_params) {
    throw ArgumentError(std::string(k.name) + " expects " +
                        std::to_string(k.n_params) + " parameters");
  }
  for (double p : params) {
    if (!std::isfinite(p)) throw ArgumentError("gate angle must be finite");
  }
  Gate g;
  g.kind = kind;
  g.controls.assign(qubits.begin(), qubits.begin() + k.n_controls);
  g.targets.assign(qubits.begin() + k.n_controls, qubits.end());
  g.params.assign(params.begin(), params.end());
  return g;
}

Gate standard_gate(std::string_view name, std::span<const int> qubits,
                   std::span<const double> params) {
  for (const KindInfo& k : kKinds) {
    if (k.name == name) return standard_gate(k.kind, qubits, params);
  }
  throw ArgumentError("unknown gate kind '" + std::string(name) + "'");
}

namespace gates {

namespace {
Gate named(GateKind kind, std::initializer_list<int> q,
           std::initializer_list<double> p = {}) {
  return standard_gate(kind, std::span<const int>(q.begin(), q.size()),
                       std::span<const double>(p.begin(), p.size()));
}
}  // namespace

Gate h(int q) { return named(GateKind::H, {q}); }
Gate x(int q) { return named(GateKind::X, {q}); }
Gate y(int q) { return named(GateKind::Y, {q}); }
Gate z(int q) { return named(GateKind::Z, {q}); }
Gate sqrt_not(int q) { return named(GateKind::SqrtNot, {q}); }
Gate cnot(int control, int target) { return named(GateKind::CNOT, {control, target}); }
Gate toffoli(int c1, int c2, int target) {
  return named(GateKind::Toffoli, {c1, c2, target});
}
Gate fredkin(int control, int a, int b) {
  return named(GateKind::Fredkin, {control, a, b});
}
Gate phase(int q, double theta) { return named(GateKind::Phase, {q}, {theta}); }
Gate ry(int q, double theta) { return named(GateKind::Ry, {q}, {theta}); }
Gate rz(int q, double theta) { return named(GateKind::Rz, {q}, {theta}); }
Gate u3(int q, double theta, double phi, double lambda) {
  return named(GateKind::U3, {q}, {theta, phi, lambda});
}

Gate controlled_phase(int control, int target, double theta) {
  Gate g = phase(target, theta);
  g.controls = {control};
  return g;
}

Gate controlled_unitary(const UnitaryMatrix& u, std::vector<int> controls,
                        std::vector<int> targets) {
  if (u.dim() != (1 << targets.size())) {
    throw DimensionError("controlled unitary does not match its target count");
  }
  Gate g;
  g.kind = GateKind::ControlledUnitary;
  g.targets = std::move(targets);
  g.controls = std::move(controls);
  g.payload = std::make_shared<const Matrix>(u.matrix());
  return g;
}

Gate generic_unitary(const UnitaryMatrix& u, std::vector<int> targets) {
  if (u.dim() != (1 << targets.size())) {
    throw DimensionError("unitary does not match its target count");
  }
  Gate g;
  g.kind = GateKind::GenericUnitary;
  g.targets = std::move(targets);
  g.payload = std::make_shared<const Matrix>(u.matrix());
  return g;
}

}  // namespace gates

Gate adjoint(const Gate& g) {
  Gate a = g;
  switch (g.kind) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::Y:
    case GateKind::Z:
    case GateKind::CNOT:
    case GateKind::Toffoli:
    case GateKind::Fredkin:
      return a;
    case GateKind::Phase:
    case GateKind::Ry:
    case GateKind::Rz:
      a.params[0] = -g.params[0];
      return a;
    case GateKind::U3:
      a.params = {-g.params[0], -g.params[2], -g.params[1]};
      return a;
    case GateKind::SqrtNot:
      a.kind = GateKind::GenericUnitary;
      a.payload = std::make_shared<const Matrix>(g.base_matrix().adjoint());
      return a;
    case GateKind::ControlledUnitary:
    case GateKind::GenericUnitary:
      a.payload = std::make_shared<const Matrix>(g.payload->adjoint());
      return a;
  }
  return a;
}

Circuit::Circuit(int n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw SizeError("circuit qubit count " + std::to_string(n_qubits) +
                    " outside [1, " + std::to_string(kMaxQubits) + "]");
  }
}

Circuit& Circuit::add(Gate g) {
  const std::vector<int> q = g.qubits();
  if (g.targets.empty()) throw TargetError("gate has no targets");
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] < 0 || q[i] >= n_qubits_) {
      throw TargetError("qubit index " + std::to_string(q[i]) +
                        " out of range for " + std::to_string(n_qubits_) +
                        "-qubit circuit");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (q[i] == q[j]) throw TargetError("gate repeats qubit " + std::to_string(q[i]));
    }
  }
  gates_.push_back(std::move(g));
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.n_qubits() > n_qubits_) {
    throw DimensionError("appended circuit is wider than the host");
  }
  for (const Gate& g : other.gates()) add(g);
  return *this;
}

int depth(const Circuit& c) {
  std::vector<int> level(static_cast<std::size_t>(c.n_qubits()), 0);
  int d = 0;
  for (const Gate& g : c.gates()) {
    int layer = 0;
    for (int q : g.targets) layer = std::max(layer, level[q]);
    for (int q : g.controls) layer = std::max(layer, level[q]);
    ++layer;
    for (int q : g.targets) level[q] = layer;
    for (int q : g.controls) level[q] = layer;
    d = std::max(d, layer);
  }
  return d;
}

void simulate_inplace(const Circuit& c, std::span<Complex> amps) {
  if (amps.size() != (std::size_t{1} << c.n_qubits())) {
    throw DimensionError("state size does not match circuit width");
  }
  for (const Gate& g : c.gates()) {
    if (g.kind == GateKind::ControlledUnitary || g.kind == GateKind::GenericUnitary) {
      kernels::apply_matrix(amps, *g.payload, g.targets, g.controls);
    } else {
      kernels::apply_matrix(amps, g.base_matrix(), g.targets, g.controls);
    }
  }
}

StateVector simulate(const Circuit& c, const StateVector& s) {
  std::vector<Complex> amps(s.amplitudes().begin(), s.amplitudes().end());
  simulate_inplace(c, amps);
  return adopt_state(std::move(amps));
}

UnitaryMatrix to_unitary(const Circuit& c) {
  constexpr int kMaxUnitaryQubits = 12;
  if (c.n_qubits() > kMaxUnitaryQubits) {
    throw SizeError("to_unitary supports at most 12 qubits");
  }
  const std::size_t dim = std::size_t{1} << c.n_qubits();
  Matrix u(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  std::vector<Complex> column(dim);
  for (std::size_t col = 0; col < dim; ++col) {
    std::fill(column.begin(), column.end(), Complex{});
    column[col] = 1.0;
    simulate_inplace(c, column);
    for (std::size_t row = 0; row < dim; ++row) {
      u(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = column[row];
    }
  }
  return UnitaryMatrix::from_matrix(std::move(u));
}

Circuit inverse(const Circuit& c) {
  Circuit inv(c.n_qubits());
  for (auto it = c.gates().rbegin(); it != c.gates().rend(); ++it) {
    inv.add(adjoint(*it));
  }
  return inv;
}

double distance_up_to_phase(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("matrices have different shapes");
  }
  Eigen::Index r = 0, col = 0;
  a.cwiseAbs().maxCoeff(&r, &col);
  Complex phase = 1.0;
  if (std::abs(b(r, col)) > 0.0 && std::abs(a(r, col)) > 0.0) {
    const Complex ratio = a(r, col) / b(r, col);
    phase = ratio / std::abs(ratio);
  }
  return (a - phase * b).cwiseAbs().maxCoeff();
}

std::string to_json(const Circuit& c) { return detail::circuit_json(c).dump(); }

}  // namespace qlin
