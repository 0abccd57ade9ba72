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

#include "qlin/synthesis.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "qlin/error.hpp"

namespace qlin {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxPayloadQubits = 10;

double wrap_angle(double a) { return std::remainder(a, 2.0 * kPi); }

void append(std::vector<Gate>& out, std::vector<Gate> more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()),
             std::make_move_iterator(more.end()));
}

Gate make_u3(int q, double theta, double phi, double lambda) {
  return gates::u3(q, wrap_angle(theta), wrap_angle(phi), wrap_angle(lambda));
}

void emit_phase(std::vector<Gate>& out, int q, double lambda, double tol) {
  const double w = wrap_angle(lambda);
  if (std::abs(w) >= tol) out.push_back(gates::phase(q, w));
}

void emit_rotation(std::vector<Gate>& out, RotationAxis axis, int q, double angle,
                   double tol) {
  if (axis == RotationAxis::Y) {
    // Ry has period 4 pi; Ry(theta + 2 pi) = -Ry(theta) differs only by phase.
    const double w = wrap_angle(angle);
    if (std::abs(w) >= tol) out.push_back(make_u3(q, w, 0.0, 0.0));
  } else {
    // Rz(theta) equals Phase(theta) up to the global factor e^{-i theta/2}.
    emit_phase(out, q, angle, tol);
  }
}

void mux_recursive(std::vector<Gate>& out, RotationAxis axis, int target,
                   std::span<const int> controls, std::vector<double> angles,
                   double tol) {
  if (controls.empty()) {
    emit_rotation(out, axis, target, angles[0], tol);
    return;
  }
  const std::size_t half = angles.size() / 2;
  std::vector<double> sum(half), diff(half);
  bool diff_zero = true;
  for (std::size_t j = 0; j < half; ++j) {
    sum[j] = 0.5 * (angles[j] + angles[j + half]);
    diff[j] = 0.5 * (angles[j] - angles[j + half]);
    if (std::abs(diff[j]) >= tol) diff_zero = false;
  }
  const std::span<const int> rest = controls.first(controls.size() - 1);
  const int msb = controls.back();
  mux_recursive(out, axis, target, rest, std::move(sum), tol);
  if (diff_zero) return;
  out.push_back(gates::cnot(msb, target));
  mux_recursive(out, axis, target, rest, std::move(diff), tol);
  out.push_back(gates::cnot(msb, target));
}

// Basis sequence for Toffoli(c1, c2 -> t): 6 CNOTs, T-count 7.
std::vector<Gate> toffoli_basis(int c1, int c2, int t) {
  const double q = kPi / 4;
  std::vector<Gate> g;
  g.push_back(make_u3(t, kPi / 2, 0.0, kPi));
  g.push_back(gates::cnot(c2, t));
  g.push_back(gates::phase(t, -q));
  g.push_back(gates::cnot(c1, t));
  g.push_back(gates::phase(t, q));
  g.push_back(gates::cnot(c2, t));
  g.push_back(gates::phase(t, -q));
  g.push_back(gates::cnot(c1, t));
  g.push_back(gates::phase(c2, q));
  g.push_back(gates::phase(t, q));
  g.push_back(make_u3(t, kPi / 2, 0.0, kPi));
  g.push_back(gates::cnot(c1, c2));
  g.push_back(gates::phase(c1, q));
  g.push_back(gates::phase(c2, -q));
  g.push_back(gates::cnot(c1, c2));
  return g;
}

std::vector<Gate> demultiplex(const Matrix& a0, const Matrix& a1,
                              std::span<const int> qubits,
                              const DecomposeOptions& opts) {
  const std::span<const int> lower = qubits.first(qubits.size() - 1);
  const int select = qubits.back();
  // [a0 0; 0 a1] = (I (x) V) (D (+) D^dagger) (I (x) W) with a0 a1^+ = V D^2 V^+.
  const Matrix m = a0 * a1.adjoint();
  Eigen::ComplexSchur<Matrix> schur(m);
  const Matrix& v = schur.matrixU();
  const Eigen::Index n = m.rows();
  Eigen::VectorXcd d(n);
  std::vector<double> angles(static_cast<std::size_t>(n));
  for (Eigen::Index j = 0; j < n; ++j) {
    d[j] = std::sqrt(schur.matrixT()(j, j));
    d[j] /= std::abs(d[j]);
    angles[static_cast<std::size_t>(j)] = -2.0 * std::arg(d[j]);
  }
  const Matrix w = d.asDiagonal() * v.adjoint() * a1;

  std::vector<Gate> out = synthesize_unitary(w, lower, opts);
  append(out, multiplexed_rotation(RotationAxis::Z, select, lower, angles,
                                   opts.angle_tol));
  append(out, synthesize_unitary(v, lower, opts));
  return out;
}

}  // namespace

bool BasisCircuit::is_basis_kind(GateKind kind) noexcept {
  return kind == GateKind::U3 || kind == GateKind::Phase || kind == GateKind::CNOT;
}

BasisCircuit::BasisCircuit(Circuit c) : circuit_(std::move(c)) {
  for (const Gate& g : circuit_.gates()) {
    if (!is_basis_kind(g.kind)) {
      throw ArgumentError("basis circuit cannot hold " + std::string(gate_name(g.kind)));
    }
    if (g.kind != GateKind::CNOT && !g.controls.empty()) {
      throw ArgumentError("basis rotations must be uncontrolled");
    }
  }
}

bool is_diagonal(const Matrix& m, double tol) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      if (r != c && std::abs(m(r, c)) > tol) return false;
    }
  }
  return true;
}

CosineSine cosine_sine_decompose(const Matrix& u) {
  if (u.rows() != u.cols() || u.rows() % 2 != 0) {
    throw DimensionError("cosine-sine decomposition needs an even square matrix");
  }
  if (unitarity_error(u) > 1e-8) {
    throw UnitaryError("cosine-sine decomposition input is not unitary");
  }
  const Eigen::Index n = u.rows() / 2;
  const Matrix u00 = u.topLeftCorner(n, n);
  const Matrix u01 = u.topRightCorner(n, n);
  const Matrix u10 = u.bottomLeftCorner(n, n);
  const Matrix u11 = u.bottomRightCorner(n, n);

  // Singular values in ascending order, so the sines come out descending and
  // the triangular factor below is well conditioned column by column.
  Eigen::JacobiSVD<Matrix, Eigen::NoQRPreconditioner> svd(
      u00, Eigen::ComputeFullU | Eigen::ComputeFullV);
  CosineSine out;
  out.l0 = svd.matrixU().rowwise().reverse();
  const Matrix r0_dag = svd.matrixV().rowwise().reverse();
  out.c = svd.singularValues().reverse();
  out.r0 = r0_dag.adjoint();

  Eigen::HouseholderQR<Matrix> qr(u10 * r0_dag);
  out.l1 = qr.householderQ();
  Matrix tri = qr.matrixQR().triangularView<Eigen::Upper>();
  // tri^+ tri = I - C^2 is diagonal, so tri is diagonal; make it real >= 0.
  out.s.resize(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const Complex z = tri(j, j);
    const double r = std::abs(z);
    if (r > 1e-14) {
      const Complex w = std::conj(z) / r;
      out.l1.col(j) /= w;
    }
    out.s[j] = r;
  }
  out.r1 = Matrix::Zero(n, n);
  const Matrix l0_u01 = out.l0.adjoint() * u01;
  const Matrix l1_u11 = out.l1.adjoint() * u11;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (out.s[i] > out.c[i]) {
      out.r1.row(i) = -l0_u01.row(i) / out.s[i];
    } else {
      out.r1.row(i) = l1_u11.row(i) / out.c[i];
    }
  }
  return out;
}

std::vector<Gate> multiplexed_rotation(RotationAxis axis, int target,
                                       std::span<const int> controls,
                                       std::span<const double> angles,
                                       double angle_tol) {
  if (angles.size() != (std::size_t{1} << controls.size())) {
    throw DimensionError("multiplexor needs 2^controls angles");
  }
  std::vector<Gate> out;
  mux_recursive(out, axis, target, controls,
                std::vector<double>(angles.begin(), angles.end()), angle_tol);
  return out;
}

std::vector<Gate> synthesize_diagonal(std::span<const double> phases,
                                      std::span<const int> qubits,
                                      double angle_tol) {
  if (phases.size() != (std::size_t{1} << qubits.size()) || qubits.empty()) {
    throw DimensionError("diagonal synthesis needs 2^qubits phases");
  }
  std::vector<Gate> out;
  std::vector<double> current(phases.begin(), phases.end());
  for (std::size_t k = qubits.size(); k >= 1; --k) {
    const std::size_t half = current.size() / 2;
    std::vector<double> reduced(half), angles(half);
    for (std::size_t j = 0; j < half; ++j) {
      const double a = current[j];
      const double b = current[j + half];
      angles[j] = b - a;
      reduced[j] = 0.5 * (a + b);
    }
    append(out, multiplexed_rotation(RotationAxis::Z, qubits[k - 1],
                                     qubits.first(k - 1), angles, angle_tol));
    current = std::move(reduced);
  }
  return out;
}

std::vector<Gate> synthesize_single_qubit(const Matrix& u, int qubit,
                                          double angle_tol) {
  if (u.rows() != 2 || u.cols() != 2) {
    throw DimensionError("single-qubit synthesis needs a 2x2 matrix");
  }
  std::vector<Gate> out;
  const double theta = 2.0 * std::atan2(std::abs(u(1, 0)), std::abs(u(0, 0)));
  if (theta < angle_tol) {
    emit_phase(out, qubit, std::arg(u(1, 1)) - std::arg(u(0, 0)), angle_tol);
    return out;
  }
  double phi = 0.0;
  double lambda = 0.0;
  if (kPi - theta < angle_tol) {
    const double alpha = std::arg(-u(0, 1));
    phi = std::arg(u(1, 0)) - alpha;
  } else {
    const double alpha = std::arg(u(0, 0));
    phi = std::arg(u(1, 0)) - alpha;
    lambda = std::arg(-u(0, 1)) - alpha;
  }
  out.push_back(make_u3(qubit, theta, phi, lambda));
  return out;
}

std::vector<Gate> synthesize_unitary(const Matrix& u, std::span<const int> qubits,
                                     const DecomposeOptions& opts) {
  if (u.rows() != (Eigen::Index{1} << qubits.size()) || u.rows() != u.cols()) {
    throw DimensionError("unitary does not match its qubit list");
  }
  if (qubits.size() == 1) {
    return synthesize_single_qubit(u, qubits[0], opts.angle_tol);
  }
  if (opts.diagonal_shortcut && is_diagonal(u, opts.diagonal_tol)) {
    std::vector<double> phases(static_cast<std::size_t>(u.rows()));
    for (Eigen::Index j = 0; j < u.rows(); ++j) {
      phases[static_cast<std::size_t>(j)] = std::arg(u(j, j));
    }
    return synthesize_diagonal(phases, qubits, opts.angle_tol);
  }
  const CosineSine cs = cosine_sine_decompose(u);
  std::vector<double> angles(static_cast<std::size_t>(cs.c.size()));
  for (Eigen::Index j = 0; j < cs.c.size(); ++j) {
    angles[static_cast<std::size_t>(j)] = 2.0 * std::atan2(cs.s[j], cs.c[j]);
  }
  std::vector<Gate> out = demultiplex(cs.r0, cs.r1, qubits, opts);
  append(out, multiplexed_rotation(RotationAxis::Y, qubits.back(),
                                   qubits.first(qubits.size() - 1), angles,
                                   opts.angle_tol));
  append(out, demultiplex(cs.l0, cs.l1, qubits, opts));
  return out;
}

std::vector<Gate> prepare_state(std::span<const Complex> amplitudes,
                                std::span<const int> qubits, double angle_tol) {
  if (amplitudes.size() != (std::size_t{1} << qubits.size()) || qubits.empty()) {
    throw DimensionError("state preparation needs 2^qubits amplitudes");
  }
  const StateVector target = normalize(amplitudes);
  const std::size_t dim = target.dim();
  std::vector<double> weight(dim);
  for (std::size_t x = 0; x < dim; ++x) weight[x] = std::norm(target[x]);

  std::vector<Gate> out;
  const std::size_t m = qubits.size();
  for (std::size_t k = m; k-- > 0;) {
    // Selector j = x >> (k + 1) enumerates the already-prepared high qubits.
    const std::size_t groups = dim >> (k + 1);
    const std::size_t block = std::size_t{1} << k;
    std::vector<double> angles(groups);
    for (std::size_t j = 0; j < groups; ++j) {
      double w0 = 0.0, w1 = 0.0;
      const std::size_t base = j << (k + 1);
      for (std::size_t l = 0; l < block; ++l) {
        w0 += weight[base + l];
        w1 += weight[base + block + l];
      }
      angles[j] = 2.0 * std::atan2(std::sqrt(w1), std::sqrt(w0));
    }
    append(out, multiplexed_rotation(RotationAxis::Y, qubits[k], qubits.subspan(k + 1),
                                     angles, angle_tol));
  }

  std::vector<double> phases(dim);
  bool any_phase = false;
  for (std::size_t x = 0; x < dim; ++x) {
    phases[x] = std::abs(target[x]) > 0.0 ? std::arg(target[x]) : 0.0;
    if (std::abs(phases[x] - phases[0]) >= angle_tol) any_phase = true;
  }
  if (any_phase) append(out, synthesize_diagonal(phases, qubits, angle_tol));
  return out;
}

BasisCircuit decompose(const Circuit& c, const DecomposeOptions& opts) {
  Circuit out(c.n_qubits());
  auto emit = [&out](std::vector<Gate> gs) {
    for (Gate& g : gs) out.add(std::move(g));
  };
  for (const Gate& g : c.gates()) {
    const bool single = g.targets.size() == 1;
    if (g.kind == GateKind::CNOT) {
      out.add(g);
    } else if (g.kind == GateKind::Toffoli) {
      emit(toffoli_basis(g.controls[0], g.controls[1], g.targets[0]));
    } else if (g.kind == GateKind::Fredkin) {
      const int ctl = g.controls[0], a = g.targets[0], b = g.targets[1];
      out.add(gates::cnot(b, a));
      emit(toffoli_basis(ctl, a, b));
      out.add(gates::cnot(b, a));
    } else if (g.kind == GateKind::Phase && g.controls.size() == 1) {
      const double lam = g.params[0];
      const int ctl = g.controls[0], t = g.targets[0];
      std::vector<Gate> gs;
      emit_phase(gs, ctl, lam / 2, opts.angle_tol);
      gs.push_back(gates::cnot(ctl, t));
      emit_phase(gs, t, -lam / 2, opts.angle_tol);
      gs.push_back(gates::cnot(ctl, t));
      emit_phase(gs, t, lam / 2, opts.angle_tol);
      emit(std::move(gs));
    } else if (single && g.controls.empty() && g.kind != GateKind::GenericUnitary) {
      if (g.kind == GateKind::U3) {
        out.add(g);
      } else {
        emit(synthesize_single_qubit(g.base_matrix(), g.targets[0], opts.angle_tol));
      }
    } else {
      const std::vector<int> qubits = g.qubits();
      if (qubits.size() > kMaxPayloadQubits) {
        throw SizeError("cannot synthesize a gate on more than 10 qubits");
      }
      const Matrix full = g.full_matrix();
      if (unitarity_error(full) > 1e-8) {
        throw UnitaryError("gate payload is not unitary");
      }
      emit(synthesize_unitary(full, qubits, opts));
    }
  }
  return BasisCircuit(std::move(out));
}

}  // namespace qlin
