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

#include "qlin/state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

#include "qlin/error.hpp"
#include "qlin/random.hpp"

namespace qlin {

int qubits_for_dim(std::size_t dim) {
  if (dim < 2 || !std::has_single_bit(dim)) {
    throw DimensionError("length " + std::to_string(dim) +
                         " is not a power of two >= 2");
  }
  const int n = std::countr_zero(dim);
  if (n > kMaxQubits) {
    throw SizeError("register of " + std::to_string(n) +
                    " qubits exceeds the dense limit of " +
                    std::to_string(kMaxQubits));
  }
  return n;
}

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw SizeError("qubit count " + std::to_string(n_qubits) +
                    " outside [1, " + std::to_string(kMaxQubits) + "]");
  }
  const std::size_t dim = std::size_t{1} << n_qubits;
  if (index >= dim) {
    throw ArgumentError("basis index out of range");
  }
  std::vector<Complex> amps(dim);
  amps[index] = 1.0;
  return StateVector(n_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(std::vector<Complex> amplitudes,
                                         double tol) {
  const int n = qubits_for_dim(amplitudes.size());
  double sum = 0.0;
  for (const Complex& c : amplitudes) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw ArgumentError("non-finite amplitude");
    }
    sum += std::norm(c);
  }
  if (std::abs(sum - 1.0) > tol) {
    throw ArgumentError("amplitudes are not normalized (norm^2 = " +
                        std::to_string(sum) + ")");
  }
  return StateVector(n, std::move(amplitudes));
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const Complex& c : amps_) sum += std::norm(c);
  return std::sqrt(sum);
}

UnitaryMatrix UnitaryMatrix::identity(int dim) {
  qubits_for_dim(static_cast<std::size_t>(dim));
  return UnitaryMatrix(Matrix::Identity(dim, dim));
}

UnitaryMatrix UnitaryMatrix::from_matrix(Matrix m, double tol) {
  if (m.rows() != m.cols()) {
    throw DimensionError("unitary must be square");
  }
  if (m.rows() == 1 || !std::has_single_bit(static_cast<std::size_t>(m.rows()))) {
    throw DimensionError("unitary dimension must be a power of two");
  }
  if (!m.allFinite()) {
    throw UnitaryError("matrix has non-finite entries");
  }
  const double err = unitarity_error(m);
  if (err > tol) {
    throw UnitaryError("matrix is not unitary (max |UU^+ - I| = " +
                       std::to_string(err) + ")");
  }
  return UnitaryMatrix(std::move(m));
}

int UnitaryMatrix::n_qubits() const noexcept {
  return std::countr_zero(static_cast<std::size_t>(m_.rows()));
}

UnitaryMatrix UnitaryMatrix::adjoint() const {
  return UnitaryMatrix(m_.adjoint());
}

double unitarity_error(const Matrix& u) {
  const Matrix prod = u * u.adjoint();
  return (prod - Matrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
}

StateVector normalize(std::span<const Complex> raw) {
  const int n = qubits_for_dim(raw.size());
  double sum = 0.0;
  for (const Complex& c : raw) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw ArgumentError("non-finite amplitude");
    }
    sum += std::norm(c);
  }
  if (sum == 0.0) {
    throw ZeroVector("cannot normalize the zero vector");
  }
  const double inv = 1.0 / std::sqrt(sum);
  std::vector<Complex> amps(raw.begin(), raw.end());
  for (Complex& c : amps) c *= inv;
  return StateVector(n, std::move(amps));
}

StateVector adopt_state(std::vector<Complex> amps) {
  const int n = qubits_for_dim(amps.size());
  return StateVector(n, std::move(amps));
}

StateVector apply_unitary(const StateVector& s, const UnitaryMatrix& u,
                          std::span<const int> targets) {
  if (u.dim() != (1 << targets.size())) {
    throw DimensionError("unitary of dimension " + std::to_string(u.dim()) +
                         " does not match " + std::to_string(targets.size()) +
                         " targets");
  }
  std::vector<Complex> amps(s.amplitudes().begin(), s.amplitudes().end());
  kernels::apply_matrix(amps, u.matrix(), targets);
  return adopt_state(std::move(amps));
}

std::vector<double> probabilities(const StateVector& s) {
  std::vector<double> p(s.dim());
  double sum = 0.0;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    p[i] = std::norm(s[i]);
    sum += p[i];
  }
  for (double& x : p) x /= sum;
  return p;
}

Histogram sample_distribution(std::span<const double> probs,
                              std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) {
    throw ArgumentError("shots must be >= 1");
  }
  if (probs.empty()) {
    throw ArgumentError("empty distribution");
  }
  std::vector<double> cumulative(probs.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    acc += probs[i];
    cumulative[i] = acc;
  }
  // Draws landing past the rounded total go to the last outcome with mass.
  std::size_t last = probs.size() - 1;
  while (last > 0 && probs[last] == 0.0) --last;

  Rng rng(seed);
  Histogram h;
  for (std::uint64_t shot = 0; shot < shots; ++shot) {
    const double u = rng.uniform() * acc;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    std::size_t idx = static_cast<std::size_t>(it - cumulative.begin());
    if (idx > last) idx = last;
    ++h[idx];
  }
  return h;
}

Histogram sample(const StateVector& s, std::uint64_t shots,
                 std::uint64_t seed) {
  const std::vector<double> p = probabilities(s);
  return sample_distribution(p, shots, seed);
}

std::string histogram_to_json(const Histogram& h, int n_qubits) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& [index, count] : h) {
    if (!first) out << ',';
    first = false;
    std::string bits(static_cast<std::size_t>(n_qubits), '0');
    for (int q = 0; q < n_qubits; ++q) {
      if ((index >> q) & 1U) bits[static_cast<std::size_t>(n_qubits - 1 - q)] = '1';
    }
    out << '"' << bits << "\":" << count;
  }
  out << '}';
  return out.str();
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) {
    throw DimensionError("states have different dimensions");
  }
  Complex acc = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double state_fidelity(const StateVector& a, const StateVector& b) {
  const double f = std::norm(inner_product(a, b));
  return std::clamp(f, 0.0, 1.0);
}

namespace kernels {

void apply_matrix(std::span<Complex> amps, const Matrix& u,
                  std::span<const int> targets, std::span<const int> controls) {
  const std::size_t dim = amps.size();
  const int n = qubits_for_dim(dim);
  const std::size_t k = targets.size();
  if (k == 0 || static_cast<std::size_t>(u.rows()) != (std::size_t{1} << k) ||
      u.rows() != u.cols()) {
    throw DimensionError("gate matrix does not match its target count");
  }
  std::uint64_t tmask = 0;
  for (int t : targets) {
    if (t < 0 || t >= n) throw TargetError("target qubit out of range");
    const std::uint64_t bit = std::uint64_t{1} << t;
    if (tmask & bit) throw TargetError("duplicate target qubit");
    tmask |= bit;
  }
  std::uint64_t cmask = 0;
  for (int c : controls) {
    if (c < 0 || c >= n) throw TargetError("control qubit out of range");
    const std::uint64_t bit = std::uint64_t{1} << c;
    if ((cmask | tmask) & bit) throw TargetError("duplicate control qubit");
    cmask |= bit;
  }

  if (k == 1) {
    const std::uint64_t bit = tmask;
    const Complex u00 = u(0, 0), u01 = u(0, 1), u10 = u(1, 0), u11 = u(1, 1);
    for (std::uint64_t i = 0; i < dim; ++i) {
      if ((i & bit) || (i & cmask) != cmask) continue;
      const Complex a0 = amps[i];
      const Complex a1 = amps[i | bit];
      amps[i] = u00 * a0 + u01 * a1;
      amps[i | bit] = u10 * a0 + u11 * a1;
    }
    return;
  }

  const std::size_t sub = std::size_t{1} << k;
  std::vector<std::uint64_t> offsets(sub, 0);
  for (std::size_t l = 0; l < sub; ++l) {
    for (std::size_t j = 0; j < k; ++j) {
      if ((l >> j) & 1U) offsets[l] |= std::uint64_t{1} << targets[j];
    }
  }
  Eigen::VectorXcd in(static_cast<Eigen::Index>(sub));
  Eigen::VectorXcd out(static_cast<Eigen::Index>(sub));
  for (std::uint64_t i = 0; i < dim; ++i) {
    if ((i & tmask) || (i & cmask) != cmask) continue;
    for (std::size_t l = 0; l < sub; ++l) in[static_cast<Eigen::Index>(l)] = amps[i | offsets[l]];
    out.noalias() = u * in;
    for (std::size_t l = 0; l < sub; ++l) amps[i | offsets[l]] = out[static_cast<Eigen::Index>(l)];
  }
}

}  // namespace kernels

}  // namespace qlin
