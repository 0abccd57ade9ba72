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

// Independent reference implementations used only by the tests. Nothing
// here calls the library's simulator, eigensolver or linear solver.

#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace oracle {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline constexpr double kPi = std::numbers::pi;

/// F[j][k] = exp(2 pi i jk / N) / sqrt(N).
inline Matrix dft(int n_qubits) {
  const int n = 1 << n_qubits;
  Matrix f(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      f(j, k) = std::polar(1.0 / std::sqrt(static_cast<double>(n)), 2.0 * kPi * j * k / n);
    }
  }
  return f;
}

/// Embeds `m` (local bit i <-> qubits[i]) into an n-qubit operator by
/// walking every pair of basis states.
inline Matrix embed(const Matrix& m, const std::vector<int>& qubits, int n) {
  const std::size_t dim = std::size_t{1} << n;
  std::uint64_t mask = 0;
  for (int q : qubits) mask |= std::uint64_t{1} << q;
  auto local = [&](std::uint64_t x) {
    std::uint64_t l = 0;
    for (std::size_t i = 0; i < qubits.size(); ++i) l |= ((x >> qubits[i]) & 1U) << i;
    return static_cast<Eigen::Index>(l);
  };
  Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::uint64_t r = 0; r < dim; ++r) {
    for (std::uint64_t c = 0; c < dim; ++c) {
      if ((r & ~mask) != (c & ~mask)) continue;
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(local(r), local(c));
    }
  }
  return out;
}

/// Kronecker product a (x) b, with b on the low bits.
inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

inline Matrix pauli_x() { Matrix m(2, 2); m << 0, 1, 1, 0; return m; }
inline Matrix pauli_y() { Matrix m(2, 2); m << 0, Complex(0, -1), Complex(0, 1), 0; return m; }
inline Matrix pauli_z() { Matrix m(2, 2); m << 1, 0, 0, -1; return m; }
inline Matrix hadamard() {
  Matrix m(2, 2);
  m << 1, 1, 1, -1;
  return m / std::sqrt(2.0);
}

/// Phase-estimation readout distribution for an exact eigenphase phi:
/// P(k) = |(1/N) sum_j exp(2 pi i j (phi - k/N))|^2.
inline std::vector<double> qpe_distribution(double phi, int n_clock) {
  const int n = 1 << n_clock;
  std::vector<double> p(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    Complex s = 0.0;
    for (int j = 0; j < n; ++j) s += std::polar(1.0, 2.0 * kPi * j * (phi - double(k) / n));
    p[static_cast<std::size_t>(k)] = std::norm(s / double(n));
  }
  return p;
}

/// Ascending eigenvalues and eigenvectors (LAPACK-style reference).
inline Eigen::SelfAdjointEigenSolver<Matrix> eigen(const Matrix& a) {
  return Eigen::SelfAdjointEigenSolver<Matrix>(a);
}

/// Normalized solution of a x = b via full-pivot LU.
inline Vector solve_normalized(const Matrix& a, const Vector& b) {
  Vector x = a.fullPivLu().solve(b);
  return x / x.norm();
}

/// |<a|b>|^2 for normalized vectors.
inline double fidelity(const Vector& a, const Vector& b) {
  return std::norm(a.dot(b)) / (a.squaredNorm() * b.squaredNorm());
}

/// Distance after aligning the global phase on the largest entry of a.
inline double phase_distance(const Matrix& a, const Matrix& b) {
  Eigen::Index r = 0, c = 0;
  a.cwiseAbs().maxCoeff(&r, &c);
  const Complex phase = b(r, c) == Complex(0.0) ? Complex(1.0) : a(r, c) / b(r, c);
  const Complex unit = phase / std::abs(phase);
  return (a - unit * b).cwiseAbs().maxCoeff();
}

/// Haar-ish random unitary from QR of a Gaussian matrix.
inline Matrix random_unitary(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Matrix z(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) z(i, j) = Complex(g(rng), g(rng));
  }
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) {
    const Complex d = r(i, i);
    q.col(i) *= d / std::abs(d);
  }
  return q;
}

inline Vector random_state(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Vector v(dim);
  for (int i = 0; i < dim; ++i) v(i) = Complex(g(rng), g(rng));
  return v / v.norm();
}

inline Matrix random_hermitian(int dim, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix a(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) a(i, j) = Complex(u(rng), u(rng));
  }
  return (a + a.adjoint()) / 2.0;
}

/// Solves [[0, 1^T], [1, K + g I]] [b; a] = [0; y] with a QR factorization.
inline Eigen::VectorXd lssvm(const Eigen::MatrixXd& k, const Eigen::VectorXd& y, double g) {
  const Eigen::Index m = k.rows();
  Eigen::MatrixXd f = Eigen::MatrixXd::Zero(m + 1, m + 1);
  f.block(0, 1, 1, m).setOnes();
  f.block(1, 0, m, 1).setOnes();
  f.block(1, 1, m, m) = k + g * Eigen::MatrixXd::Identity(m, m);
  Eigen::VectorXd rhs(m + 1);
  rhs << 0.0, y;
  return f.colPivHouseholderQr().solve(rhs);
}

}  // namespace oracle
