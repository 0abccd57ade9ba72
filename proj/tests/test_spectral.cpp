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

#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qlin/error.hpp"
#include "qlin/spectral.hpp"

#include <unsupported/Eigen/MatrixFunctions>

using namespace qlin;

namespace {

constexpr double kPi = std::numbers::pi;

Matrix reconstruct(const SpectralDecomposition& d) {
  return d.eigenvectors * d.eigenvalues.cast<Complex>().asDiagonal() * d.eigenvectors.adjoint();
}

double max_hermiticity_gap(const Matrix& m) { return (m - m.adjoint()).cwiseAbs().maxCoeff(); }

HermitianMatrix coles() {
  Matrix m(2, 2);
  m << 1.5, 0.5, 0.5, 1.5;
  return HermitianMatrix::from_matrix(m);
}

}  // namespace

TEST_CASE("hermitize examples") {
  Matrix a(2, 2);
  a << 0, 1, 0, 0;
  Matrix want(2, 2);
  want << 0, 1, 1, 0;
  CHECK((hermitize(a).matrix() - want).norm() == 0.0);

  Matrix s(2, 2);
  s << 1, 2, 2, -3;
  CHECK((hermitize(s).matrix() - 2.0 * s).norm() == 0.0);

  CHECK_THROWS_AS(hermitize(Matrix::Zero(2, 3)), DimensionError);
}

TEST_CASE("hermitize is Hermitian on random inputs") {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const int dim = 1 << (1 + trial % 3);
    Matrix a(dim, dim);
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) a(j, k) = {u(rng), u(rng)};
    const Matrix b = hermitize(a).matrix();
    bool exact = true;
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) exact = exact && b(j, k) == std::conj(b(k, j));
    CHECK(exact);
  }
}

TEST_CASE("from_matrix validation") {
  CHECK_THROWS_AS(HermitianMatrix::from_matrix(Matrix::Zero(2, 3)), DimensionError);
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(HermitianMatrix::from_matrix(m), HermiticityError);
  m(1, 0) = Complex(1.0, 1e-13);
  CHECK_NOTHROW(HermitianMatrix::from_matrix(m));
}

TEST_CASE("random_sparse_hermitian examples") {
  const HermitianMatrix z = random_sparse_hermitian({0.0, 4, 3});
  CHECK(z.matrix().cwiseAbs().maxCoeff() == 0.0);
  CHECK_THROWS_AS(condition_number(eigendecompose(z)), SingularError);

  const HermitianMatrix full = random_sparse_hermitian({1.0, 2, 3});
  CHECK(achieved_density(full.matrix()) == 1.0);

  const HermitianMatrix half = random_sparse_hermitian({0.5, 8, 42});
  int nonzero = 0;
  for (int j = 0; j < 8; ++j)
    for (int k = 0; k < 8; ++k) nonzero += std::abs(half.matrix()(j, k)) > 0.0;
  CHECK(nonzero / 64.0 >= 0.4);
  CHECK(nonzero / 64.0 <= 0.6);
  CHECK(max_hermiticity_gap(half.matrix()) <= 1e-12);

  CHECK_THROWS_AS(random_sparse_hermitian({1.5, 2, 0}), ArgumentError);
  CHECK_THROWS_AS(random_sparse_hermitian({-0.1, 2, 0}), ArgumentError);
}

TEST_CASE("random_sparse_hermitian is deterministic and tracks density") {
  for (double density : {0.5, 0.6, 0.7, 0.8, 0.9, 1.0}) {
    for (int dim : {2, 4, 8}) {
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const HermitianMatrix a = random_sparse_hermitian({density, dim, seed});
        const HermitianMatrix b = random_sparse_hermitian({density, dim, seed});
        CHECK(a.matrix() == b.matrix());
        CHECK(std::abs(achieved_density(a.matrix()) - density) <= 0.1 + 1e-12);
        for (int j = 0; j < dim; ++j) CHECK(a.matrix()(j, j).imag() == 0.0);
      }
    }
  }
}

TEST_CASE("paired diagonal and coupled generators") {
  const HermitianMatrix d = random_diagonal(4, 7);
  const HermitianMatrix c = random_coupled(4, 7);
  CHECK(d.is_diagonal());
  CHECK_FALSE(c.is_diagonal());
  for (int j = 0; j < 4; ++j) {
    CHECK(d.matrix()(j, j).real() >= 0.5);
    CHECK(d.matrix()(j, j).real() < 2.5);
  }
  const SpectralDecomposition sc = eigendecompose(c);
  CHECK(sc.eigenvalues.minCoeff() > 0.0);
}

TEST_CASE("eigendecompose examples") {
  const std::vector<double> d12 = {1.0, 2.0};
  const SpectralDecomposition a = eigendecompose(HermitianMatrix::diagonal(d12));
  CHECK(a.eigenvalues(0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(a.eigenvalues(1) == doctest::Approx(2.0).epsilon(1e-14));
  CHECK((a.eigenvectors - Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() < 1e-14);

  const SpectralDecomposition c = eigendecompose(coles());
  CHECK(c.eigenvalues(0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(c.eigenvalues(1) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK((reconstruct(c) - coles().matrix()).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(std::abs(std::abs(c.eigenvectors(0, 0)) - std::sqrt(0.5)) < 1e-12);
  CHECK(std::abs(c.eigenvectors(0, 0) + c.eigenvectors(1, 0)) < 1e-12);
  CHECK(std::abs(c.eigenvectors(0, 1) - c.eigenvectors(1, 1)) < 1e-12);

  const SpectralDecomposition z =
      eigendecompose(HermitianMatrix::from_matrix(oracle::pauli_z()));
  CHECK(z.eigenvalues(0) == doctest::Approx(-1.0));
  CHECK(z.eigenvalues(1) == doctest::Approx(1.0));
}

TEST_CASE("eigendecompose matches the reference solver on random matrices") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 500; ++trial) {
    const int dim = 2 << (trial % 3);
    const oracle::Matrix a = oracle::random_hermitian(dim, rng);
    const SpectralDecomposition d = eigendecompose(HermitianMatrix::from_matrix(a));
    const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    CHECK((reconstruct(d) - a).cwiseAbs().maxCoeff() <= 1e-8 * scale);
    CHECK((d.eigenvectors.adjoint() * d.eigenvectors - Matrix::Identity(dim, dim))
              .cwiseAbs()
              .maxCoeff() <= 1e-9);
    const Eigen::VectorXd ref = oracle::eigen(a).eigenvalues();
    CHECK((d.eigenvalues - ref).cwiseAbs().maxCoeff() <= 1e-9 * scale);
    for (int j = 0; j < dim; ++j) {
      const oracle::Vector u = d.eigenvectors.col(j);
      CHECK((a * u - d.eigenvalues(j) * u).norm() <= 1e-8 * a.norm());
    }
  }
}

TEST_CASE("condition_number examples") {
  const std::vector<double> d12 = {1.0, 2.0};
  CHECK(condition_number(eigendecompose(HermitianMatrix::diagonal(d12))) ==
        doctest::Approx(2.0));
  const std::vector<double> ones = {1.0, 1.0, 1.0, 1.0};
  CHECK(condition_number(eigendecompose(HermitianMatrix::diagonal(ones))) == 1.0);
  const std::vector<double> mixed = {0.1, 1.0, -10.0, 2.0};
  CHECK(condition_number(eigendecompose(HermitianMatrix::diagonal(mixed))) ==
        doctest::Approx(100.0));
  const std::vector<double> singular = {0.0, 1.0};
  CHECK_THROWS_AS(condition_number(eigendecompose(HermitianMatrix::diagonal(singular))),
                  SingularError);
}

TEST_CASE("classical_solve examples") {
  const std::vector<Complex> b1 = {0.6, 0.8};
  const StateVector x1 = classical_solve(HermitianMatrix::from_matrix(Matrix::Identity(2, 2)), b1);
  CHECK(std::abs(x1[0] - 0.6) < 1e-12);
  CHECK(std::abs(x1[1] - 0.8) < 1e-12);

  const std::vector<Complex> b2 = {1.0, 0.0};
  const StateVector x2 = classical_solve(coles(), b2);
  CHECK(std::abs(x2[0] - 0.75 / std::sqrt(0.625)) < 1e-12);
  CHECK(std::abs(x2[1] + 0.25 / std::sqrt(0.625)) < 1e-12);
  CHECK(x2[0].real() == doctest::Approx(0.9487).epsilon(1e-4));

  const std::vector<double> d12 = {1.0, 2.0};
  const std::vector<Complex> b3 = {std::sqrt(0.5), std::sqrt(0.5)};
  const StateVector x3 = classical_solve(HermitianMatrix::diagonal(d12), b3);
  CHECK(std::abs(x3[0] - 2.0 / std::sqrt(5.0)) < 1e-12);
  CHECK(std::abs(x3[1] - 1.0 / std::sqrt(5.0)) < 1e-12);

  const std::vector<double> sing = {0.0, 1.0};
  CHECK_THROWS_AS(classical_solve(HermitianMatrix::diagonal(sing), b3), SingularError);
  const std::vector<Complex> zero = {0.0, 0.0};
  CHECK_THROWS_AS(classical_solve(coles(), zero), ZeroVector);
}

TEST_CASE("classical_solve agrees with the spectral expansion") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int dim = 2 << (trial % 3);
    const oracle::Matrix a = oracle::random_hermitian(dim, rng);
    const oracle::Vector b = oracle::random_state(dim, rng);
    const auto es = oracle::eigen(a);
    if (es.eigenvalues().cwiseAbs().minCoeff() < 1e-3) continue;
    oracle::Vector x = oracle::Vector::Zero(dim);
    for (int j = 0; j < dim; ++j) {
      const oracle::Vector u = es.eigenvectors().col(j);
      x += (u.dot(b) / es.eigenvalues()(j)) * u;
    }
    x.normalize();
    const StateVector got =
        classical_solve(HermitianMatrix::from_matrix(a), std::span<const Complex>(b.data(), dim));
    const oracle::Vector g = Eigen::Map<const oracle::Vector>(got.amplitudes().data(), dim);
    CHECK(oracle::fidelity(g, x) > 1 - 1e-8);
    CHECK(oracle::fidelity(g, oracle::solve_normalized(a, b)) > 1 - 1e-8);
  }
}

TEST_CASE("evolution_unitary examples") {
  CHECK((evolution_unitary(coles(), 0.0).matrix() - Matrix::Identity(2, 2))
            .cwiseAbs()
            .maxCoeff() < 1e-14);
  const HermitianMatrix z = HermitianMatrix::from_matrix(oracle::pauli_z());
  CHECK((evolution_unitary(z, kPi).matrix() + Matrix::Identity(2, 2)).cwiseAbs().maxCoeff() <
        1e-12);
  const std::vector<double> d12 = {1.0, 2.0};
  Matrix want = Matrix::Zero(2, 2);
  want(0, 0) = -1.0;
  want(1, 1) = 1.0;
  CHECK((evolution_unitary(HermitianMatrix::diagonal(d12), kPi).matrix() - want)
            .cwiseAbs()
            .maxCoeff() < 1e-12);
}

TEST_CASE("evolution_unitary is unitary and obeys the group law") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> t(-4.0, 4.0);
  for (int trial = 0; trial < 100; ++trial) {
    const int dim = 2 << (trial % 3);
    const HermitianMatrix a = HermitianMatrix::from_matrix(oracle::random_hermitian(dim, rng));
    const double t1 = t(rng), t2 = t(rng);
    const Matrix u1 = evolution_unitary(a, t1).matrix();
    const Matrix u2 = evolution_unitary(a, t2).matrix();
    const Matrix u12 = evolution_unitary(a, t1 + t2).matrix();
    CHECK(unitarity_error(u1) < 1e-9);
    CHECK((u1 * u2 - u12).cwiseAbs().maxCoeff() < 1e-8);
    const Matrix ref = (Complex(0.0, t1) * a.matrix()).exp();
    CHECK((u1 - ref).cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("gershgorin bound covers the spectrum") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    const HermitianMatrix a = HermitianMatrix::from_matrix(oracle::random_hermitian(4, rng));
    CHECK(gershgorin_bound(a) >= eigendecompose(a).eigenvalues.cwiseAbs().maxCoeff() - 1e-12);
  }
}

TEST_CASE("matrix json layout") {
  const std::vector<double> d12 = {1.0, 2.0};
  CHECK(to_json(HermitianMatrix::diagonal(d12)) ==
        R"({"dim":2,"entries":[[1.0,0.0],[0.0,0.0],[0.0,0.0],[2.0,0.0]]})");
}
