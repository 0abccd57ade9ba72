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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qlin/error.hpp"
#include "qlin/qsvm.hpp"

using namespace qlin;

namespace {

constexpr double kPi = std::numbers::pi;
const FeatureMap kQuantum{};
const FeatureMap kLinear{FeatureMapKind::Linear, 2, 1};

// The map is H^n followed by a diagonal per repetition; the entangler
// CNOT-Phase-CNOT contributes its angle exactly when the two bits differ.
oracle::Vector feature_oracle(const std::vector<double>& x, int reps) {
  const int n = static_cast<int>(x.size());
  const int dim = 1 << n;
  oracle::Matrix h = oracle::hadamard();
  for (int q = 1; q < n; ++q) h = oracle::kron(oracle::hadamard(), h);
  oracle::Vector d(dim);
  for (int s = 0; s < dim; ++s) {
    double angle = 0.0;
    for (int i = 0; i < n; ++i) {
      const int bi = (s >> i) & 1;
      angle += 2.0 * x[static_cast<std::size_t>(i)] * bi;
      for (int j = i + 1; j < n; ++j) {
        const int bj = (s >> j) & 1;
        angle += 2.0 * (kPi - x[static_cast<std::size_t>(i)]) * (kPi - x[static_cast<std::size_t>(j)]) *
                 (bi ^ bj);
      }
    }
    d(s) = std::polar(1.0, angle);
  }
  oracle::Vector v = oracle::Vector::Zero(dim);
  v(0) = 1.0;
  for (int r = 0; r < reps; ++r) v = d.asDiagonal() * (h * v);
  return v;
}

double overlap_oracle(const std::vector<double>& x, const std::vector<double>& z, int reps) {
  return oracle::fidelity(feature_oracle(x, reps), feature_oracle(z, reps));
}

Eigen::MatrixXd random_points(int m, int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::MatrixXd x(m, n);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) x(i, j) = u(rng);
  return x;
}

std::vector<double> row_of(const Eigen::MatrixXd& x, Eigen::Index i) {
  std::vector<double> r(static_cast<std::size_t>(x.cols()));
  for (Eigen::Index j = 0; j < x.cols(); ++j) r[static_cast<std::size_t>(j)] = x(i, j);
  return r;
}

LSSVMModel two_point_model(double gamma_inv) {
  KernelMatrix k;
  k.values = (Eigen::MatrixXd(2, 2) << 1, -1, -1, 1).finished();
  const std::vector<int> y = {1, -1};
  return train_lssvm(k, y, gamma_inv);
}

}  // namespace

TEST_CASE("feature map states match the diagonal-layer oracle") {
  std::mt19937_64 rng(1);
  for (int n : {1, 2, 3}) {
    for (int reps : {1, 2, 3}) {
      const FeatureMap map{FeatureMapKind::SecondOrder, n, reps};
      const Eigen::MatrixXd pts = random_points(10, n, rng);
      for (Eigen::Index i = 0; i < pts.rows(); ++i) {
        const std::vector<double> x = row_of(pts, i);
        const StateVector s = feature_map_state(x, map);
        const oracle::Vector got =
            Eigen::Map<const oracle::Vector>(s.amplitudes().data(), 1 << n);
        CHECK(oracle::fidelity(got, feature_oracle(x, reps)) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(s.norm() == doctest::Approx(1.0).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("feature map examples") {
  const std::vector<double> x = {0.3, -0.7};
  CHECK(state_fidelity(feature_map_state(x, kQuantum), feature_map_state(x, kQuantum)) ==
        doctest::Approx(1.0));
  std::mt19937_64 rng(2);
  const Eigen::MatrixXd pts = random_points(100, 2, rng);
  for (Eigen::Index i = 0; i < 100; ++i) {
    const std::vector<double> p = row_of(pts, i);
    CHECK(kernel_exact(p, p, kQuantum) == doctest::Approx(1.0).epsilon(1e-12));
  }
  const std::vector<double> a = {0.1, 0.2}, b = {0.9, -0.4};
  const double k = kernel_exact(a, b, kQuantum);
  CHECK(k >= 0.0);
  CHECK(k <= 1.0);
  CHECK(k == doctest::Approx(overlap_oracle(a, b, 2)).epsilon(1e-12));

  const std::vector<double> three = {0.1, 0.2, 0.3};
  CHECK_THROWS_AS(feature_map_state(three, kQuantum), DimensionError);
  CHECK_THROWS_AS(feature_map_circuit(a, kLinear), ArgumentError);
}

TEST_CASE("kernel_exact examples") {
  const std::vector<double> e = {1.0, 0.0}, f = {-1.0, 0.0};
  CHECK(kernel_exact(e, f, kLinear) == -1.0);
  const std::vector<double> p = {kPi / 2, 0.0}, q = {-kPi / 2, 0.0};
  const FeatureMap one{FeatureMapKind::SecondOrder, 2, 1};
  const double fixture = overlap_oracle({kPi / 2, 0.0}, {-kPi / 2, 0.0}, 1);
  CHECK(kernel_exact(p, q, one) == doctest::Approx(fixture).epsilon(1e-12));
  CHECK(kernel_exact(p, q, one) == doctest::Approx(kernel_exact(q, p, one)).epsilon(1e-15));
  const std::vector<double> short_x = {1.0};
  CHECK_THROWS_AS(kernel_exact(short_x, e, kLinear), DimensionError);
  CHECK_THROWS_AS(kernel_exact(short_x, e, kQuantum), DimensionError);
}

TEST_CASE("kernel_sampled examples") {
  const std::vector<double> x = {0.4, -0.2}, z = {-0.6, 0.9};
  for (std::uint64_t shots : {1ULL, 7ULL, 1024ULL}) CHECK(kernel_sampled(x, x, kQuantum, shots, 3) == 1.0);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const double v = kernel_sampled(x, z, kQuantum, 1, seed);
    CHECK((v == 0.0 || v == 1.0));
  }
  CHECK_THROWS_AS(kernel_sampled(x, z, kQuantum, 0, 1), ArgumentError);
  CHECK(kernel_sampled(x, z, kQuantum, 100, 5) == kernel_sampled(x, z, kQuantum, 100, 5));
}

TEST_CASE("kernel_sampled concentrates binomially") {
  const std::vector<double> x = {0.1, 0.2}, z = {0.9, -0.4};
  const double k = kernel_exact(x, z, kQuantum);
  const double bound = 5.0 * std::sqrt(k * (1 - k) / 4096.0);
  int inside = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    inside += std::abs(kernel_sampled(x, z, kQuantum, 4096, seed) - k) <= bound;
  }
  CHECK(inside >= 99);
}

TEST_CASE("circuit sampling and the Bernoulli fast path agree") {
  std::mt19937_64 rng(4);
  const Eigen::MatrixXd pts = random_points(40, 2, rng);
  for (Eigen::Index i = 0; i + 1 < pts.rows(); i += 2) {
    const std::vector<double> x = row_of(pts, i), z = row_of(pts, i + 1);
    const double k = kernel_exact(x, z, kQuantum);
    const std::uint64_t seed = static_cast<std::uint64_t>(i);
    CHECK(std::abs(kernel_sampled(x, z, kQuantum, 256, seed) -
                   estimate_probability(k, 256, seed)) <= 2.0 / 256);
  }
}

TEST_CASE("Gram matrices") {
  std::mt19937_64 rng(5);
  const Eigen::MatrixXd x = random_points(12, 2, rng);
  const KernelMatrix exact = gram_exact(x, kQuantum);
  CHECK(exact.provenance == KernelMatrix::Provenance::Exact);
  for (Eigen::Index i = 0; i < 12; ++i) {
    CHECK(exact.values(i, i) == doctest::Approx(1.0).epsilon(1e-12));
    for (Eigen::Index j = 0; j < 12; ++j) {
      CHECK(exact.values(i, j) == exact.values(j, i));
      CHECK(exact.values(i, j) ==
            doctest::Approx(overlap_oracle(row_of(x, i), row_of(x, j), 2)).epsilon(1e-12));
    }
  }
  const FeatureStates states(x, kQuantum);
  const KernelMatrix s = gram_sampled(states, 64, 9);
  CHECK(s.provenance == KernelMatrix::Provenance::Sampled);
  CHECK(s.shots == 64);
  CHECK((s.values - s.values.transpose()).cwiseAbs().maxCoeff() == 0.0);
  CHECK(s.values.minCoeff() >= 0.0);
  CHECK(s.values.maxCoeff() <= 1.0);
  CHECK(s.values(3, 5) == estimate_probability(exact.values(3, 5), 64, pair_seed(9, 3, 5)));
  CHECK(pair_seed(9, 3, 5) == pair_seed(9, 5, 3));
  CHECK(cross_seed(9, 3, 5) != cross_seed(9, 5, 3));

  const Eigen::MatrixXd q = random_points(4, 2, rng);
  const Eigen::MatrixXd cross = cross_kernel_exact(q, x, kQuantum);
  CHECK(cross(2, 7) == doctest::Approx(kernel_exact(row_of(q, 2), row_of(x, 7), kQuantum)));
  const Eigen::MatrixXd cs = cross_kernel_sampled(FeatureStates(q, kQuantum), states, 32, 1);
  CHECK(cs(2, 7) == estimate_probability(cross(2, 7), 32, cross_seed(1, 2, 7)));
}

TEST_CASE("exact Gram matrices are positive semidefinite") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 50; ++trial) {
    const Eigen::MatrixXd x = random_points(20, 2, rng);
    for (const FeatureMap& map : {kQuantum, kLinear}) {
      const Eigen::MatrixXd k = gram_exact(x, map).values;
      CHECK(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(k).eigenvalues().minCoeff() >= -1e-8);
    }
  }
}

TEST_CASE("sampled Gram error halves per fourfold shot increase") {
  std::mt19937_64 rng(7);
  const Eigen::MatrixXd x = random_points(10, 2, rng);
  const FeatureStates states(x, kQuantum);
  const Eigen::MatrixXd exact = gram_exact(x, kQuantum).values;
  std::vector<double> err;
  for (std::uint64_t shots : {64ULL, 256ULL, 1024ULL, 4096ULL}) {
    double total = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      total += (gram_sampled(states, shots, seed).values - exact).cwiseAbs().maxCoeff();
    }
    err.push_back(total / 20.0);
  }
  for (std::size_t i = 0; i + 1 < err.size(); ++i) {
    const double ratio = err[i] / err[i + 1];
    CHECK(ratio >= 2.0 / 1.5);
    CHECK(ratio <= 2.0 * 1.5);
  }
}

TEST_CASE("train_lssvm examples") {
  const LSSVMModel m = two_point_model(0.0);
  CHECK(std::abs(m.b) < 1e-12);
  CHECK(m.a(0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(m.a(1) == doctest::Approx(-0.5).epsilon(1e-12));

  KernelMatrix id;
  id.values = Eigen::MatrixXd::Identity(4, 4);
  const std::vector<int> y = {1, 1, 1, -1};
  const LSSVMModel mi = train_lssvm(id, y, 0.0);
  CHECK(mi.b == doctest::Approx(0.5));
  for (int j = 0; j < 4; ++j) CHECK(mi.a(j) == doctest::Approx(y[static_cast<std::size_t>(j)] - 0.5));

  const LSSVMModel soft = two_point_model(0.01);
  CHECK(std::abs(soft.b - m.b) <= 0.05);
  CHECK((soft.a - m.a).cwiseAbs().maxCoeff() <= 0.05);
}

TEST_CASE("train_lssvm validation") {
  KernelMatrix k;
  k.values = Eigen::MatrixXd::Identity(1, 1);
  const std::vector<int> one = {1};
  CHECK_THROWS_AS(train_lssvm(k, one, 0.0), ArgumentError);
  k.values = Eigen::MatrixXd::Identity(2, 2);
  const std::vector<int> bad = {1, 0};
  CHECK_THROWS_AS(train_lssvm(k, bad, 0.0), ArgumentError);
  k.values(0, 1) = 0.5;
  const std::vector<int> y = {1, -1};
  CHECK_THROWS_AS(train_lssvm(k, y, 0.0), ArgumentError);
  k.values = Eigen::MatrixXd::Ones(2, 2);
  CHECK_THROWS_AS(train_lssvm(k, y, 0.0), SingularError);
  CHECK_THROWS_AS(train_lssvm(k, y, -1.0), ArgumentError);
}

TEST_CASE("LS-SVM solution matches an independent solve") {
  std::mt19937_64 rng(8);
  std::bernoulli_distribution coin(0.5);
  for (int trial = 0; trial < 30; ++trial) {
    const Eigen::MatrixXd x = random_points(15, 2, rng);
    std::vector<int> y(15);
    for (int& v : y) v = coin(rng) ? 1 : -1;
    y[0] = 1;
    y[1] = -1;
    const KernelMatrix k = gram_exact(x, kQuantum);
    const LSSVMModel m = train_lssvm(k, y, 1e-3);
    Eigen::VectorXd y_vec(15);
    for (int i = 0; i < 15; ++i) y_vec(i) = y[static_cast<std::size_t>(i)];
    const Eigen::VectorXd want = oracle::lssvm(k.values, y_vec, 1e-3);
    CHECK(std::abs(m.b - want(0)) < 1e-9);
    CHECK((m.a - want.tail(15)).cwiseAbs().maxCoeff() < 1e-9 * std::max(1.0, want.cwiseAbs().maxCoeff()));

    // Residual of the bordered system.
    const Eigen::VectorXd r = k.values * m.a + Eigen::VectorXd::Constant(15, m.b) + 1e-3 * m.a - y_vec;
    CHECK(r.norm() <= 1e-8 * y_vec.norm());
    CHECK(std::abs(m.a.sum()) <= 1e-8 * y_vec.norm());

    // The same Gram handed over as a "classical" kernel yields the same model.
    KernelMatrix classical;
    classical.values = k.values;
    const LSSVMModel c = train_lssvm(classical, y, 1e-3);
    CHECK(std::abs(c.b - m.b) <= 1e-9);
    CHECK((c.a - m.a).cwiseAbs().maxCoeff() <= 1e-9);
  }
}

TEST_CASE("classify examples") {
  Eigen::MatrixXd x(2, 2);
  x << 1, 0, -1, 0;
  const std::vector<int> y = {1, -1};
  const LSSVMModel m = train_lssvm(x, y, kLinear, 0.0);
  const std::vector<double> pos = {0.5, 0.0}, neg = {-0.5, 0.0}, tie = {0.0, 1.0};
  CHECK(classify(m, pos) == 1);
  CHECK(classify(m, neg) == -1);
  CHECK(classify(m, tie) == 1);
  const std::vector<double> row_pos = {0.5, -0.5};
  CHECK(decision_value(m, row_pos) == doctest::Approx(0.5));
  CHECK(sign_label(0.0) == 1);
  CHECK(sign_label(-1e-300) == -1);
}

TEST_CASE("multiclass examples") {
  const std::vector<double> dominant = {2.0, -1.0, -1.0}, tie = {1.0, 1.0, -1.0};
  CHECK(argmax_class(dominant) == 0);
  CHECK(argmax_class(tie) == 0);

  // Three separable blobs in the plane.
  std::mt19937_64 rng(10);
  std::normal_distribution<double> noise(0.0, 0.05);
  const double centers[3][2] = {{-0.7, -0.7}, {0.7, -0.7}, {0.0, 0.7}};
  Eigen::MatrixXd x(30, 2);
  std::vector<int> labels(30);
  for (int i = 0; i < 30; ++i) {
    labels[static_cast<std::size_t>(i)] = i % 3;
    x(i, 0) = centers[i % 3][0] + noise(rng);
    x(i, 1) = centers[i % 3][1] + noise(rng);
  }
  const KernelMatrix k = gram_exact(x, kQuantum);
  const std::vector<LSSVMModel> models = train_one_vs_rest(k, labels, 3, 1e-3);
  REQUIRE(models.size() == 3);
  int correct = 0;
  for (int i = 0; i < 30; ++i) {
    std::vector<double> kr(30);
    for (int j = 0; j < 30; ++j) kr[static_cast<std::size_t>(j)] = k.values(i, j);
    correct += multiclass_classify(models, kr) == labels[static_cast<std::size_t>(i)];
  }
  CHECK(correct == 30);
}

TEST_CASE("separable toy data is reproduced with the exact kernel") {
  // Two clusters on either side of x0 + x1 = 0. The 2-qubit overlap kernel
  // has rank at most 16, so 20 points cannot be interpolated exactly; the
  // clusters keep every point well away from the boundary instead.
  std::mt19937_64 rng(11);
  std::normal_distribution<double> noise(0.0, 0.15);
  for (int trial = 0; trial < 10; ++trial) {
    Eigen::MatrixXd x(20, 2);
    std::vector<int> y(20);
    for (int i = 0; i < 20; ++i) {
      const int label = i % 2 ? 1 : -1;
      x(i, 0) = std::clamp(0.5 * label + noise(rng), -1.0, 1.0);
      x(i, 1) = std::clamp(0.5 * label + noise(rng), -1.0, 1.0);
      y[static_cast<std::size_t>(i)] = label;
    }
    for (const FeatureMap& map : {kQuantum, kLinear}) {
      const LSSVMModel m = train_lssvm(x, y, map, 1e-3);
      int correct = 0;
      for (int i = 0; i < 20; ++i) correct += classify(m, row_of(x, i)) == y[static_cast<std::size_t>(i)];
      INFO("map ", feature_map_name(map.kind), " trial ", trial);
      CHECK(correct == 20);
    }
  }
}

TEST_CASE("model serialization") {
  Eigen::MatrixXd x(2, 2);
  x << 1, 0, -1, 0;
  const std::vector<int> y = {1, -1};
  const std::string j = to_json(train_lssvm(x, y, kLinear, 0.5));
  for (const char* key : {"\"gamma\":2", "\"b\"", "\"a\"", "\"train_x\"", "\"train_y\"", "\"map\""}) {
    CHECK(j.find(key) != std::string::npos);
  }
  CHECK(to_json(two_point_model(0.0)).find("\"gamma\":null") != std::string::npos);
  KernelMatrix k;
  k.values = (Eigen::MatrixXd(2, 2) << 1, 0.5, 0.5, 1).finished();
  CHECK(kernel_to_csv(k) == "1,0.5\n0.5,1\n");
}
