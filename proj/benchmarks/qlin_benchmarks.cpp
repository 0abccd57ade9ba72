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

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "qlin/hhl.hpp"
#include "qlin/qsvm.hpp"
#include "qlin/synthesis.hpp"

namespace {

qlin::Matrix random_unitary(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n(0.0, 1.0);
  qlin::Matrix z(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) z(i, j) = {n(rng), n(rng)};
  Eigen::HouseholderQR<qlin::Matrix> qr(z);
  return qr.householderQ();
}

void BM_ApplyTwoQubitMatrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::vector<qlin::Complex> amps(std::size_t{1} << n);
  amps[0] = 1.0;
  const qlin::Matrix u = random_unitary(4, 1);
  const std::vector<int> targets = {0, n - 1};
  for (auto _ : state) {
    qlin::kernels::apply_matrix(amps, u, targets);
    benchmark::DoNotOptimize(amps.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(amps.size()));
}
BENCHMARK(BM_ApplyTwoQubitMatrix)->DenseRange(4, 16, 4);

void BM_DecomposeUnitary(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  qlin::Circuit c(n);
  std::vector<int> qubits(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) qubits[static_cast<std::size_t>(q)] = q;
  c.add(qlin::gates::generic_unitary(qlin::UnitaryMatrix::from_matrix(random_unitary(1 << n, 2)),
                                     qubits));
  for (auto _ : state) benchmark::DoNotOptimize(qlin::decompose(c).size());
}
BENCHMARK(BM_DecomposeUnitary)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

void BM_RunHHL(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const qlin::HermitianMatrix a = qlin::random_sparse_hermitian({0.8, dim, 3});
  qlin::HHLConfig cfg;
  cfg.b.assign(static_cast<std::size_t>(dim), 1.0);
  cfg.shots = 1000;
  for (auto _ : state) benchmark::DoNotOptimize(qlin::run_hhl(a, cfg).fidelity);
}
BENCHMARK(BM_RunHHL)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_SampledGram(benchmark::State& state) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Eigen::MatrixXd x(69, 2);
  for (Eigen::Index i = 0; i < x.rows(); ++i) x.row(i) << u(rng), u(rng);
  const qlin::FeatureStates states(x, qlin::FeatureMap{});
  const auto shots = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qlin::gram_sampled(states, shots, 7).values.data());
}
BENCHMARK(BM_SampledGram)->RangeMultiplier(8)->Range(1, 1024)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
