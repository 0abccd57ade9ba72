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
 * Kernel LS-SVM classification with classical (linear) and quantum
 * (second-order feature map overlap) kernels.
 */

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qlin/circuit.hpp"

namespace qlin {

enum class FeatureMapKind { Linear, SecondOrder };

std::string_view feature_map_name(FeatureMapKind kind);

struct FeatureMap {
  FeatureMapKind kind = FeatureMapKind::SecondOrder;
  int n_features = 2;
  int reps = 2;
};

/// Per repetition: H on every qubit, Phase(2 x_i) on qubit i, then for each
/// pair i < j the entangler CNOT(i,j) Phase(2 (pi - x_i)(pi - x_j)) on j,
/// CNOT(i,j). Inputs are used as given (expected in [-1, 1]).
Circuit feature_map_circuit(std::span<const double> x, const FeatureMap& map);

/// feature_map_circuit applied to |0...0>. Throws DimensionError.
StateVector feature_map_state(std::span<const double> x, const FeatureMap& map);

/// Linear map: x . z. Second-order map: |<phi(x)|phi(z)>|^2.
double kernel_exact(std::span<const double> x, std::span<const double> z,
                    const FeatureMap& map);

/// Compute-uncompute estimate: run map(x) then map(z)^dagger, sample `shots`
/// outcomes and return the frequency of |0...0>. Second-order map only.
/// Throws ArgumentError for shots = 0.
double kernel_sampled(std::span<const double> x, std::span<const double> z,
                      const FeatureMap& map, std::uint64_t shots, std::uint64_t seed);

/// Bernoulli estimate of a known probability with the same draw procedure as
/// sample(): a shot hits when its uniform variate falls below `p`.
double estimate_probability(double p, std::uint64_t shots, std::uint64_t seed);

struct KernelMatrix {
  enum class Provenance { Exact, Sampled };
  Eigen::MatrixXd values;
  Provenance provenance = Provenance::Exact;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;

  Eigen::Index dim() const noexcept { return values.rows(); }
};

/// Seed for the unordered training pair (i, j), or the query/train pair.
std::uint64_t pair_seed(std::uint64_t seed, std::size_t i, std::size_t j);
std::uint64_t cross_seed(std::uint64_t seed, std::size_t query, std::size_t train);

/// Precomputed feature states for a set of rows; evaluates exact and sampled
/// kernel matrices without re-simulating the map.
class FeatureStates {
 public:
  FeatureStates(const Eigen::MatrixXd& rows, const FeatureMap& map);

  const FeatureMap& map() const noexcept { return map_; }
  std::size_t size() const noexcept { return states_.size(); }
  const StateVector& state(std::size_t i) const { return states_[i]; }

 private:
  FeatureMap map_;
  std::vector<StateVector> states_;
};

/// Exact Gram matrix of the rows of `x`.
KernelMatrix gram_exact(const Eigen::MatrixXd& x, const FeatureMap& map);

/// Sampled Gram matrix: every unordered pair estimated once with its own
/// pair_seed, clipped to [0, 1] and mirrored.
KernelMatrix gram_sampled(const FeatureStates& train, std::uint64_t shots,
                          std::uint64_t seed);

/// query x train kernel values.
Eigen::MatrixXd cross_kernel_exact(const Eigen::MatrixXd& queries,
                                   const Eigen::MatrixXd& train, const FeatureMap& map);
Eigen::MatrixXd cross_kernel_sampled(const FeatureStates& queries,
                                     const FeatureStates& train, std::uint64_t shots,
                                     std::uint64_t seed);

struct LSSVMModel {
  double gamma_inv = 1e-3;
  double b = 0.0;
  Eigen::VectorXd a;
  std::vector<int> train_y;  ///< +1 / -1
  Eigen::MatrixXd train_x;   ///< empty when trained from a bare kernel
  FeatureMap map;
};

/// Solves [[0, 1^T], [1, K + gamma^-1 I]] [b; a] = [0; y].
/// Throws ArgumentError (M < 2, labels not +/-1, K not symmetric) and
/// SingularError.
LSSVMModel train_lssvm(const KernelMatrix& k, std::span<const int> y, double gamma_inv);

/// Trains on the exact kernel of `x` and keeps the inputs for classify().
LSSVMModel train_lssvm(const Eigen::MatrixXd& x, std::span<const int> y,
                       const FeatureMap& map, double gamma_inv);

/// sum_j a_j k_j + b for a row of kernel values against the training set.
double decision_value(const LSSVMModel& model, std::span<const double> kernel_row);

/// sign of the decision value; 0 maps to +1.
int sign_label(double decision);

/// Exact-kernel classification of a query (model must carry train_x).
int classify(const LSSVMModel& model, std::span<const double> x);

/// argmax, ties to the lowest index.
int argmax_class(std::span<const double> decision_values);

/// One binary model per class (class c -> +1, rest -> -1) on a shared Gram.
std::vector<LSSVMModel> train_one_vs_rest(const KernelMatrix& k, std::span<const int> labels,
                                          int n_classes, double gamma_inv);

/// Class index with the largest decision value for one kernel row.
int multiclass_classify(std::span<const LSSVMModel> models, std::span<const double> kernel_row);

/// {gamma, gamma_inv, b, a[], train_x[][], train_y[], map}
std::string to_json(const LSSVMModel& model);

/// Gram matrix as CSV (no header).
std::string kernel_to_csv(const KernelMatrix& k);

}  // namespace qlin
