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
 * Dataset loading, stratified splitting and the standardize / PCA / min-max
 * preprocessing pipeline.
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace qlin {

struct Dataset {
  std::string name;
  Eigen::MatrixXd features;               ///< rows are samples
  std::vector<int> labels;                ///< 0 .. n_classes-1
  std::vector<std::string> feature_names;
  std::vector<std::string> class_names;   ///< index is the label
  std::size_t rejected_rows = 0;          ///< rows dropped for missing values

  std::size_t rows() const noexcept { return labels.size(); }
  int n_classes() const noexcept { return static_cast<int>(class_names.size()); }
};

struct CsvSchema {
  std::string name;
  std::string label_column = "label";
  /// Known classes in label order. Empty means "in order of first appearance".
  std::vector<std::string> class_names;
  std::optional<std::size_t> expected_rows;
  std::optional<std::size_t> expected_features;
};

CsvSchema iris_schema();
/// benign = 0 is the positive class.
CsvSchema breast_cancer_schema();

/// Header row required. Throws IOError, FormatError (with line number),
/// LabelError for labels outside the schema.
Dataset load_csv(const std::filesystem::path& path, const CsvSchema& schema);

/// Rows of `d` at `indices`, in that order.
Dataset subset(const Dataset& d, const std::vector<std::size_t>& indices);

struct Split {
  Dataset train;
  Dataset test;
};

/// Stratified split with train share `train_fraction` per class (largest
/// remainder rounding). Throws ArgumentError, StratifyError.
Split split(const Dataset& d, double train_fraction, std::uint64_t seed);

/// Stratified split with exactly `n_train` training rows; `n_test` caps the
/// test side (stratified as well), 0 keeps every remaining row.
Split split_counts(const Dataset& d, std::size_t n_train, std::size_t n_test,
                   std::uint64_t seed);

enum class PreprocessOrder { StandardizeThenPca, PcaThenStandardize };

struct PreprocessPipeline {
  PreprocessOrder order = PreprocessOrder::StandardizeThenPca;
  std::vector<std::size_t> kept_features;  ///< input columns with nonzero variance
  Eigen::VectorXd means;                   ///< per kept feature (or per component)
  Eigen::VectorXd stds;
  Eigen::VectorXd pca_means;               ///< centering before projection
  Eigen::MatrixXd components;              ///< kept x k, orthonormal columns
  Eigen::VectorXd explained_variance;
  Eigen::VectorXd explained_ratio;
  Eigen::VectorXd mins;                    ///< per output dimension
  Eigen::VectorXd maxs;
  std::vector<std::string> warnings;
};

struct FitResult {
  PreprocessPipeline pipeline;
  Eigen::MatrixXd transformed;
};

/// Throws DimensionError (k > kept features, k < 1) and ArgumentError (< 2 rows).
FitResult fit_transform(const Eigen::MatrixXd& train, int k,
                        PreprocessOrder order = PreprocessOrder::StandardizeThenPca);

/// Applies a fitted pipeline; outputs are clamped to [-1, 1].
Eigen::MatrixXd transform(const PreprocessPipeline& p, const Eigen::MatrixXd& features);

/// Projection onto the principal axes without the min-max stage, and its
/// inverse. Used to audit reconstruction.
Eigen::MatrixXd project(const PreprocessPipeline& p, const Eigen::MatrixXd& features);
Eigen::MatrixXd back_project(const PreprocessPipeline& p, const Eigen::MatrixXd& scores);

/// Transformed features with a trailing label column.
std::string to_csv(const Eigen::MatrixXd& features, const std::vector<int>& labels);

}  // namespace qlin
