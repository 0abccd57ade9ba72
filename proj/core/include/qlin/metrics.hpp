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

// Confusion matrices and the derived classification scores.

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qlin {

struct ConfusionMatrix {
  std::uint64_t tp = 0;
  std::uint64_t fn = 0;
  std::uint64_t fp = 0;
  std::uint64_t tn = 0;

  std::uint64_t total() const noexcept { return tp + fn + fp + tn; }
};

/// A score is empty when its denominator is zero.
struct ClassificationMetrics {
  double accuracy = 0.0;
  std::optional<double> sensitivity;
  std::optional<double> specificity;
  std::optional<double> f1;
};

/// Throws EmptyError when the matrix holds no samples.
ClassificationMetrics compute_metrics(const ConfusionMatrix& cm);

/// Binary confusion matrix with `positive` as the positive class.
ConfusionMatrix confusion(std::span<const int> truth, std::span<const int> predicted,
                          int positive);

/// Rows are true classes, columns predicted classes.
class MulticlassConfusion {
 public:
  explicit MulticlassConfusion(int n_classes);
  MulticlassConfusion(std::span<const int> truth, std::span<const int> predicted,
                      int n_classes);

  void add(int truth, int predicted);
  int n_classes() const noexcept { return n_; }
  std::uint64_t at(int truth, int predicted) const;
  std::uint64_t total() const noexcept;

  /// Class c against the rest.
  ConfusionMatrix one_vs_rest(int c) const;
  double accuracy() const;

  /// Row-major counts.
  const std::vector<std::uint64_t>& counts() const noexcept { return counts_; }

 private:
  int n_;
  std::vector<std::uint64_t> counts_;
};

/// Scores averaged over classes (one-vs-rest); undefined per-class scores
/// are left out of the mean, and the mean is empty if all are undefined.
ClassificationMetrics macro_metrics(const MulticlassConfusion& cm);

/// "undefined" for an empty score, otherwise the shortest round-trip form.
std::string format_metric(const std::optional<double>& v);

}  // namespace qlin
