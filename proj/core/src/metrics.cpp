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

#include "qlin/metrics.hpp"

#include "qlin/error.hpp"
#include "serialize.hpp"

namespace qlin {

namespace {

std::optional<double> ratio(std::uint64_t num, std::uint64_t den) {
  if (den == 0) return std::nullopt;
  return static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

ClassificationMetrics compute_metrics(const ConfusionMatrix& cm) {
  if (cm.total() == 0) throw EmptyError("confusion matrix is empty");
  ClassificationMetrics m;
  m.accuracy = static_cast<double>(cm.tp + cm.tn) / static_cast<double>(cm.total());
  m.sensitivity = ratio(cm.tp, cm.tp + cm.fn);
  m.specificity = ratio(cm.tn, cm.tn + cm.fp);
  m.f1 = ratio(2 * cm.tp, 2 * cm.tp + cm.fp + cm.fn);
  return m;
}

ConfusionMatrix confusion(std::span<const int> truth, std::span<const int> predicted,
                          int positive) {
  if (truth.size() != predicted.size()) {
    throw DimensionError("truth and prediction lengths differ");
  }
  ConfusionMatrix cm;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const bool t = truth[i] == positive;
    const bool p = predicted[i] == positive;
    if (t && p) ++cm.tp;
    else if (t) ++cm.fn;
    else if (p) ++cm.fp;
    else ++cm.tn;
  }
  return cm;
}

MulticlassConfusion::MulticlassConfusion(int n_classes) : n_(n_classes) {
  if (n_classes < 2) throw ArgumentError("need at least two classes");
  counts_.assign(static_cast<std::size_t>(n_ * n_), 0);
}

MulticlassConfusion::MulticlassConfusion(std::span<const int> truth,
                                         std::span<const int> predicted, int n_classes)
    : MulticlassConfusion(n_classes) {
  if (truth.size() != predicted.size()) {
    throw DimensionError("truth and prediction lengths differ");
  }
  for (std::size_t i = 0; i < truth.size(); ++i) add(truth[i], predicted[i]);
}

void MulticlassConfusion::add(int truth, int predicted) {
  if (truth < 0 || truth >= n_ || predicted < 0 || predicted >= n_) {
    throw ArgumentError("class index out of range");
  }
  ++counts_[static_cast<std::size_t>(truth * n_ + predicted)];
}

std::uint64_t MulticlassConfusion::at(int truth, int predicted) const {
  return counts_.at(static_cast<std::size_t>(truth * n_ + predicted));
}

std::uint64_t MulticlassConfusion::total() const noexcept {
  std::uint64_t s = 0;
  for (std::uint64_t c : counts_) s += c;
  return s;
}

ConfusionMatrix MulticlassConfusion::one_vs_rest(int c) const {
  ConfusionMatrix cm;
  for (int t = 0; t < n_; ++t) {
    for (int p = 0; p < n_; ++p) {
      const std::uint64_t v = at(t, p);
      if (t == c && p == c) cm.tp += v;
      else if (t == c) cm.fn += v;
      else if (p == c) cm.fp += v;
      else cm.tn += v;
    }
  }
  return cm;
}

double MulticlassConfusion::accuracy() const {
  const std::uint64_t n = total();
  if (n == 0) throw EmptyError("confusion matrix is empty");
  std::uint64_t diag = 0;
  for (int c = 0; c < n_; ++c) diag += at(c, c);
  return static_cast<double>(diag) / static_cast<double>(n);
}

ClassificationMetrics macro_metrics(const MulticlassConfusion& cm) {
  ClassificationMetrics out;
  out.accuracy = cm.accuracy();
  auto average = [&](auto field) -> std::optional<double> {
    double sum = 0.0;
    int count = 0;
    for (int c = 0; c < cm.n_classes(); ++c) {
      const std::optional<double> v = field(compute_metrics(cm.one_vs_rest(c)));
      if (v) {
        sum += *v;
        ++count;
      }
    }
    if (count == 0) return std::nullopt;
    return sum / count;
  };
  out.sensitivity = average([](const ClassificationMetrics& m) { return m.sensitivity; });
  out.specificity = average([](const ClassificationMetrics& m) { return m.specificity; });
  out.f1 = average([](const ClassificationMetrics& m) { return m.f1; });
  return out;
}

std::string format_metric(const std::optional<double>& v) {
  return v ? detail::format_double(*v) : std::string("undefined");
}

}  // namespace qlin
