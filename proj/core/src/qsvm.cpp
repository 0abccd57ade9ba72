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

#include "qlin/qsvm.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qlin/error.hpp"
#include "qlin/linalg.hpp"
#include "qlin/random.hpp"
#include "serialize.hpp"

namespace qlin {

namespace {

constexpr double kPi = std::numbers::pi;

void check_features(std::span<const double> x, const FeatureMap& map) {
  if (map.n_features < 1) throw ArgumentError("feature map needs at least one feature");
  if (x.size() != static_cast<std::size_t>(map.n_features)) {
    throw DimensionError("input has " + std::to_string(x.size()) + " features, map expects " +
                         std::to_string(map.n_features));
  }
}

std::span<const double> row_span(const Eigen::MatrixXd& m, Eigen::Index r,
                                 std::vector<double>& buf) {
  buf.resize(static_cast<std::size_t>(m.cols()));
  for (Eigen::Index c = 0; c < m.cols(); ++c) buf[static_cast<std::size_t>(c)] = m(r, c);
  return buf;
}

double overlap_probability(const StateVector& a, const StateVector& b) {
  return std::norm(inner_product(a, b));
}

}  // namespace

std::string_view feature_map_name(FeatureMapKind kind) {
  return kind == FeatureMapKind::Linear ? "linear" : "second_order";
}

Circuit feature_map_circuit(std::span<const double> x, const FeatureMap& map) {
  check_features(x, map);
  if (map.kind != FeatureMapKind::SecondOrder) {
    throw ArgumentError("the linear kernel has no circuit");
  }
  if (map.reps < 1) throw ArgumentError("feature map reps must be >= 1");
  const int n = map.n_features;
  Circuit c(n);
  for (int rep = 0; rep < map.reps; ++rep) {
    for (int q = 0; q < n; ++q) c.add(gates::h(q));
    for (int q = 0; q < n; ++q) c.add(gates::phase(q, 2.0 * x[static_cast<std::size_t>(q)]));
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const double angle = 2.0 * (kPi - x[static_cast<std::size_t>(i)]) *
                             (kPi - x[static_cast<std::size_t>(j)]);
        c.add(gates::cnot(i, j));
        c.add(gates::phase(j, angle));
        c.add(gates::cnot(i, j));
      }
    }
  }
  return c;
}

StateVector feature_map_state(std::span<const double> x, const FeatureMap& map) {
  const Circuit c = feature_map_circuit(x, map);
  return simulate(c, StateVector::basis(c.width()));
}

double kernel_exact(std::span<const double> x, std::span<const double> z,
                    const FeatureMap& map) {
  check_features(x, map);
  check_features(z, map);
  if (map.kind == FeatureMapKind::Linear) {
    double dot = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) dot += x[i] * z[i];
    return dot;
  }
  return overlap_probability(feature_map_state(x, map), feature_map_state(z, map));
}

double kernel_sampled(std::span<const double> x, std::span<const double> z,
                      const FeatureMap& map, std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw ArgumentError("shots must be >= 1");
  Circuit c = feature_map_circuit(x, map);
  c.append(inverse(feature_map_circuit(z, map)));
  const StateVector out = simulate(c, StateVector::basis(c.width()));
  const Histogram h = sample(out, shots, seed);
  const auto it = h.find(0);
  const std::uint64_t zeros = it == h.end() ? 0 : it->second;
  return static_cast<double>(zeros) / static_cast<double>(shots);
}

double estimate_probability(double p, std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw ArgumentError("shots must be >= 1");
  Rng rng(seed);
  std::uint64_t hits = 0;
  for (std::uint64_t s = 0; s < shots; ++s) {
    if (rng.uniform() < p) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(shots);
}

std::uint64_t pair_seed(std::uint64_t seed, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return hash64({seed, 0x6b65726eULL, i, j});
}

std::uint64_t cross_seed(std::uint64_t seed, std::size_t query, std::size_t train) {
  return hash64({seed, 0x63726f73ULL, query, train});
}

FeatureStates::FeatureStates(const Eigen::MatrixXd& rows, const FeatureMap& map) : map_(map) {
  if (map.kind != FeatureMapKind::SecondOrder) {
    throw ArgumentError("feature states need the second-order map");
  }
  std::vector<double> buf;
  states_.reserve(static_cast<std::size_t>(rows.rows()));
  for (Eigen::Index r = 0; r < rows.rows(); ++r) {
    states_.push_back(feature_map_state(row_span(rows, r, buf), map));
  }
}

KernelMatrix gram_exact(const Eigen::MatrixXd& x, const FeatureMap& map) {
  const Eigen::Index m = x.rows();
  KernelMatrix k;
  k.values.resize(m, m);
  if (map.kind == FeatureMapKind::Linear) {
    if (x.cols() != map.n_features) throw DimensionError("input width differs from the map");
    k.values = x * x.transpose();
    return k;
  }
  const FeatureStates states(x, map);
  for (Eigen::Index i = 0; i < m; ++i) {
    k.values(i, i) = 1.0;
    for (Eigen::Index j = i + 1; j < m; ++j) {
      const double v = overlap_probability(states.state(static_cast<std::size_t>(i)),
                                           states.state(static_cast<std::size_t>(j)));
      k.values(i, j) = v;
      k.values(j, i) = v;
    }
  }
  return k;
}

KernelMatrix gram_sampled(const FeatureStates& train, std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw ArgumentError("shots must be >= 1");
  const std::size_t m = train.size();
  KernelMatrix k;
  k.provenance = KernelMatrix::Provenance::Sampled;
  k.shots = shots;
  k.seed = seed;
  k.values.resize(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i; j < m; ++j) {
      const double p = overlap_probability(train.state(i), train.state(j));
      const double v = std::clamp(estimate_probability(p, shots, pair_seed(seed, i, j)), 0.0, 1.0);
      k.values(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
      k.values(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = v;
    }
  }
  return k;
}

Eigen::MatrixXd cross_kernel_exact(const Eigen::MatrixXd& queries, const Eigen::MatrixXd& train,
                                   const FeatureMap& map) {
  if (map.kind == FeatureMapKind::Linear) {
    if (queries.cols() != map.n_features || train.cols() != map.n_features) {
      throw DimensionError("input width differs from the map");
    }
    return queries * train.transpose();
  }
  const FeatureStates q(queries, map);
  const FeatureStates t(train, map);
  Eigen::MatrixXd out(queries.rows(), train.rows());
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = 0; j < t.size(); ++j) {
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          overlap_probability(q.state(i), t.state(j));
    }
  }
  return out;
}

Eigen::MatrixXd cross_kernel_sampled(const FeatureStates& queries, const FeatureStates& train,
                                     std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw ArgumentError("shots must be >= 1");
  Eigen::MatrixXd out(static_cast<Eigen::Index>(queries.size()),
                      static_cast<Eigen::Index>(train.size()));
  for (std::size_t i = 0; i < queries.size(); ++i) {
    for (std::size_t j = 0; j < train.size(); ++j) {
      const double p = overlap_probability(queries.state(i), train.state(j));
      out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          std::clamp(estimate_probability(p, shots, cross_seed(seed, i, j)), 0.0, 1.0);
    }
  }
  return out;
}

LSSVMModel train_lssvm(const KernelMatrix& k, std::span<const int> y, double gamma_inv) {
  const Eigen::Index m = k.values.rows();
  if (m < 2) throw ArgumentError("LS-SVM needs at least two training points");
  if (k.values.cols() != m || static_cast<std::size_t>(m) != y.size()) {
    throw ArgumentError("kernel and label sizes disagree");
  }
  if (!(gamma_inv >= 0.0) || !std::isfinite(gamma_inv)) {
    throw ArgumentError("gamma^-1 must be finite and >= 0");
  }
  for (int label : y) {
    if (label != 1 && label != -1) throw ArgumentError("labels must be +1 or -1");
  }
  const double scale = std::max(1.0, k.values.cwiseAbs().maxCoeff());
  if ((k.values - k.values.transpose()).cwiseAbs().maxCoeff() > 1e-9 * scale) {
    throw ArgumentError("kernel matrix is not symmetric");
  }

  Eigen::MatrixXd f = Eigen::MatrixXd::Zero(m + 1, m + 1);
  f.block(0, 1, 1, m).setOnes();
  f.block(1, 0, m, 1).setOnes();
  f.block(1, 1, m, m) = k.values;
  f.block(1, 1, m, m).diagonal().array() += gamma_inv;
  Eigen::VectorXd rhs(m + 1);
  rhs(0) = 0.0;
  for (Eigen::Index i = 0; i < m; ++i) rhs(i + 1) = y[static_cast<std::size_t>(i)];

  const Eigen::VectorXd sol = solve_pivoted(f, rhs);
  LSSVMModel model;
  model.gamma_inv = gamma_inv;
  model.b = sol(0);
  model.a = sol.tail(m);
  model.train_y.assign(y.begin(), y.end());
  return model;
}

LSSVMModel train_lssvm(const Eigen::MatrixXd& x, std::span<const int> y, const FeatureMap& map,
                       double gamma_inv) {
  LSSVMModel model = train_lssvm(gram_exact(x, map), y, gamma_inv);
  model.train_x = x;
  model.map = map;
  return model;
}

double decision_value(const LSSVMModel& model, std::span<const double> kernel_row) {
  if (kernel_row.size() != static_cast<std::size_t>(model.a.size())) {
    throw DimensionError("kernel row length differs from the training set");
  }
  double v = model.b;
  for (std::size_t j = 0; j < kernel_row.size(); ++j) {
    v += model.a(static_cast<Eigen::Index>(j)) * kernel_row[j];
  }
  return v;
}

int sign_label(double decision) { return decision < 0.0 ? -1 : 1; }

int classify(const LSSVMModel& model, std::span<const double> x) {
  if (model.train_x.rows() != model.a.size()) {
    throw ArgumentError("model does not carry its training inputs");
  }
  std::vector<double> row(static_cast<std::size_t>(model.train_x.rows()));
  std::vector<double> buf;
  for (Eigen::Index j = 0; j < model.train_x.rows(); ++j) {
    row[static_cast<std::size_t>(j)] = kernel_exact(x, row_span(model.train_x, j, buf), model.map);
  }
  return sign_label(decision_value(model, row));
}

int argmax_class(std::span<const double> decision_values) {
  if (decision_values.empty()) throw ArgumentError("no decision values");
  std::size_t best = 0;
  for (std::size_t c = 1; c < decision_values.size(); ++c) {
    if (decision_values[c] > decision_values[best]) best = c;
  }
  return static_cast<int>(best);
}

std::vector<LSSVMModel> train_one_vs_rest(const KernelMatrix& k, std::span<const int> labels,
                                          int n_classes, double gamma_inv) {
  if (n_classes < 2) throw ArgumentError("need at least two classes");
  std::vector<LSSVMModel> models;
  models.reserve(static_cast<std::size_t>(n_classes));
  std::vector<int> y(labels.size());
  for (int c = 0; c < n_classes; ++c) {
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] < 0 || labels[i] >= n_classes) throw ArgumentError("label out of range");
      y[i] = labels[i] == c ? 1 : -1;
    }
    models.push_back(train_lssvm(k, y, gamma_inv));
  }
  return models;
}

int multiclass_classify(std::span<const LSSVMModel> models, std::span<const double> kernel_row) {
  std::vector<double> scores;
  scores.reserve(models.size());
  for (const LSSVMModel& m : models) scores.push_back(decision_value(m, kernel_row));
  return argmax_class(scores);
}

std::string to_json(const LSSVMModel& model) {
  nlohmann::json j;
  if (model.gamma_inv > 0.0) {
    j["gamma"] = 1.0 / model.gamma_inv;
  } else {
    j["gamma"] = nullptr;
  }
  j["gamma_inv"] = model.gamma_inv;
  j["b"] = model.b;
  j["a"] = std::vector<double>(model.a.data(), model.a.data() + model.a.size());
  nlohmann::json xs = nlohmann::json::array();
  for (Eigen::Index r = 0; r < model.train_x.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < model.train_x.cols(); ++c) row.push_back(model.train_x(r, c));
    xs.push_back(std::move(row));
  }
  j["train_x"] = std::move(xs);
  j["train_y"] = model.train_y;
  j["map"] = {{"kind", std::string(feature_map_name(model.map.kind))},
              {"n_features", model.map.n_features},
              {"reps", model.map.reps}};
  return j.dump();
}

std::string kernel_to_csv(const KernelMatrix& k) {
  std::ostringstream out;
  for (Eigen::Index i = 0; i < k.values.rows(); ++i) {
    for (Eigen::Index j = 0; j < k.values.cols(); ++j) {
      if (j) out << ',';
      out << detail::format_double(k.values(i, j));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace qlin
