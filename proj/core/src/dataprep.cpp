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

#include "qlin/dataprep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>

#include "qlin/error.hpp"
#include "qlin/random.hpp"
#include "qlin/spectral.hpp"
#include "serialize.hpp"

namespace qlin {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      out.push_back(trim(line.substr(start)));
      return out;
    }
    out.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
}

bool is_missing(std::string_view field) {
  return field.empty() || field == "NA" || field == "NaN" || field == "nan" || field == "?";
}

std::string line_error(std::size_t line, const std::string& what) {
  return "line " + std::to_string(line) + ": " + what;
}

// Largest-remainder allocation of `total` over groups of the given sizes.
std::vector<std::size_t> allocate(const std::vector<std::size_t>& sizes, std::size_t total) {
  const std::size_t n = std::accumulate(sizes.begin(), sizes.end(), std::size_t{0});
  std::vector<std::size_t> out(sizes.size());
  std::vector<std::pair<double, std::size_t>> remainders;
  std::size_t assigned = 0;
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    const double exact = static_cast<double>(total) * static_cast<double>(sizes[c]) /
                         static_cast<double>(n);
    out[c] = static_cast<std::size_t>(std::floor(exact));
    assigned += out[c];
    remainders.emplace_back(exact - static_cast<double>(out[c]), c);
  }
  std::stable_sort(remainders.begin(), remainders.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  for (std::size_t i = 0; assigned < total && i < remainders.size(); ++i, ++assigned) {
    ++out[remainders[i].second];
  }
  return out;
}

std::vector<std::vector<std::size_t>> shuffled_by_class(const Dataset& d, std::uint64_t seed) {
  std::vector<std::vector<std::size_t>> groups(static_cast<std::size_t>(d.n_classes()));
  for (std::size_t i = 0; i < d.rows(); ++i) {
    groups[static_cast<std::size_t>(d.labels[i])].push_back(i);
  }
  for (std::size_t c = 0; c < groups.size(); ++c) {
    if (groups[c].size() < 2) {
      throw StratifyError("class '" + d.class_names[c] + "' has fewer than 2 rows");
    }
    Rng rng(hash64({seed, 0x73706c6974ULL, c}));
    auto& g = groups[c];
    for (std::size_t i = g.size() - 1; i > 0; --i) {
      std::swap(g[i], g[rng.below(i + 1)]);
    }
  }
  return groups;
}

Split assemble(const Dataset& d, const std::vector<std::vector<std::size_t>>& groups,
               const std::vector<std::size_t>& n_train, const std::vector<std::size_t>& n_test) {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
  for (std::size_t c = 0; c < groups.size(); ++c) {
    const auto& g = groups[c];
    train.insert(train.end(), g.begin(), g.begin() + static_cast<std::ptrdiff_t>(n_train[c]));
    test.insert(test.end(), g.begin() + static_cast<std::ptrdiff_t>(n_train[c]),
                g.begin() + static_cast<std::ptrdiff_t>(n_train[c] + n_test[c]));
  }
  std::sort(train.begin(), train.end());
  std::sort(test.begin(), test.end());
  Split s{subset(d, train), subset(d, test)};
  s.train.name = d.name + "/train";
  s.test.name = d.name + "/test";
  return s;
}

Eigen::MatrixXd select_columns(const Eigen::MatrixXd& m, const std::vector<std::size_t>& cols) {
  Eigen::MatrixXd out(m.rows(), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    out.col(static_cast<Eigen::Index>(j)) = m.col(static_cast<Eigen::Index>(cols[j]));
  }
  return out;
}

struct Pca {
  Eigen::MatrixXd components;
  Eigen::VectorXd variance;
  Eigen::VectorXd ratio;
};

// Top-k principal axes of already centered rows.
Pca principal_axes(const Eigen::MatrixXd& centered, int k) {
  const double m = static_cast<double>(centered.rows());
  const Eigen::MatrixXd cov = centered.transpose() * centered / m;
  const SpectralDecomposition d =
      eigendecompose(HermitianMatrix::from_matrix(cov.cast<Complex>(), 1e-9));
  const Eigen::Index n = cov.rows();
  Pca p;
  p.components.resize(n, k);
  p.variance.resize(k);
  p.ratio.resize(k);
  const double total = std::max(cov.trace(), 0.0);
  for (int i = 0; i < k; ++i) {
    const Eigen::Index src = n - 1 - i;  // ascending order from the solver
    p.components.col(i) = d.eigenvectors.col(src).real();
    p.components.col(i).normalize();
    p.variance(i) = std::max(d.eigenvalues(src), 0.0);
    p.ratio(i) = total > 0.0 ? p.variance(i) / total : 0.0;
  }
  return p;
}

Eigen::MatrixXd scores_of(const PreprocessPipeline& p, const Eigen::MatrixXd& features) {
  const Eigen::MatrixXd x = select_columns(features, p.kept_features);
  if (p.order == PreprocessOrder::StandardizeThenPca) {
    Eigen::MatrixXd z = (x.rowwise() - p.means.transpose()).array().rowwise() /
                        p.stds.transpose().array();
    return (z.rowwise() - p.pca_means.transpose()) * p.components;
  }
  Eigen::MatrixXd s = (x.rowwise() - p.pca_means.transpose()) * p.components;
  return (s.rowwise() - p.means.transpose()).array().rowwise() / p.stds.transpose().array();
}

}  // namespace

CsvSchema iris_schema() {
  CsvSchema s;
  s.name = "iris";
  s.class_names = {"setosa", "versicolor", "virginica"};
  s.expected_rows = 150;
  s.expected_features = 4;
  return s;
}

CsvSchema breast_cancer_schema() {
  CsvSchema s;
  s.name = "bcancer";
  s.class_names = {"benign", "malignant"};
  s.expected_rows = 569;
  s.expected_features = 30;
  return s;
}

Dataset load_csv(const std::filesystem::path& path, const CsvSchema& schema) {
  std::ifstream in(path);
  if (!in) throw IOError("cannot open " + path.string());

  std::string line;
  std::size_t line_no = 0;
  std::vector<std::string_view> header;
  std::string header_line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!trim(line).empty()) {
      header_line = line;
      header = split_fields(header_line);
      break;
    }
  }
  if (header.empty()) throw FormatError(path.string() + ": empty file");

  const auto label_it = std::find(header.begin(), header.end(), schema.label_column);
  if (label_it == header.end()) {
    throw FormatError(path.string() + ": no '" + schema.label_column + "' column");
  }
  const std::size_t label_col = static_cast<std::size_t>(label_it - header.begin());

  Dataset d;
  d.name = schema.name.empty() ? path.stem().string() : schema.name;
  d.class_names = schema.class_names;
  for (std::size_t j = 0; j < header.size(); ++j) {
    if (j != label_col) d.feature_names.emplace_back(header[j]);
  }
  const std::size_t n_features = d.feature_names.size();

  std::vector<double> values;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != header.size()) {
      throw FormatError(line_error(line_no, "expected " + std::to_string(header.size()) +
                                                " fields, found " +
                                                std::to_string(fields.size())));
    }
    if (std::any_of(fields.begin(), fields.end(), is_missing)) {
      ++d.rejected_rows;
      continue;
    }
    const std::string label(fields[label_col]);
    auto cls = std::find(d.class_names.begin(), d.class_names.end(), label);
    if (cls == d.class_names.end()) {
      if (!schema.class_names.empty()) {
        throw LabelError(line_error(line_no, "unknown label '" + label + "'"));
      }
      d.class_names.push_back(label);
      cls = d.class_names.end() - 1;
    }
    for (std::size_t j = 0; j < fields.size(); ++j) {
      if (j == label_col) continue;
      double v = 0.0;
      const std::string_view f = fields[j];
      const char* first = f.data() + (f.front() == '+' ? 1 : 0);
      const auto [ptr, ec] = std::from_chars(first, f.data() + f.size(), v);
      if (ec != std::errc() || ptr != f.data() + f.size() || !std::isfinite(v)) {
        throw FormatError(line_error(line_no, "cannot parse '" + std::string(f) + "'"));
      }
      values.push_back(v);
    }
    d.labels.push_back(static_cast<int>(cls - d.class_names.begin()));
  }

  const std::size_t rows = d.labels.size();
  if (rows == 0) throw FormatError(path.string() + ": no data rows");
  if (schema.expected_features && *schema.expected_features != n_features) {
    throw FormatError(path.string() + ": expected " +
                      std::to_string(*schema.expected_features) + " features, found " +
                      std::to_string(n_features));
  }
  if (schema.expected_rows && *schema.expected_rows != rows) {
    throw FormatError(path.string() + ": expected " + std::to_string(*schema.expected_rows) +
                      " rows, found " + std::to_string(rows));
  }
  d.features.resize(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(n_features));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < n_features; ++j) {
      d.features(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          values[i * n_features + j];
    }
  }
  return d;
}

Dataset subset(const Dataset& d, const std::vector<std::size_t>& indices) {
  Dataset out;
  out.name = d.name;
  out.feature_names = d.feature_names;
  out.class_names = d.class_names;
  out.features.resize(static_cast<Eigen::Index>(indices.size()), d.features.cols());
  out.labels.reserve(indices.size());
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= d.rows()) throw ArgumentError("row index out of range");
    out.features.row(static_cast<Eigen::Index>(i)) =
        d.features.row(static_cast<Eigen::Index>(indices[i]));
    out.labels.push_back(d.labels[indices[i]]);
  }
  return out;
}

Split split(const Dataset& d, double train_fraction, std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw ArgumentError("train fraction must lie in (0, 1)");
  }
  const auto n_train = static_cast<std::size_t>(
      std::llround(train_fraction * static_cast<double>(d.rows())));
  return split_counts(d, n_train, 0, seed);
}

Split split_counts(const Dataset& d, std::size_t n_train, std::size_t n_test,
                   std::uint64_t seed) {
  if (n_train == 0 || n_train >= d.rows()) {
    throw ArgumentError("training size must lie in [1, rows)");
  }
  const auto groups = shuffled_by_class(d, seed);
  std::vector<std::size_t> sizes;
  for (const auto& g : groups) sizes.push_back(g.size());
  std::vector<std::size_t> train = allocate(sizes, n_train);
  for (std::size_t c = 0; c < sizes.size(); ++c) {
    train[c] = std::clamp<std::size_t>(train[c], 1, sizes[c] - 1);
  }
  std::vector<std::size_t> rest(sizes.size());
  for (std::size_t c = 0; c < sizes.size(); ++c) rest[c] = sizes[c] - train[c];
  const std::size_t n_rest = std::accumulate(rest.begin(), rest.end(), std::size_t{0});
  std::vector<std::size_t> test = rest;
  if (n_test != 0) {
    if (n_test > n_rest) throw ArgumentError("test size exceeds the remaining rows");
    test = allocate(rest, n_test);
  }
  return assemble(d, groups, train, test);
}

FitResult fit_transform(const Eigen::MatrixXd& train, int k, PreprocessOrder order) {
  if (train.rows() < 2) throw ArgumentError("need at least two training rows");
  if (k < 1) throw DimensionError("k must be >= 1");

  PreprocessPipeline p;
  p.order = order;
  const Eigen::VectorXd mean = train.colwise().mean();
  const Eigen::VectorXd stdev =
      ((train.rowwise() - mean.transpose()).array().square().colwise().mean()).sqrt();
  for (Eigen::Index j = 0; j < train.cols(); ++j) {
    if (stdev(j) > 1e-12 * std::max(1.0, std::abs(mean(j)))) {
      p.kept_features.push_back(static_cast<std::size_t>(j));
    } else {
      p.warnings.push_back("feature " + std::to_string(j) + " has zero variance; dropped");
    }
  }
  if (static_cast<std::size_t>(k) > p.kept_features.size()) {
    throw DimensionError("k = " + std::to_string(k) + " exceeds " +
                         std::to_string(p.kept_features.size()) + " usable features");
  }
  const Eigen::MatrixXd x = select_columns(train, p.kept_features);
  const Eigen::Index n = x.cols();

  if (order == PreprocessOrder::StandardizeThenPca) {
    p.means.resize(n);
    p.stds.resize(n);
    for (Eigen::Index j = 0; j < n; ++j) {
      const auto src = static_cast<Eigen::Index>(p.kept_features[static_cast<std::size_t>(j)]);
      p.means(j) = mean(src);
      p.stds(j) = stdev(src);
    }
    const Eigen::MatrixXd z =
        (x.rowwise() - p.means.transpose()).array().rowwise() / p.stds.transpose().array();
    p.pca_means = z.colwise().mean();
    Pca pca = principal_axes(z.rowwise() - p.pca_means.transpose(), k);
    p.components = std::move(pca.components);
    p.explained_variance = std::move(pca.variance);
    p.explained_ratio = std::move(pca.ratio);
  } else {
    p.pca_means = x.colwise().mean();
    Pca pca = principal_axes(x.rowwise() - p.pca_means.transpose(), k);
    p.components = std::move(pca.components);
    p.explained_variance = std::move(pca.variance);
    p.explained_ratio = std::move(pca.ratio);
    const Eigen::MatrixXd s = (x.rowwise() - p.pca_means.transpose()) * p.components;
    p.means = s.colwise().mean();
    p.stds = ((s.rowwise() - p.means.transpose()).array().square().colwise().mean()).sqrt();
    for (Eigen::Index j = 0; j < p.stds.size(); ++j) {
      if (!(p.stds(j) > 0.0)) {
        p.stds(j) = 1.0;
        p.warnings.push_back("component " + std::to_string(j) + " has zero variance");
      }
    }
  }

  const Eigen::MatrixXd s = scores_of(p, train);
  p.mins = s.colwise().minCoeff();
  p.maxs = s.colwise().maxCoeff();
  for (Eigen::Index j = 0; j < s.cols(); ++j) {
    if (!(p.maxs(j) > p.mins(j))) {
      p.warnings.push_back("output " + std::to_string(j) + " is constant on the training set");
    }
  }
  FitResult r{std::move(p), Eigen::MatrixXd()};
  r.transformed = transform(r.pipeline, train);
  return r;
}

Eigen::MatrixXd project(const PreprocessPipeline& p, const Eigen::MatrixXd& features) {
  for (std::size_t j : p.kept_features) {
    if (static_cast<Eigen::Index>(j) >= features.cols()) {
      throw DimensionError("input has fewer columns than the fitted data");
    }
  }
  return scores_of(p, features);
}

Eigen::MatrixXd back_project(const PreprocessPipeline& p, const Eigen::MatrixXd& scores) {
  if (scores.cols() != p.components.cols()) throw DimensionError("score width mismatch");
  if (p.order == PreprocessOrder::StandardizeThenPca) {
    const Eigen::MatrixXd z =
        (scores * p.components.transpose()).rowwise() + p.pca_means.transpose();
    return (z.array().rowwise() * p.stds.transpose().array()).rowwise() +
           p.means.transpose().array();
  }
  const Eigen::MatrixXd s =
      (scores.array().rowwise() * p.stds.transpose().array()).rowwise() +
      p.means.transpose().array();
  return (s * p.components.transpose()).rowwise() + p.pca_means.transpose();
}

Eigen::MatrixXd transform(const PreprocessPipeline& p, const Eigen::MatrixXd& features) {
  Eigen::MatrixXd s = project(p, features);
  for (Eigen::Index j = 0; j < s.cols(); ++j) {
    const double lo = p.mins(j);
    const double span = p.maxs(j) - lo;
    for (Eigen::Index i = 0; i < s.rows(); ++i) {
      const double v = span > 0.0 ? 2.0 * (s(i, j) - lo) / span - 1.0 : 0.0;
      s(i, j) = std::clamp(v, -1.0, 1.0);
    }
  }
  return s;
}

std::string to_csv(const Eigen::MatrixXd& features, const std::vector<int>& labels) {
  if (static_cast<std::size_t>(features.rows()) != labels.size()) {
    throw DimensionError("feature and label counts differ");
  }
  std::ostringstream out;
  for (Eigen::Index j = 0; j < features.cols(); ++j) out << 'x' << j << ',';
  out << "label\n";
  for (Eigen::Index i = 0; i < features.rows(); ++i) {
    for (Eigen::Index j = 0; j < features.cols(); ++j) {
      out << detail::format_double(features(i, j)) << ',';
    }
    out << labels[static_cast<std::size_t>(i)] << '\n';
  }
  return out.str();
}

}  // namespace qlin
