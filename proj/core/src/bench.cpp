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

#include "qlin/bench.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "qlin/error.hpp"
#include "qlin/qsvm.hpp"
#include "qlin/random.hpp"
#include "qlin/spectral.hpp"
#include "serialize.hpp"

#ifndef QLIN_VERSION
#define QLIN_VERSION "0.0.0"
#endif

namespace qlin {

namespace {

using detail::format_double;
using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

double median(std::vector<double> v) {
  if (v.empty()) return std::nan("");
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

double mean(const std::vector<double>& v) {
  if (v.empty()) return std::nan("");
  double s = 0.0;
  for (double x : v) s += x;
  return s / static_cast<double>(v.size());
}

std::vector<std::string_view> split_commas(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? text.size() : comma;
    std::string_view item = text.substr(start, end - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) throw ConfigError("empty item in list '" + std::string(text) + "'");
    out.push_back(item);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view s) {
  T v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ConfigError("cannot parse number '" + std::string(s) + "'");
  }
  return v;
}

// Runs fn(i) for i in [0, n) on up to `threads` workers.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(n, static_cast<std::size_t>(std::max(1, threads)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) fn(i);
    });
  }
  for (std::thread& t : pool) t.join();
}

std::vector<Complex> uniform_rhs(int dim) {
  return std::vector<Complex>(static_cast<std::size_t>(dim), Complex(1.0, 0.0));
}

void run_hhl_cell(HHLCell& cell, const ExperimentConfig& cfg) {
  const auto start = Clock::now();
  try {
    const HermitianMatrix m = hhl_cell_matrix(cell);
    HHLConfig hc;
    hc.n_clock = cfg.n_clock;
    hc.t0 = cfg.t0;
    hc.C = cfg.C;
    hc.shots = cfg.hhl_shots;
    hc.mode = cfg.mode;
    hc.estimate = cfg.estimate;
    hc.b = uniform_rhs(cell.dim);
    hc.seed = cell.seed;
    cell.report = run_hhl(m, hc);
  } catch (const Error& e) {
    cell.error_kind = e.kind();
    cell.error_message = e.what();
  }
  cell.seconds = seconds_since(start);
}

std::string join_counts(const std::vector<std::uint64_t>& counts) {
  std::string out;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) out += ';';
    out += std::to_string(counts[i]);
  }
  return out;
}

// Predictions from decision rows; binary problems use class 0 as +1.
std::vector<int> predict(const std::vector<LSSVMModel>& models, const Eigen::MatrixXd& kq,
                         int n_classes) {
  std::vector<int> out(static_cast<std::size_t>(kq.rows()));
  std::vector<double> row(static_cast<std::size_t>(kq.cols()));
  for (Eigen::Index i = 0; i < kq.rows(); ++i) {
    for (Eigen::Index j = 0; j < kq.cols(); ++j) row[static_cast<std::size_t>(j)] = kq(i, j);
    out[static_cast<std::size_t>(i)] =
        n_classes == 2 ? (sign_label(decision_value(models[0], row)) > 0 ? 0 : 1)
                       : multiclass_classify(models, row);
  }
  return out;
}

std::vector<LSSVMModel> train_models(const KernelMatrix& k, const std::vector<int>& labels,
                                     int n_classes, double gamma_inv) {
  if (n_classes == 2) {
    std::vector<int> y(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) y[i] = labels[i] == 0 ? 1 : -1;
    return {train_lssvm(k, y, gamma_inv)};
  }
  return train_one_vs_rest(k, labels, n_classes, gamma_inv);
}

void score(QSVMRow& row, const std::vector<int>& truth, const std::vector<int>& predicted) {
  const MulticlassConfusion cm(truth, predicted, row.n_classes);
  row.confusion = cm.counts();
  row.metrics = row.n_classes == 2 ? compute_metrics(confusion(truth, predicted, 0))
                                   : macro_metrics(cm);
}

struct QsvmJob {
  std::string dataset;
  int seed_index = 0;
  std::vector<QSVMRow> rows;
};

void run_qsvm_job(QsvmJob& job, const Dataset& data, const ExperimentConfig& cfg,
                  bool final_rows, bool shot_rows) {
  const std::uint64_t split_seed =
      cell_seed(cfg.master_seed, "split", hash64(job.dataset),
                0.0, static_cast<std::uint64_t>(job.seed_index), 0);
  const Split split = dataset_split(data, job.dataset, split_seed);
  const FitResult fit = fit_transform(split.train.features, 2, cfg.preprocess_order);
  const Eigen::MatrixXd& x_train = fit.transformed;
  const Eigen::MatrixXd x_test = transform(fit.pipeline, split.test.features);
  const int n_classes = data.n_classes();

  auto base_row = [&](std::string suite, std::string classifier, std::string kernel,
                      std::uint64_t shots) {
    QSVMRow r;
    r.suite = std::move(suite);
    r.dataset = job.dataset;
    r.classifier = std::move(classifier);
    r.kernel = std::move(kernel);
    r.shots = shots;
    r.seed_index = job.seed_index;
    r.split_seed = split_seed;
    r.seed = cell_seed(cfg.master_seed, r.suite + "/" + r.kernel, hash64(job.dataset), 0.0,
                       static_cast<std::uint64_t>(job.seed_index), shots);
    r.n_train = split.train.rows();
    r.n_test = split.test.rows();
    r.n_classes = n_classes;
    return r;
  };
  auto evaluate = [&](QSVMRow& r, const std::function<void()>& body) {
    const auto start = Clock::now();
    try {
      body();
    } catch (const Error& e) {
      r.error_kind = e.kind();
      r.error_message = e.what();
    }
    r.seconds = seconds_since(start);
    job.rows.push_back(std::move(r));
  };

  const FeatureMap quantum{FeatureMapKind::SecondOrder, 2, cfg.reps};
  if (final_rows) {
    const FeatureMap linear{FeatureMapKind::Linear, 2, 1};
    for (const auto& [classifier, map] :
         {std::pair{"svm", linear}, std::pair{"qsvm", quantum}}) {
      QSVMRow r = base_row(kSuiteQsvmFinal, classifier,
                           map.kind == FeatureMapKind::Linear ? "linear" : "exact", 0);
      evaluate(r, [&] {
        const auto models =
            train_models(gram_exact(x_train, map), split.train.labels, n_classes, cfg.gamma_inv);
        score(r, split.test.labels,
              predict(models, cross_kernel_exact(x_test, x_train, map), n_classes));
      });
    }
  }
  if (shot_rows) {
    const FeatureStates train_states(x_train, quantum);
    const FeatureStates test_states(x_test, quantum);
    for (std::uint64_t shots : cfg.shots_list) {
      QSVMRow r = base_row(kSuiteQsvmShots, "qsvm", "sampled", shots);
      evaluate(r, [&] {
        const auto models = train_models(gram_sampled(train_states, shots, r.seed),
                                         split.train.labels, n_classes, cfg.gamma_inv);
        score(r, split.test.labels,
              predict(models, cross_kernel_sampled(test_states, train_states, shots, r.seed),
                      n_classes));
      });
    }
  }
}

std::vector<HHLGroupSummary> summarize(const std::vector<HHLCell>& rows) {
  std::vector<HHLGroupSummary> out;
  std::map<std::tuple<std::string, std::string, int, double>, std::size_t> index;
  std::vector<std::vector<const HHLCell*>> groups;
  for (const HHLCell& c : rows) {
    const auto key = std::make_tuple(c.suite, c.matrix, c.dim, c.target_density);
    auto [it, inserted] = index.emplace(key, groups.size());
    if (inserted) {
      groups.emplace_back();
      HHLGroupSummary s;
      s.suite = c.suite;
      s.matrix = c.matrix;
      s.dim = c.dim;
      s.target_density = c.target_density;
      out.push_back(s);
    }
    groups[it->second].push_back(&c);
  }
  for (std::size_t g = 0; g < groups.size(); ++g) {
    std::vector<double> success, fidelity, depth, width;
    for (const HHLCell* c : groups[g]) {
      ++out[g].rows;
      if (!c->report) {
        ++out[g].errors;
        continue;
      }
      success.push_back(c->report->success_probability);
      fidelity.push_back(c->report->fidelity);
      depth.push_back(c->report->depth_basis);
      width.push_back(c->report->width);
    }
    out[g].median_success = median(success);
    out[g].median_fidelity = median(fidelity);
    out[g].median_depth_basis = median(depth);
    out[g].median_width = median(width);
  }
  return out;
}

std::vector<QSVMDatasetSummary> summarize(const std::vector<QSVMRow>& rows,
                                          const ExperimentConfig& cfg) {
  std::vector<QSVMDatasetSummary> out;
  for (const std::string& name : cfg.datasets) {
    QSVMDatasetSummary s;
    s.dataset = name;
    std::map<int, double> baseline;
    std::vector<double> exact;
    std::map<std::uint64_t, std::map<int, double>> sampled;
    for (const QSVMRow& r : rows) {
      if (r.dataset != name || !r.metrics) continue;
      if (r.kernel == "linear") baseline[r.seed_index] = r.metrics->accuracy;
      else if (r.kernel == "exact") exact.push_back(r.metrics->accuracy);
      else sampled[r.shots][r.seed_index] = r.metrics->accuracy;
    }
    std::vector<double> base_values;
    for (const auto& [seed, acc] : baseline) base_values.push_back(acc);
    s.median_baseline_accuracy = median(base_values);
    s.median_exact_accuracy = median(exact);
    double best_mean = -1.0;
    for (std::uint64_t shots : cfg.shots_list) {
      const auto it = sampled.find(shots);
      if (it == sampled.end()) continue;
      std::vector<double> acc;
      for (const auto& [seed, a] : it->second) acc.push_back(a);
      ShotsSummary ss{shots, static_cast<int>(acc.size()), mean(acc), median(acc)};
      if (ss.mean_accuracy > best_mean) {
        best_mean = ss.mean_accuracy;
        s.best_shots = shots;
      }
      s.shots.push_back(ss);
    }
    std::vector<double> gaps;
    if (s.best_shots != 0) {
      for (const auto& [seed, a] : sampled[s.best_shots]) {
        const auto b = baseline.find(seed);
        if (b != baseline.end()) gaps.push_back(b->second - a);
      }
    }
    s.median_gap = median(gaps);
    out.push_back(std::move(s));
  }
  return out;
}

json metrics_json(const std::optional<ClassificationMetrics>& m) {
  if (!m) return nullptr;
  auto opt = [](const std::optional<double>& v) -> json {
    return v ? json(*v) : json("undefined");
  };
  return {{"accuracy", m->accuracy},
          {"sensitivity", opt(m->sensitivity)},
          {"specificity", opt(m->specificity)},
          {"f1", opt(m->f1)}};
}

json null_if_nan(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IOError("cannot open " + path.string() + " for writing");
  out << content;
  out.close();
  if (!out) throw IOError("failed writing " + path.string());
}

}  // namespace

std::string_view library_version() noexcept { return QLIN_VERSION; }

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  for (std::string_view item : split_commas(text)) out.push_back(parse_number<int>(item));
  return out;
}

std::vector<std::uint64_t> parse_u64_list(std::string_view text) {
  std::vector<std::uint64_t> out;
  for (std::string_view item : split_commas(text)) {
    out.push_back(parse_number<std::uint64_t>(item));
  }
  return out;
}

std::vector<double> parse_real_list(std::string_view text) {
  auto round9 = [](double x) { return std::round(x * 1e9) / 1e9; };
  if (text.find(':') != std::string_view::npos) {
    std::vector<double> parts;
    std::size_t start = 0;
    while (true) {
      const std::size_t colon = text.find(':', start);
      parts.push_back(parse_number<double>(text.substr(start, colon - start)));
      if (colon == std::string_view::npos) break;
      start = colon + 1;
    }
    if (parts.size() != 3) throw ConfigError("range must be start:stop:step");
    const double lo = parts[0], hi = parts[1], step = parts[2];
    if (!(step > 0.0) || hi < lo) throw ConfigError("range needs step > 0 and stop >= start");
    std::vector<double> out;
    for (int i = 0;; ++i) {
      const double v = round9(lo + i * step);
      if (v > hi + 1e-9) break;
      out.push_back(v);
    }
    return out;
  }
  std::vector<double> out;
  for (std::string_view item : split_commas(text)) out.push_back(parse_number<double>(item));
  return out;
}

ExperimentConfig apply_config_json(ExperimentConfig cfg, std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");

  auto reals = [](const json& v) {
    if (v.is_string()) return parse_real_list(v.get<std::string>());
    return v.get<std::vector<double>>();
  };
  try {
    for (const auto& [key, v] : j.items()) {
      if (key == "suites") cfg.suites = v.get<std::vector<std::string>>();
      else if (key == "seed") cfg.master_seed = v.get<std::uint64_t>();
      else if (key == "out") cfg.out_dir = v.get<std::string>();
      else if (key == "threads") cfg.threads = v.get<int>();
      else if (key == "dims") cfg.dims = v.is_string() ? parse_int_list(v.get<std::string>())
                                                       : v.get<std::vector<int>>();
      else if (key == "densities") cfg.densities = reals(v);
      else if (key == "trials") cfg.trials = v.get<int>();
      else if (key == "clock") cfg.n_clock = v.get<int>();
      else if (key == "mode") cfg.mode = parse_mode(v.get<std::string>());
      else if (key == "estimate") {
        const std::string e = v.get<std::string>();
        if (e == "exact") cfg.estimate = SpectrumEstimate::Exact;
        else if (e == "gershgorin") cfg.estimate = SpectrumEstimate::Gershgorin;
        else throw ConfigError("unknown estimate '" + e + "'");
      }
      else if (key == "hhl_shots") cfg.hhl_shots = v.get<std::uint64_t>();
      else if (key == "t0") cfg.t0 = v.get<double>();
      else if (key == "C") cfg.C = v.get<double>();
      else if (key == "dataset") cfg.datasets = {v.get<std::string>()};
      else if (key == "datasets") cfg.datasets = v.get<std::vector<std::string>>();
      else if (key == "shots") cfg.shots_list = v.is_string()
                                                    ? parse_u64_list(v.get<std::string>())
                                                    : v.get<std::vector<std::uint64_t>>();
      else if (key == "seeds") cfg.seeds = v.get<int>();
      else if (key == "gamma_inv") cfg.gamma_inv = v.get<double>();
      else if (key == "reps") cfg.reps = v.get<int>();
      else if (key == "preprocess_order") {
        const std::string o = v.get<std::string>();
        if (o == "standardize-pca") cfg.preprocess_order = PreprocessOrder::StandardizeThenPca;
        else if (o == "pca-standardize") cfg.preprocess_order = PreprocessOrder::PcaThenStandardize;
        else throw ConfigError("unknown preprocess_order '" + o + "'");
      }
      else if (key == "data_dir") cfg.data_dir = v.get<std::string>();
      else throw ConfigError("unknown config key '" + key + "'");
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("bad config value: ") + e.what());
  } catch (const ArgumentError& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

ExperimentConfig load_config(const std::filesystem::path& path, ExperimentConfig base) {
  std::ifstream in(path);
  if (!in) throw IOError("cannot open config " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return apply_config_json(std::move(base), buf.str());
}

std::string config_to_json(const ExperimentConfig& cfg) {
  json j;
  j["suites"] = cfg.suites;
  j["seed"] = cfg.master_seed;
  j["out"] = cfg.out_dir.string();
  j["threads"] = cfg.threads;
  j["dims"] = cfg.dims;
  j["densities"] = cfg.densities;
  j["trials"] = cfg.trials;
  j["clock"] = cfg.n_clock;
  j["mode"] = std::string(mode_name(cfg.mode));
  j["estimate"] = cfg.estimate == SpectrumEstimate::Exact ? "exact" : "gershgorin";
  j["hhl_shots"] = cfg.hhl_shots;
  if (cfg.t0) j["t0"] = *cfg.t0;
  if (cfg.C) j["C"] = *cfg.C;
  j["datasets"] = cfg.datasets;
  j["shots"] = cfg.shots_list;
  j["seeds"] = cfg.seeds;
  j["gamma_inv"] = cfg.gamma_inv;
  j["reps"] = cfg.reps;
  j["preprocess_order"] = cfg.preprocess_order == PreprocessOrder::StandardizeThenPca
                              ? "standardize-pca"
                              : "pca-standardize";
  j["data_dir"] = cfg.data_dir.string();
  return j.dump(2);
}

void validate(const ExperimentConfig& cfg) {
  static const std::vector<std::string> known = {kSuiteHhlDiag, kSuiteHhlDensity,
                                                 kSuiteQsvmShots, kSuiteQsvmFinal};
  for (const std::string& s : cfg.suites) {
    if (std::find(known.begin(), known.end(), s) == known.end()) {
      throw ConfigError("unknown suite '" + s + "'");
    }
  }
  for (int d : cfg.dims) {
    if (d < 2 || (d & (d - 1)) != 0) throw ConfigError("dims must be powers of two >= 2");
  }
  for (double d : cfg.densities) {
    if (!(d >= 0.0 && d <= 1.0)) throw ConfigError("densities must lie in [0, 1]");
  }
  if (cfg.trials < 1) throw ConfigError("trials must be >= 1");
  if (cfg.n_clock < 1 || cfg.n_clock > 12) throw ConfigError("clock must lie in [1, 12]");
  if (cfg.hhl_shots < 1) throw ConfigError("hhl_shots must be >= 1");
  if (cfg.seeds < 1) throw ConfigError("seeds must be >= 1");
  if (cfg.reps < 1) throw ConfigError("reps must be >= 1");
  if (!(cfg.gamma_inv >= 0.0) || !std::isfinite(cfg.gamma_inv)) {
    throw ConfigError("gamma_inv must be finite and >= 0");
  }
  for (std::uint64_t s : cfg.shots_list) {
    if (s < 1) throw ConfigError("shots must be >= 1");
  }
  for (const std::string& d : cfg.datasets) {
    if (d != "iris" && d != "bcancer" && d != "bcancer198") {
      throw ConfigError("unknown dataset '" + d + "'");
    }
  }
}

int resolve_threads(int requested) {
  int n = requested > 0 ? requested
                        : static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
  if (const char* env = std::getenv("QLINBENCH_THREADS"); env && *env) {
    int cap = 0;
    const std::string_view s(env);
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), cap);
    if (ec != std::errc() || ptr != s.data() + s.size() || cap < 1) {
      throw ConfigError("QLINBENCH_THREADS must be a positive integer");
    }
    n = std::min(n, cap);
  }
  return n;
}

std::uint64_t cell_seed(std::uint64_t master, std::string_view suite, std::uint64_t dim,
                        double density, std::uint64_t trial, std::uint64_t shots) {
  const auto d = static_cast<std::uint64_t>(std::llround(density * 1e6));
  return hash64({master, hash64(suite), dim, d, trial, shots});
}

HermitianMatrix hhl_cell_matrix(const HHLCell& cell) {
  if (cell.matrix == "diagonal") return random_diagonal(cell.dim, cell.matrix_seed);
  if (cell.matrix == "nondiagonal") return random_coupled(cell.dim, cell.matrix_seed);
  return random_sparse_hermitian({cell.target_density, cell.dim, cell.matrix_seed});
}

BenchReport run_hhl_suite(const ExperimentConfig& cfg) {
  validate(cfg);
  const auto start = Clock::now();
  BenchReport report;
  report.kind = "hhl";
  report.config = cfg;
  const bool all = cfg.suites.empty();
  auto wants = [&](const char* s) {
    return all || std::find(cfg.suites.begin(), cfg.suites.end(), s) != cfg.suites.end();
  };

  std::vector<HHLCell>& cells = report.hhl_rows;
  if (wants(kSuiteHhlDiag)) {
    for (int dim : cfg.dims) {
      for (const char* kind : {"diagonal", "nondiagonal"}) {
        for (int trial = 0; trial < cfg.trials; ++trial) {
          HHLCell c;
          c.suite = kSuiteHhlDiag;
          c.matrix = kind;
          c.dim = dim;
          c.target_density = std::string_view(kind) == "diagonal" ? 1.0 / dim : 1.0;
          c.trial = trial;
          c.matrix_seed = cell_seed(cfg.master_seed, kSuiteHhlDiag, static_cast<std::uint64_t>(dim),
                                    0.0, static_cast<std::uint64_t>(trial), 0);
          c.seed = cell_seed(cfg.master_seed, std::string(kSuiteHhlDiag) + "/" + kind,
                             static_cast<std::uint64_t>(dim), c.target_density,
                             static_cast<std::uint64_t>(trial), cfg.hhl_shots);
          cells.push_back(std::move(c));
        }
      }
    }
  }
  if (wants(kSuiteHhlDensity)) {
    for (int dim : cfg.dims) {
      for (double density : cfg.densities) {
        for (int trial = 0; trial < cfg.trials; ++trial) {
          HHLCell c;
          c.suite = kSuiteHhlDensity;
          c.matrix = "random";
          c.dim = dim;
          c.target_density = density;
          c.trial = trial;
          c.seed = cell_seed(cfg.master_seed, kSuiteHhlDensity, static_cast<std::uint64_t>(dim),
                             density, static_cast<std::uint64_t>(trial), cfg.hhl_shots);
          c.matrix_seed = c.seed;
          cells.push_back(std::move(c));
        }
      }
    }
  }
  parallel_for(cells.size(), resolve_threads(cfg.threads),
               [&](std::size_t i) { run_hhl_cell(cells[i], cfg); });
  report.hhl_summary = summarize(cells);
  report.seconds = seconds_since(start);
  return report;
}

Dataset load_bundled(const std::filesystem::path& data_dir, std::string_view name) {
  if (name == "iris") return load_csv(data_dir / "iris.csv", iris_schema());
  if (name == "bcancer" || name == "bcancer198") {
    Dataset d = load_csv(data_dir / "breast_cancer.csv", breast_cancer_schema());
    d.name = std::string(name);
    return d;
  }
  throw ConfigError("unknown dataset '" + std::string(name) + "'");
}

Split dataset_split(const Dataset& d, std::string_view name, std::uint64_t seed) {
  if (name == "iris") return split(d, 0.8, seed);
  if (name == "bcancer") return split_counts(d, 69, 500, seed);
  if (name == "bcancer198") return split_counts(d, 69, 198, seed);
  throw ConfigError("unknown dataset '" + std::string(name) + "'");
}

BenchReport run_qsvm_suite(const ExperimentConfig& cfg) {
  validate(cfg);
  const auto start = Clock::now();
  BenchReport report;
  report.kind = "qsvm";
  report.config = cfg;
  const bool all = cfg.suites.empty();
  auto wants = [&](const char* s) {
    return all || std::find(cfg.suites.begin(), cfg.suites.end(), s) != cfg.suites.end();
  };
  const bool final_rows = wants(kSuiteQsvmFinal);
  const bool shot_rows = wants(kSuiteQsvmShots);

  std::map<std::string, Dataset> data;
  for (const std::string& name : cfg.datasets) {
    if (!data.count(name)) data.emplace(name, load_bundled(cfg.data_dir, name));
  }
  std::vector<QsvmJob> jobs;
  for (const std::string& name : cfg.datasets) {
    for (int s = 0; s < cfg.seeds; ++s) jobs.push_back({name, s, {}});
  }
  parallel_for(jobs.size(), resolve_threads(cfg.threads), [&](std::size_t i) {
    run_qsvm_job(jobs[i], data.at(jobs[i].dataset), cfg, final_rows, shot_rows);
  });

  // Grid order: dataset, suite (final before shots), seed, shots.
  for (const std::string& name : cfg.datasets) {
    for (const char* suite : {kSuiteQsvmFinal, kSuiteQsvmShots}) {
      for (const QsvmJob& job : jobs) {
        if (job.dataset != name) continue;
        for (const QSVMRow& r : job.rows) {
          if (r.suite == suite) report.qsvm_rows.push_back(r);
        }
      }
    }
  }
  report.qsvm_summary = summarize(report.qsvm_rows, cfg);
  report.seconds = seconds_since(start);
  return report;
}

std::vector<std::string> csv_columns(const BenchReport& r) {
  if (r.kind == "hhl") {
    std::vector<std::string> cols = {"suite", "matrix", "target_density", "trial",
                                     "matrix_seed", "status", "error"};
    for (const std::string& c : hhl_csv_columns()) cols.push_back(c);
    return cols;
  }
  return {"suite",     "dataset",  "classifier",  "kernel",      "shots", "seed_index",
          "split_seed", "seed",    "n_train",     "n_test",      "gamma_inv", "status",
          "error",     "accuracy", "sensitivity", "specificity", "f1",    "confusion"};
}

std::string to_csv(const BenchReport& r) {
  std::ostringstream out;
  const auto cols = csv_columns(r);
  for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
  out << '\n';
  auto emit = [&](const std::vector<std::string>& fields) {
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i];
    out << '\n';
  };
  if (r.kind == "hhl") {
    const std::size_t n_report = hhl_csv_columns().size();
    for (const HHLCell& c : r.hhl_rows) {
      std::vector<std::string> f = {c.suite,
                                    c.matrix,
                                    format_double(c.target_density),
                                    std::to_string(c.trial),
                                    std::to_string(c.matrix_seed),
                                    c.report ? "ok" : "error",
                                    c.error_kind};
      if (c.report) {
        for (std::string& v : hhl_csv_row(*c.report)) f.push_back(std::move(v));
      } else {
        std::vector<std::string> blank(n_report);
        blank.front() = std::to_string(c.dim);
        blank.back() = std::to_string(c.seed);
        for (std::string& v : blank) f.push_back(std::move(v));
      }
      emit(f);
    }
    return out.str();
  }
  for (const QSVMRow& q : r.qsvm_rows) {
    std::vector<std::string> f = {q.suite,
                                  q.dataset,
                                  q.classifier,
                                  q.kernel,
                                  std::to_string(q.shots),
                                  std::to_string(q.seed_index),
                                  std::to_string(q.split_seed),
                                  std::to_string(q.seed),
                                  std::to_string(q.n_train),
                                  std::to_string(q.n_test),
                                  format_double(r.config.gamma_inv),
                                  q.metrics ? "ok" : "error",
                                  q.error_kind};
    if (q.metrics) {
      f.push_back(format_double(q.metrics->accuracy));
      f.push_back(format_metric(q.metrics->sensitivity));
      f.push_back(format_metric(q.metrics->specificity));
      f.push_back(format_metric(q.metrics->f1));
      f.push_back(join_counts(q.confusion));
    } else {
      f.insert(f.end(), 5, std::string());
    }
    emit(f);
  }
  return out.str();
}

std::string to_json(const BenchReport& r) {
  json j;
  j["kind"] = r.kind;
  j["config"] = json::parse(config_to_json(r.config));
  j["versions"] = {{"qlinbench", std::string(library_version())},
                   {"nlohmann_json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                                         std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                                         std::to_string(NLOHMANN_JSON_VERSION_PATCH)}};
  j["seconds"] = r.seconds;
  json rows = json::array();
  json summary = json::array();
  if (r.kind == "hhl") {
    for (const HHLCell& c : r.hhl_rows) {
      json row = {{"suite", c.suite},       {"matrix", c.matrix},
                  {"dim", c.dim},           {"target_density", c.target_density},
                  {"trial", c.trial},       {"matrix_seed", c.matrix_seed},
                  {"seed", c.seed},         {"seconds", c.seconds}};
      if (c.report) {
        row["status"] = "ok";
        row["report"] = json::parse(to_json(*c.report));
      } else {
        row["status"] = "error";
        row["error"] = {{"kind", c.error_kind}, {"message", c.error_message}};
      }
      rows.push_back(std::move(row));
    }
    for (const HHLGroupSummary& s : r.hhl_summary) {
      summary.push_back({{"suite", s.suite},
                         {"matrix", s.matrix},
                         {"dim", s.dim},
                         {"target_density", s.target_density},
                         {"rows", s.rows},
                         {"errors", s.errors},
                         {"median_success_probability", null_if_nan(s.median_success)},
                         {"median_fidelity", null_if_nan(s.median_fidelity)},
                         {"median_depth_basis", null_if_nan(s.median_depth_basis)},
                         {"median_width", null_if_nan(s.median_width)}});
    }
  } else {
    for (const QSVMRow& q : r.qsvm_rows) {
      json row = {{"suite", q.suite},           {"dataset", q.dataset},
                  {"classifier", q.classifier}, {"kernel", q.kernel},
                  {"shots", q.shots},           {"seed_index", q.seed_index},
                  {"split_seed", q.split_seed}, {"seed", q.seed},
                  {"n_train", q.n_train},       {"n_test", q.n_test},
                  {"n_classes", q.n_classes},   {"gamma_inv", r.config.gamma_inv},
                  {"seconds", q.seconds},       {"metrics", metrics_json(q.metrics)}};
      if (q.metrics) {
        row["status"] = "ok";
        json cm = json::array();
        for (int t = 0; t < q.n_classes; ++t) {
          json line = json::array();
          for (int p = 0; p < q.n_classes; ++p) {
            line.push_back(q.confusion[static_cast<std::size_t>(t * q.n_classes + p)]);
          }
          cm.push_back(std::move(line));
        }
        row["confusion_matrix"] = std::move(cm);
      } else {
        row["status"] = "error";
        row["error"] = {{"kind", q.error_kind}, {"message", q.error_message}};
      }
      rows.push_back(std::move(row));
    }
    for (const QSVMDatasetSummary& s : r.qsvm_summary) {
      json shots = json::array();
      for (const ShotsSummary& ss : s.shots) {
        shots.push_back({{"shots", ss.shots},
                         {"rows", ss.rows},
                         {"mean_accuracy", null_if_nan(ss.mean_accuracy)},
                         {"median_accuracy", null_if_nan(ss.median_accuracy)}});
      }
      summary.push_back({{"dataset", s.dataset},
                         {"median_baseline_accuracy", null_if_nan(s.median_baseline_accuracy)},
                         {"median_exact_accuracy", null_if_nan(s.median_exact_accuracy)},
                         {"best_shots", s.best_shots},
                         {"median_gap_at_best_shots", null_if_nan(s.median_gap)},
                         {"shots", std::move(shots)}});
    }
  }
  j["rows"] = std::move(rows);
  j["summary"] = std::move(summary);
  return j.dump(2);
}

std::vector<PlotSeries> plot_series(const BenchReport& r) {
  std::vector<PlotSeries> out;
  if (r.kind == "hhl") {
    for (const char* kind : {"diagonal", "nondiagonal"}) {
      PlotSeries s{std::string("success_probability_") + kind, "dim",
                   "median_success_probability", {}};
      for (const HHLGroupSummary& g : r.hhl_summary) {
        if (g.suite == kSuiteHhlDiag && g.matrix == kind) {
          s.points.emplace_back(g.dim, g.median_success);
        }
      }
      if (!s.points.empty()) out.push_back(std::move(s));
    }
    for (int dim : r.config.dims) {
      PlotSeries s{"fidelity_vs_density_dim" + std::to_string(dim), "density",
                   "median_fidelity", {}};
      for (const HHLGroupSummary& g : r.hhl_summary) {
        if (g.suite == kSuiteHhlDensity && g.dim == dim) {
          s.points.emplace_back(g.target_density, g.median_fidelity);
        }
      }
      if (!s.points.empty()) out.push_back(std::move(s));
    }
    return out;
  }
  for (const QSVMDatasetSummary& d : r.qsvm_summary) {
    PlotSeries s{"accuracy_vs_shots_" + d.dataset, "shots", "mean_accuracy", {}};
    for (const ShotsSummary& ss : d.shots) {
      s.points.emplace_back(static_cast<double>(ss.shots), ss.mean_accuracy);
    }
    if (!s.points.empty()) out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::filesystem::path> emit_reports(const BenchReport& r,
                                                const std::filesystem::path& dir,
                                                ReportFormats formats) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IOError("cannot create " + dir.string() + ": " + ec.message());
  std::vector<std::filesystem::path> written;
  if (formats.csv) {
    written.push_back(dir / (r.kind + ".csv"));
    write_file(written.back(), to_csv(r));
  }
  if (formats.json) {
    written.push_back(dir / (r.kind + ".json"));
    write_file(written.back(), to_json(r) + "\n");
  }
  if (formats.plot) {
    for (const PlotSeries& s : plot_series(r)) {
      std::ostringstream out;
      out << "# " << s.x_label << ' ' << s.y_label << '\n';
      for (const auto& [x, y] : s.points) {
        out << format_double(x) << ' ' << format_double(y) << '\n';
      }
      written.push_back(dir / (s.name + ".dat"));
      write_file(written.back(), out.str());
    }
  }
  return written;
}

}  // namespace qlin
