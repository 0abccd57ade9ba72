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

// qlinbench: HHL and QSVM experiment runner.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qlin/bench.hpp"
#include "qlin/error.hpp"
#include "qlin/verify.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitIO = 3;

struct HhlFlags {
  std::string dims, densities, mode, suite = "all", estimate;
  int trials = 0, clock = 0;
  std::uint64_t seed = 0, shots = 0;
  double t0 = 0.0, C = 0.0;
  std::string out;
};

struct QsvmFlags {
  std::vector<std::string> datasets;
  std::string shots, suite = "all", order, data_dir;
  int seeds = 0, reps = 0;
  double gamma_inv = 0.0;
  std::uint64_t seed = 0;
  std::string out;
};

std::filesystem::path default_data_dir() {
  if (const char* env = std::getenv("QLINBENCH_DATA_DIR"); env && *env) return env;
#ifdef QLIN_DEFAULT_DATA_DIR
  return QLIN_DEFAULT_DATA_DIR;
#else
  return "data";
#endif
}

qlin::ExperimentConfig base_config(const std::string& config_path, int threads,
                                   bool threads_given) {
  qlin::ExperimentConfig cfg;
  cfg.data_dir = default_data_dir();
  if (!config_path.empty()) cfg = qlin::load_config(config_path, cfg);
  if (threads_given) cfg.threads = threads;
  return cfg;
}

std::vector<std::string> hhl_suites(const std::string& s) {
  if (s == "all") return {qlin::kSuiteHhlDiag, qlin::kSuiteHhlDensity};
  if (s == "diag") return {qlin::kSuiteHhlDiag};
  if (s == "density") return {qlin::kSuiteHhlDensity};
  throw qlin::ConfigError("--suite must be all, diag or density");
}

std::vector<std::string> qsvm_suites(const std::string& s) {
  if (s == "all") return {qlin::kSuiteQsvmFinal, qlin::kSuiteQsvmShots};
  if (s == "final") return {qlin::kSuiteQsvmFinal};
  if (s == "shots") return {qlin::kSuiteQsvmShots};
  throw qlin::ConfigError("--suite must be all, final or shots");
}

void print_summary(const qlin::BenchReport& r, const std::vector<std::filesystem::path>& files) {
  std::size_t errors = 0;
  for (const auto& c : r.hhl_rows) errors += c.report ? 0 : 1;
  for (const auto& q : r.qsvm_rows) errors += q.metrics ? 0 : 1;
  const std::size_t rows = r.hhl_rows.size() + r.qsvm_rows.size();
  std::cout << r.kind << ": " << rows << " rows (" << errors << " error rows) in "
            << r.seconds << " s\n";
  for (const auto& s : r.qsvm_summary) {
    std::cout << "  " << s.dataset << ": baseline " << s.median_baseline_accuracy
              << ", exact kernel " << s.median_exact_accuracy << ", best shots "
              << s.best_shots << "\n";
  }
  for (const auto& f : files) std::cout << "  wrote " << f.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qlinbench: HHL and quantum-kernel SVM benchmarks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(qlin::library_version()));

  std::string config_path;
  int threads = 0;
  app.add_option("--config", config_path, "JSON config; explicit flags override it")
      ->check(CLI::ExistingFile);
  auto* threads_opt = app.add_option("--threads", threads, "worker threads (capped by QLINBENCH_THREADS)")
                          ->check(CLI::PositiveNumber);

  HhlFlags h;
  auto* hhl = app.add_subcommand("hhl", "HHL suites: diagonal vs coupled, density sweep");
  hhl->add_option("--config", config_path, "JSON config")->check(CLI::ExistingFile);
  auto* h_dims = hhl->add_option("--dims", h.dims, "matrix sizes, e.g. 2,4,8");
  auto* h_dens = hhl->add_option("--densities", h.densities, "list or start:stop:step");
  auto* h_trials = hhl->add_option("--trials", h.trials, "matrices per cell")->check(CLI::PositiveNumber);
  auto* h_clock = hhl->add_option("--clock", h.clock, "clock qubits")->check(CLI::PositiveNumber);
  auto* h_mode = hhl->add_option("--mode", h.mode, "eigenvalue decoding")
                     ->check(CLI::IsMember({"signed", "unsigned", "twos-complement"}));
  auto* h_seed = hhl->add_option("--seed", h.seed, "master seed");
  auto* h_shots = hhl->add_option("--shots", h.shots, "shots for the sampled success rate");
  auto* h_t0 = hhl->add_option("--t0", h.t0, "evolution time scale");
  auto* h_C = hhl->add_option("--C", h.C, "inversion constant");
  auto* h_est = hhl->add_option("--estimate", h.estimate, "spectrum estimate for t0")
                    ->check(CLI::IsMember({"exact", "gershgorin"}));
  auto* h_suite = hhl->add_option("--suite", h.suite, "all, diag or density");
  auto* h_out = hhl->add_option("--out", h.out, "output directory");

  QsvmFlags q;
  auto* qsvm = app.add_subcommand("qsvm", "QSVM suites: baselines and shots sweep");
  qsvm->add_option("--config", config_path, "JSON config")->check(CLI::ExistingFile);
  auto* q_data = qsvm->add_option("--dataset", q.datasets, "iris, bcancer or bcancer198 (repeatable)")
                     ->delimiter(',')
                     ->check(CLI::IsMember({"iris", "bcancer", "bcancer198"}));
  auto* q_shots = qsvm->add_option("--shots", q.shots, "shot counts, e.g. 1,2,4,...,1024");
  auto* q_seeds = qsvm->add_option("--seeds", q.seeds, "seeds per dataset")->check(CLI::PositiveNumber);
  auto* q_gamma = qsvm->add_option("--gamma-inv", q.gamma_inv, "LS-SVM regularization 1/gamma");
  auto* q_seed = qsvm->add_option("--seed", q.seed, "master seed");
  auto* q_reps = qsvm->add_option("--reps", q.reps, "feature map repetitions")->check(CLI::PositiveNumber);
  auto* q_order = qsvm->add_option("--preprocess-order", q.order, "standardize-pca or pca-standardize")
                      ->check(CLI::IsMember({"standardize-pca", "pca-standardize"}));
  auto* q_dir = qsvm->add_option("--data-dir", q.data_dir, "directory with the bundled CSVs");
  auto* q_suite = qsvm->add_option("--suite", q.suite, "all, final or shots");
  auto* q_out = qsvm->add_option("--out", q.out, "output directory");

  auto* verify = app.add_subcommand("verify", "run the fixture checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      int failed = 0;
      for (const qlin::CheckResult& c : qlin::run_fixture_checks()) {
        std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  (" << c.detail << ")\n";
        failed += c.passed ? 0 : 1;
      }
      return failed == 0 ? 0 : 1;
    }

    qlin::ExperimentConfig cfg = base_config(config_path, threads, threads_opt->count() > 0);
    qlin::BenchReport report;
    if (hhl->parsed()) {
      if (h_suite->count() || cfg.suites.empty()) cfg.suites = hhl_suites(h.suite);
      if (h_dims->count()) cfg.dims = qlin::parse_int_list(h.dims);
      if (h_dens->count()) cfg.densities = qlin::parse_real_list(h.densities);
      if (h_trials->count()) cfg.trials = h.trials;
      if (h_clock->count()) cfg.n_clock = h.clock;
      if (h_mode->count()) cfg.mode = qlin::parse_mode(h.mode);
      if (h_seed->count()) cfg.master_seed = h.seed;
      if (h_shots->count()) cfg.hhl_shots = h.shots;
      if (h_t0->count()) cfg.t0 = h.t0;
      if (h_C->count()) cfg.C = h.C;
      if (h_est->count()) {
        cfg.estimate = h.estimate == "exact" ? qlin::SpectrumEstimate::Exact
                                             : qlin::SpectrumEstimate::Gershgorin;
      }
      if (h_out->count()) cfg.out_dir = h.out;
      report = qlin::run_hhl_suite(cfg);
    } else {
      if (q_suite->count() || cfg.suites.empty()) cfg.suites = qsvm_suites(q.suite);
      if (q_data->count()) cfg.datasets = q.datasets;
      if (q_shots->count()) cfg.shots_list = qlin::parse_u64_list(q.shots);
      if (q_seeds->count()) cfg.seeds = q.seeds;
      if (q_gamma->count()) cfg.gamma_inv = q.gamma_inv;
      if (q_seed->count()) cfg.master_seed = q.seed;
      if (q_reps->count()) cfg.reps = q.reps;
      if (q_order->count()) {
        cfg.preprocess_order = q.order == "standardize-pca"
                                   ? qlin::PreprocessOrder::StandardizeThenPca
                                   : qlin::PreprocessOrder::PcaThenStandardize;
      }
      if (q_dir->count()) cfg.data_dir = q.data_dir;
      if (q_out->count()) cfg.out_dir = q.out;
      report = qlin::run_qsvm_suite(cfg);
    }
    print_summary(report, qlin::emit_reports(report, cfg.out_dir));
    return 0;
  } catch (const qlin::IOError& e) {
    std::cerr << "qlinbench: " << e.what() << "\n";
    return kExitIO;
  } catch (const qlin::Error& e) {
    std::cerr << "qlinbench: " << e.kind() << ": " << e.what() << "\n";
    return kExitConfig;
  }
}
