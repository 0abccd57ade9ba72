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
 * Experiment grids for the HHL and QSVM suites and their CSV / JSON /
 * plot-data reports.
 *
 * Cells run on a bounded worker pool. Reports are assembled in grid order,
 * so the CSV output of a configuration is byte-identical across runs. Wall
 * clock times appear only in the JSON report.
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qlin/dataprep.hpp"
#include "qlin/hhl.hpp"
#include "qlin/metrics.hpp"

namespace qlin {

inline constexpr const char* kSuiteHhlDiag = "hhl-diag";
inline constexpr const char* kSuiteHhlDensity = "hhl-density";
inline constexpr const char* kSuiteQsvmShots = "qsvm-shots";
inline constexpr const char* kSuiteQsvmFinal = "qsvm-final";

std::string_view library_version() noexcept;

struct ExperimentConfig {
  std::vector<std::string> suites;
  std::uint64_t master_seed = 1;
  std::filesystem::path out_dir = "qlinbench-out";
  int threads = 0;  ///< 0: hardware concurrency; QLINBENCH_THREADS caps it

  // HHL grid
  std::vector<int> dims = {2, 4, 8};
  std::vector<double> densities = {0.5, 0.6, 0.7, 0.8, 0.9, 1.0};
  int trials = 3;
  int n_clock = 4;
  EigenvalueMode mode = EigenvalueMode::TwosComplement;
  SpectrumEstimate estimate = SpectrumEstimate::Exact;
  std::uint64_t hhl_shots = 100000;
  std::optional<double> t0;
  std::optional<double> C;

  // QSVM grid
  std::vector<std::string> datasets = {"iris", "bcancer"};
  std::vector<std::uint64_t> shots_list = {1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024};
  int seeds = 10;
  double gamma_inv = 1.0;
  int reps = 2;
  PreprocessOrder preprocess_order = PreprocessOrder::StandardizeThenPca;
  std::filesystem::path data_dir;
};

/// "a,b,c" integer lists.
std::vector<int> parse_int_list(std::string_view text);
std::vector<std::uint64_t> parse_u64_list(std::string_view text);
/// "x,y,z" or "start:stop:step" (inclusive stop, values rounded to 1e-9).
std::vector<double> parse_real_list(std::string_view text);

/// Applies the keys of a JSON object on top of `base`. Keys mirror the CLI
/// flags (dims, densities, trials, clock, mode, seed, out, dataset, shots,
/// seeds, gamma_inv, threads, ...). Throws ConfigError.
ExperimentConfig apply_config_json(ExperimentConfig base, std::string_view json_text);
ExperimentConfig load_config(const std::filesystem::path& path, ExperimentConfig base = {});
std::string config_to_json(const ExperimentConfig& cfg);

/// Throws ConfigError for inconsistent settings.
void validate(const ExperimentConfig& cfg);

/// Worker count after applying QLINBENCH_THREADS.
int resolve_threads(int requested);

/// seed_cell = hash64(master, suite, dim, density, trial, shots).
std::uint64_t cell_seed(std::uint64_t master, std::string_view suite, std::uint64_t dim,
                        double density, std::uint64_t trial, std::uint64_t shots);

struct HHLCell {
  std::string suite;
  std::string matrix;     ///< diagonal / nondiagonal / random
  int dim = 0;
  double target_density = 1.0;
  int trial = 0;
  std::uint64_t matrix_seed = 0;  ///< shared by a diagonal / nondiagonal pair
  std::uint64_t seed = 0;         ///< distinct per cell
  std::optional<HHLReport> report;
  std::string error_kind;
  std::string error_message;
  double seconds = 0.0;
};

struct QSVMRow {
  std::string suite;
  std::string dataset;
  std::string classifier;  ///< svm / qsvm
  std::string kernel;      ///< linear / exact / sampled
  std::uint64_t shots = 0; ///< 0 for exact kernels
  int seed_index = 0;
  std::uint64_t split_seed = 0;
  std::uint64_t seed = 0;
  std::size_t n_train = 0;
  std::size_t n_test = 0;
  int n_classes = 0;
  std::optional<ClassificationMetrics> metrics;
  std::vector<std::uint64_t> confusion;  ///< row-major, true x predicted
  std::string error_kind;
  std::string error_message;
  double seconds = 0.0;
};

struct HHLGroupSummary {
  std::string suite;
  std::string matrix;
  int dim = 0;
  double target_density = 0.0;
  int rows = 0;
  int errors = 0;
  double median_success = 0.0;
  double median_fidelity = 0.0;
  double median_depth_basis = 0.0;
  double median_width = 0.0;
};

struct ShotsSummary {
  std::uint64_t shots = 0;
  int rows = 0;
  double mean_accuracy = 0.0;
  double median_accuracy = 0.0;
};

struct QSVMDatasetSummary {
  std::string dataset;
  double median_baseline_accuracy = 0.0;
  double median_exact_accuracy = 0.0;
  std::vector<ShotsSummary> shots;
  std::uint64_t best_shots = 0;  ///< highest mean accuracy, ties to fewer shots
  double median_gap = 0.0;       ///< per seed: baseline - sampled at best_shots
};

struct BenchReport {
  std::string kind;  ///< "hhl" or "qsvm"
  ExperimentConfig config;
  std::vector<HHLCell> hhl_rows;
  std::vector<QSVMRow> qsvm_rows;
  std::vector<HHLGroupSummary> hhl_summary;
  std::vector<QSVMDatasetSummary> qsvm_summary;
  double seconds = 0.0;
};

/// Matrix generator for an HHL cell ("diagonal", "nondiagonal", "random").
HermitianMatrix hhl_cell_matrix(const HHLCell& cell);

BenchReport run_hhl_suite(const ExperimentConfig& cfg);

/// Loads a bundled dataset ("iris", "bcancer", "bcancer198") from data_dir.
Dataset load_bundled(const std::filesystem::path& data_dir, std::string_view name);

/// Stratified split used by the QSVM suite for one seed.
Split dataset_split(const Dataset& d, std::string_view name, std::uint64_t seed);

BenchReport run_qsvm_suite(const ExperimentConfig& cfg);

std::vector<std::string> csv_columns(const BenchReport& r);
std::string to_csv(const BenchReport& r);
std::string to_json(const BenchReport& r);

struct PlotSeries {
  std::string name;  ///< file stem
  std::string x_label;
  std::string y_label;
  std::vector<std::pair<double, double>> points;
};

std::vector<PlotSeries> plot_series(const BenchReport& r);

struct ReportFormats {
  bool csv = true;
  bool json = true;
  bool plot = true;
};

/// Writes <kind>.csv, <kind>.json and <series>.dat into `dir`; returns the
/// paths written. Throws IOError with the failing path.
std::vector<std::filesystem::path> emit_reports(const BenchReport& r,
                                                const std::filesystem::path& dir,
                                                ReportFormats formats = {});

}  // namespace qlin
