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

// Runs the acceptance criteria end to end and prints one PASS/FAIL line per
// criterion. Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "qlin/bench.hpp"
#include "qlin/hhl.hpp"
#include "qlin/metrics.hpp"
#include "qlin/qsvm.hpp"

using namespace qlin;

namespace {

constexpr double kPi = std::numbers::pi;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

std::string fmt(double x, int precision = 4) {
  std::ostringstream s;
  s.precision(precision);
  s << x;
  return s.str();
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

ExperimentConfig base_config() {
  ExperimentConfig cfg;
  cfg.data_dir = QLIN_DATA_DIR;
  return cfg;
}

// Suite runs shared between criteria.
struct Runs {
  std::optional<BenchReport> hhl;
  std::optional<BenchReport> qsvm;
  double hhl_seconds = 0.0;
  double qsvm_seconds = 0.0;

  const BenchReport& hhl_grid() {
    if (!hhl) {
      const auto t = Clock::now();
      hhl = run_hhl_suite(base_config());
      hhl_seconds = seconds_since(t);
    }
    return *hhl;
  }
  const BenchReport& qsvm_suite() {
    if (!qsvm) {
      const auto t = Clock::now();
      qsvm = run_qsvm_suite(base_config());
      qsvm_seconds = seconds_since(t);
    }
    return *qsvm;
  }
};

Outcome qft_exact() {
  const auto t = Clock::now();
  double worst = 0.0;
  for (int n = 1; n <= 3; ++n) {
    worst = std::max(worst,
                     (to_unitary(qft_circuit(n)).matrix() - oracle::dft(n)).cwiseAbs().maxCoeff());
  }
  const double s = seconds_since(t);
  return {worst <= 1e-10 && s < 1.0, "max error " + fmt(worst) + ", " + fmt(s) + " s"};
}

Outcome qpe_exact() {
  double worst = 0.0;
  bool modal_ok = true;
  for (int n = 2; n <= 4; ++n) {
    for (int k = 0; k < (1 << n); ++k) {
      const double lambda = 2.0 * kPi * k / (1 << n);
      const auto p = phase_estimation(HermitianMatrix::diagonal(std::vector<double>{lambda, 0.0}),
                                      1.0, StateVector::basis(1, 0), n);
      const auto modal = std::max_element(p.begin(), p.end()) - p.begin();
      modal_ok = modal_ok && modal == k;
      worst = std::max(worst, 1.0 - p[static_cast<std::size_t>(k)]);
    }
  }
  return {modal_ok && worst <= 1e-9, "max miss " + fmt(worst)};
}

Outcome hhl_oracle_agreement() {
  const auto t = Clock::now();
  HHLConfig cfg;
  cfg.n_clock = 3;
  cfg.t0 = kPi / 4.0;  // lambda = 1, 2 land on clock values 1, 2
  cfg.C = 1.0;
  const double s = std::sqrt(0.5);
  cfg.b = {s, s};
  const HHLReport d = run_hhl(HermitianMatrix::diagonal(std::vector<double>{1.0, 2.0}), cfg);
  Matrix coles(2, 2);
  coles << 1.5, 0.5, 0.5, 1.5;
  cfg.b = {1.0, 0.0};
  const HHLReport c = run_hhl(HermitianMatrix::from_matrix(coles), cfg);
  const double secs = seconds_since(t);
  return {d.fidelity >= 0.999 && c.fidelity >= 0.999 && secs < 10.0,
          "diag(1,2) " + fmt(d.fidelity, 10) + ", coles " + fmt(c.fidelity, 10) + ", " +
              fmt(secs) + " s"};
}

Outcome diagonal_direction() {
  const auto t = Clock::now();
  ExperimentConfig cfg = base_config();
  cfg.suites = {kSuiteHhlDiag};
  cfg.dims = {2, 4};
  cfg.trials = 5;
  const BenchReport r = run_hhl_suite(cfg);
  bool pass = true;
  std::string detail;
  for (int dim : {2, 4}) {
    std::vector<double> sd, sn, dd, dn;
    for (const HHLCell& c : r.hhl_rows) {
      if (c.dim != dim || !c.report) continue;
      (c.matrix == "diagonal" ? sd : sn).push_back(c.report->success_probability);
      (c.matrix == "diagonal" ? dd : dn).push_back(c.report->depth_basis);
    }
    const bool ok = sd.size() == 5 && sn.size() == 5 && median(sd) >= median(sn) &&
                    median(dn) > median(dd);
    pass = pass && ok;
    detail += "dim " + std::to_string(dim) + ": success " + fmt(median(sd)) + " vs " +
              fmt(median(sn)) + ", depth " + fmt(median(dd)) + " vs " + fmt(median(dn)) + "; ";
  }
  const double secs = seconds_since(t);
  return {pass && secs < 300.0, detail + fmt(secs) + " s"};
}

Outcome fidelity_collapse() {
  const auto t = Clock::now();
  HHLConfig cfg;
  cfg.mode = EigenvalueMode::Unsigned;
  cfg.b = std::vector<Complex>(4, 1.0);
  cfg.shots = 0;
  cfg.skip_basis_depth = true;
  std::vector<double> mixed, diag;
  for (std::uint64_t seed = 0; mixed.size() < 10 && seed < 1000; ++seed) {
    const HermitianMatrix a = random_sparse_hermitian({0.5, 4, seed});
    const SpectralDecomposition s = eigendecompose(a);
    if (s.eigenvalues.minCoeff() >= 0.0 || s.eigenvalues.maxCoeff() <= 0.0) continue;
    if (s.eigenvalues.cwiseAbs().minCoeff() < 1e-9) continue;
    mixed.push_back(run_hhl(a, cfg).fidelity);
  }
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    diag.push_back(run_hhl(random_diagonal(4, seed), cfg).fidelity);
  }
  const double m = median(mixed), d = median(diag);
  const double secs = seconds_since(t);
  return {mixed.size() == 10 && m < 0.5 && d >= 0.99 && secs < 300.0,
          "sign-mixed median " + fmt(m) + ", diagonal median " + fmt(d) + " (min " +
              fmt(*std::min_element(diag.begin(), diag.end())) + "), " + fmt(secs) + " s"};
}

Outcome lssvm_fixture() {
  KernelMatrix k;
  k.values = (Eigen::MatrixXd(2, 2) << 1, -1, -1, 1).finished();
  const std::vector<int> y = {1, -1};
  const LSSVMModel m = train_lssvm(k, y, 0.0);
  const double err = std::max({std::abs(m.b), std::abs(m.a(0) - 0.5), std::abs(m.a(1) + 0.5)});
  return {err <= 1e-9, "b " + fmt(m.b) + ", a (" + fmt(m.a(0)) + ", " + fmt(m.a(1)) + ")"};
}

Outcome metrics_row() {
  const ClassificationMetrics m = compute_metrics({69, 5, 5, 119});
  const bool ok = std::abs(m.accuracy - 0.9495) <= 5e-4 && std::abs(*m.sensitivity - 0.9324) <= 5e-4 &&
                  std::abs(*m.specificity - 0.9597) <= 5e-4 && std::abs(*m.f1 - 0.9324) <= 5e-4;
  return {ok, fmt(m.accuracy) + " " + fmt(*m.sensitivity) + " " + fmt(*m.specificity) + " " +
                  fmt(*m.f1)};
}

// Classical LS-SVM decision values on a given Gram, solved independently.
std::vector<double> classical_decisions(const Eigen::MatrixXd& gram, const Eigen::MatrixXd& cross,
                                        const std::vector<int>& y, double gamma_inv) {
  Eigen::VectorXd yv(static_cast<Eigen::Index>(y.size()));
  for (std::size_t i = 0; i < y.size(); ++i) yv(static_cast<Eigen::Index>(i)) = y[i];
  const Eigen::VectorXd sol = oracle::lssvm(gram, yv, gamma_inv);
  const Eigen::VectorXd dec = cross * sol.tail(gram.rows()) + Eigen::VectorXd::Constant(cross.rows(), sol(0));
  return {dec.data(), dec.data() + dec.size()};
}

Outcome exact_equivalence() {
  const ExperimentConfig cfg = base_config();
  const FeatureMap map{FeatureMapKind::SecondOrder, 2, cfg.reps};
  std::size_t disagreements = 0, predictions = 0;
  for (const char* name : {"iris", "bcancer"}) {
    const Dataset d = load_bundled(cfg.data_dir, name);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const Split s = dataset_split(d, name, seed);
      const FitResult fit = fit_transform(s.train.features, 2);
      const Eigen::MatrixXd test = transform(fit.pipeline, s.test.features);
      const FeatureStates train_states(fit.transformed, map);
      const KernelMatrix k = gram_exact(fit.transformed, map);
      const Eigen::MatrixXd cross = cross_kernel_exact(test, fit.transformed, map);
      const int n_classes = d.n_classes();

      std::vector<int> quantum(static_cast<std::size_t>(test.rows()));
      std::vector<std::vector<double>> classical_dec;
      if (n_classes == 2) {
        std::vector<int> y;
        for (int l : s.train.labels) y.push_back(l == 0 ? 1 : -1);
        const LSSVMModel m = train_lssvm(k, y, cfg.gamma_inv);
        const auto cd = classical_decisions(k.values, cross, y, cfg.gamma_inv);
        for (Eigen::Index i = 0; i < test.rows(); ++i) {
          const Eigen::RowVectorXd row = cross.row(i);
          const int q = sign_label(decision_value(m, std::vector<double>(row.data(), row.data() + row.size())));
          const int c = sign_label(cd[static_cast<std::size_t>(i)]);
          disagreements += q != c;
          ++predictions;
        }
      } else {
        const auto models = train_one_vs_rest(k, s.train.labels, n_classes, cfg.gamma_inv);
        std::vector<std::vector<double>> per_class;
        for (int c = 0; c < n_classes; ++c) {
          std::vector<int> y;
          for (int l : s.train.labels) y.push_back(l == c ? 1 : -1);
          per_class.push_back(classical_decisions(k.values, cross, y, cfg.gamma_inv));
        }
        for (Eigen::Index i = 0; i < test.rows(); ++i) {
          const Eigen::RowVectorXd row = cross.row(i);
          const int q = multiclass_classify(models, std::vector<double>(row.data(), row.data() + row.size()));
          int best = 0;
          for (int c = 1; c < n_classes; ++c) {
            if (per_class[static_cast<std::size_t>(c)][static_cast<std::size_t>(i)] >
                per_class[static_cast<std::size_t>(best)][static_cast<std::size_t>(i)]) {
              best = c;
            }
          }
          disagreements += q != best;
          ++predictions;
        }
      }
    }
  }
  return {disagreements == 0,
          std::to_string(disagreements) + " disagreements over " + std::to_string(predictions) +
              " test predictions (iris, bcancer; 10 splits each)"};
}

const QSVMDatasetSummary* summary_for(const BenchReport& r, const std::string& dataset) {
  for (const auto& s : r.qsvm_summary) {
    if (s.dataset == dataset) return &s;
  }
  return nullptr;
}

Outcome shots_trend(Runs& runs) {
  const BenchReport& r = runs.qsvm_suite();
  const QSVMDatasetSummary* bc = summary_for(r, "bcancer");
  if (!bc) return {false, "no bcancer summary"};
  double at1 = -1.0, at1024 = -1.0;
  for (const ShotsSummary& s : bc->shots) {
    if (s.shots == 1) at1 = s.mean_accuracy;
    if (s.shots == 1024) at1024 = s.mean_accuracy;
  }
  const double gain = at1024 - at1;
  return {at1 >= 0.0 && at1024 >= 0.0 && gain >= 0.10 && runs.qsvm_seconds < 900.0,
          "mean accuracy " + fmt(at1) + " at 1 shot, " + fmt(at1024) + " at 1024 (gain " +
              fmt(gain) + "), suite " + fmt(runs.qsvm_seconds) + " s"};
}

Outcome binary_vs_multiclass(Runs& runs) {
  const BenchReport& r = runs.qsvm_suite();
  const QSVMDatasetSummary* iris = summary_for(r, "iris");
  const QSVMDatasetSummary* bc = summary_for(r, "bcancer");
  if (!iris || !bc) return {false, "missing dataset summary"};
  return {iris->median_gap > bc->median_gap,
          "median gap iris " + fmt(iris->median_gap) + " at " + std::to_string(iris->best_shots) +
              " shots, bcancer " + fmt(bc->median_gap) + " at " + std::to_string(bc->best_shots) +
              " shots"};
}

Outcome determinism(Runs& runs) {
  const std::string hhl_a = to_csv(runs.hhl_grid());
  const std::string hhl_b = to_csv(run_hhl_suite(base_config()));
  const std::string qsvm_a = to_csv(runs.qsvm_suite());
  const std::string qsvm_b = to_csv(run_qsvm_suite(base_config()));
  return {hhl_a == hhl_b && qsvm_a == qsvm_b,
          "hhl csv " + std::to_string(hhl_a.size()) + " bytes " + (hhl_a == hhl_b ? "identical" : "DIFFER") +
              ", qsvm csv " + std::to_string(qsvm_a.size()) + " bytes " +
              (qsvm_a == qsvm_b ? "identical" : "DIFFER")};
}

Outcome full_grid(Runs& runs) {
  const BenchReport& r = runs.hhl_grid();
  int max_width = 0, errors = 0;
  for (const HHLCell& c : r.hhl_rows) {
    if (!c.report) {
      ++errors;
      continue;
    }
    if (c.dim == 8) max_width = std::max(max_width, c.report->width);
  }
  return {errors == 0 && max_width > 0 && max_width <= 13 && runs.hhl_seconds < 600.0,
          std::to_string(r.hhl_rows.size()) + " cells, " + std::to_string(errors) +
              " errors, dim-8 width " + std::to_string(max_width) + ", " + fmt(runs.hhl_seconds) +
              " s"};
}

}  // namespace

int main() {
  Runs runs;
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"QFT exactness", qft_exact},
      {"QPE exactness", qpe_exact},
      {"HHL oracle agreement", hhl_oracle_agreement},
      {"diagonal vs non-diagonal direction", diagonal_direction},
      {"random-Hermitian fidelity collapse (unsigned)", fidelity_collapse},
      {"LS-SVM two-point fixture", lssvm_fixture},
      {"confusion metrics reproduction", metrics_row},
      {"exact-kernel equivalence", exact_equivalence},
      {"shots trend on breast cancer", [&] { return shots_trend(runs); }},
      {"binary vs multiclass gap direction", [&] { return binary_vs_multiclass(runs); }},
      {"determinism of suite CSVs", [&] { return determinism(runs); }},
      {"full HHL grid scale and width", [&] { return full_grid(runs); }},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", index, name.c_str(), o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
