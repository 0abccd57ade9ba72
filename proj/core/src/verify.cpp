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

#include "qlin/verify.hpp"

#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "qlin/error.hpp"
#include "qlin/hhl.hpp"
#include "qlin/metrics.hpp"
#include "qlin/qsvm.hpp"
#include "qlin/synthesis.hpp"

namespace qlin {

namespace {

constexpr double kPi = std::numbers::pi;

std::string fmt(double x) {
  std::ostringstream out;
  out.precision(6);
  out << x;
  return out.str();
}

CheckResult qft_matches_dft() {
  double worst = 0.0;
  for (int n = 1; n <= 3; ++n) {
    const int dim = 1 << n;
    const Matrix u = to_unitary(qft_circuit(n)).matrix();
    for (int j = 0; j < dim; ++j) {
      for (int k = 0; k < dim; ++k) {
        const Complex want = std::polar(1.0 / std::sqrt(dim), 2.0 * kPi * j * k / dim);
        worst = std::max(worst, std::abs(u(j, k) - want));
      }
    }
  }
  return {"qft matches DFT (n = 1..3)", worst <= 1e-10, "max error " + fmt(worst)};
}

CheckResult qpe_exact_phase() {
  double worst = 0.0;
  for (int n = 2; n <= 4; ++n) {
    for (int k = 0; k < (1 << n); ++k) {
      const double lambda = 2.0 * kPi * k / (1 << n);
      const HermitianMatrix m = HermitianMatrix::diagonal(std::vector<double>{lambda, 0.0});
      const auto p = phase_estimation(m, 1.0, StateVector::basis(1, 0), n);
      worst = std::max(worst, 1.0 - p[static_cast<std::size_t>(k)]);
    }
  }
  return {"phase estimation of exact phases", worst <= 1e-9, "max miss " + fmt(worst)};
}

CheckResult hhl_fixture(const char* name, const Matrix& a, std::vector<Complex> b, double t0,
                        double C) {
  HHLConfig cfg;
  cfg.n_clock = 3;
  cfg.t0 = t0;
  cfg.C = C;
  cfg.b = std::move(b);
  cfg.shots = 1000;
  const HHLReport r = run_hhl(HermitianMatrix::from_matrix(a), cfg);
  return {name, r.fidelity >= 0.999,
          "fidelity " + fmt(r.fidelity) + ", success " + fmt(r.success_probability)};
}

CheckResult lssvm_hand_case() {
  KernelMatrix k;
  k.values = (Eigen::MatrixXd(2, 2) << 1, -1, -1, 1).finished();
  const std::vector<int> y = {1, -1};
  const LSSVMModel m = train_lssvm(k, y, 0.0);
  const double err =
      std::max({std::abs(m.b), std::abs(m.a(0) - 0.5), std::abs(m.a(1) + 0.5)});
  return {"LS-SVM two-point system", err <= 1e-9,
          "b " + fmt(m.b) + ", a (" + fmt(m.a(0)) + ", " + fmt(m.a(1)) + ")"};
}

CheckResult metrics_row() {
  const ClassificationMetrics m = compute_metrics({69, 5, 5, 119});
  const bool ok = std::abs(m.accuracy - 0.9495) <= 5e-4 &&
                  std::abs(*m.sensitivity - 0.9324) <= 5e-4 &&
                  std::abs(*m.specificity - 0.9597) <= 5e-4 && std::abs(*m.f1 - 0.9324) <= 5e-4;
  return {"confusion metrics (69, 5, 5, 119)", ok,
          fmt(m.accuracy) + " " + fmt(*m.sensitivity) + " " + fmt(*m.specificity) + " " +
              fmt(*m.f1)};
}

CheckResult toffoli_decomposition() {
  Circuit c(3);
  c.add(gates::toffoli(0, 1, 2));
  c.add(gates::fredkin(2, 0, 1));
  const BasisCircuit bc = decompose(c);
  const double d = distance_up_to_phase(to_unitary(bc).matrix(), to_unitary(c).matrix());
  return {"basis decomposition of Toffoli + Fredkin", d <= 1e-9, "distance " + fmt(d)};
}

}  // namespace

std::vector<CheckResult> run_fixture_checks() {
  const std::vector<std::pair<std::string, std::function<CheckResult()>>> checks = {
      {"qft", qft_matches_dft},
      {"qpe", qpe_exact_phase},
      {"hhl-diag", [] {
         Matrix a = Matrix::Zero(2, 2);
         a(0, 0) = 1.0;
         a(1, 1) = 2.0;
         const double s = 1.0 / std::sqrt(2.0);
         return hhl_fixture("HHL on diag(1, 2)", a, {s, s}, kPi / 4.0, 1.0);
       }},
      {"hhl-coles", [] {
         Matrix a(2, 2);
         a << 1.5, 0.5, 0.5, 1.5;
         return hhl_fixture("HHL on [[1.5, 0.5], [0.5, 1.5]]", a, {1.0, 0.0}, kPi / 4.0, 1.0);
       }},
      {"lssvm", lssvm_hand_case},
      {"metrics", metrics_row},
      {"synthesis", toffoli_decomposition},
  };
  std::vector<CheckResult> out;
  for (const auto& [name, fn] : checks) {
    try {
      out.push_back(fn());
    } catch (const std::exception& e) {
      out.push_back({name, false, std::string("threw: ") + e.what()});
    }
  }
  return out;
}

}  // namespace qlin
