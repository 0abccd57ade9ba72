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

#include "qlin/hhl.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qlin/error.hpp"
#include "qlin/synthesis.hpp"
#include "serialize.hpp"

namespace qlin {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<int> range(int begin, int count) {
  std::vector<int> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = begin + i;
  return out;
}

double max_phase_fraction(EigenvalueMode mode) {
  return mode == EigenvalueMode::Unsigned ? 1.0 : 0.5;
}

// Controlled e^{i A t0 2^j} on each clock qubit (sign = -1 for the uncompute).
std::vector<Gate> controlled_evolutions(const SpectralDecomposition& spectrum,
                                        std::span<const int> clock,
                                        const std::vector<int>& memory, double t0,
                                        double sign) {
  std::vector<Gate> out;
  for (std::size_t j = 0; j < clock.size(); ++j) {
    const double t = sign * t0 * std::ldexp(1.0, static_cast<int>(j));
    out.push_back(gates::controlled_unitary(evolution_unitary(spectrum, t),
                                            {clock[j]}, memory));
  }
  return out;
}

}  // namespace

std::string_view mode_name(EigenvalueMode mode) {
  return mode == EigenvalueMode::Unsigned ? "unsigned" : "signed";
}

EigenvalueMode parse_mode(std::string_view text) {
  if (text == "unsigned") return EigenvalueMode::Unsigned;
  if (text == "signed" || text == "twos-complement") return EigenvalueMode::TwosComplement;
  throw ArgumentError("unknown eigenvalue mode '" + std::string(text) + "'");
}

std::vector<Gate> qft_gates(std::span<const int> qubits) {
  const int n = static_cast<int>(qubits.size());
  std::vector<Gate> out;
  for (int i = n - 1; i >= 0; --i) {
    out.push_back(gates::h(qubits[i]));
    for (int j = i - 1; j >= 0; --j) {
      out.push_back(gates::controlled_phase(qubits[j], qubits[i],
                                            std::numbers::pi / std::ldexp(1.0, i - j)));
    }
  }
  for (int i = 0; i < n / 2; ++i) {
    const int a = qubits[i];
    const int b = qubits[n - 1 - i];
    out.push_back(gates::cnot(a, b));
    out.push_back(gates::cnot(b, a));
    out.push_back(gates::cnot(a, b));
  }
  return out;
}

std::vector<Gate> inverse_qft_gates(std::span<const int> qubits) {
  std::vector<Gate> fwd = qft_gates(qubits);
  std::vector<Gate> out;
  out.reserve(fwd.size());
  for (auto it = fwd.rbegin(); it != fwd.rend(); ++it) out.push_back(adjoint(*it));
  return out;
}

Circuit qft_circuit(int n) {
  if (n < 1) throw ArgumentError("QFT needs at least one qubit");
  Circuit c(n);
  const std::vector<int> q = range(0, n);
  for (Gate& g : qft_gates(q)) c.add(std::move(g));
  return c;
}

std::vector<double> phase_estimation(std::span<const UnitaryMatrix> u_powers,
                                     const StateVector& eigenstate, int n_clock) {
  if (n_clock < 1) throw ArgumentError("n_clock must be >= 1");
  if (static_cast<int>(u_powers.size()) != n_clock) {
    throw DimensionError("need one controlled unitary per clock qubit");
  }
  const int m = eigenstate.n_qubits();
  const std::vector<int> memory = range(0, m);
  const std::vector<int> clock = range(m, n_clock);
  Circuit c(m + n_clock);
  for (int q : clock) c.add(gates::h(q));
  for (int j = 0; j < n_clock; ++j) {
    c.add(gates::controlled_unitary(u_powers[static_cast<std::size_t>(j)],
                                    {clock[static_cast<std::size_t>(j)]}, memory));
  }
  for (Gate& g : inverse_qft_gates(clock)) c.add(std::move(g));

  std::vector<Complex> amps(std::size_t{1} << (m + n_clock));
  std::copy(eigenstate.amplitudes().begin(), eigenstate.amplitudes().end(), amps.begin());
  simulate_inplace(c, amps);

  std::vector<double> dist(std::size_t{1} << n_clock, 0.0);
  for (std::size_t x = 0; x < amps.size(); ++x) dist[x >> m] += std::norm(amps[x]);
  return dist;
}

std::vector<double> phase_estimation(const HermitianMatrix& m, double t0,
                                     const StateVector& eigenstate, int n_clock) {
  if (m.dim() != static_cast<int>(eigenstate.dim())) {
    throw DimensionError("eigenstate does not match the matrix");
  }
  const SpectralDecomposition spectrum = eigendecompose(m);
  const double max_abs = spectrum.eigenvalues.cwiseAbs().maxCoeff();
  if (!(max_abs * std::abs(t0) / kTwoPi < 1.0)) {
    throw ConfigError("t0 does not compress the spectrum into one phase period");
  }
  std::vector<UnitaryMatrix> powers;
  for (int j = 0; j < n_clock; ++j) {
    powers.push_back(evolution_unitary(spectrum, t0 * std::ldexp(1.0, j)));
  }
  return phase_estimation(powers, eigenstate, n_clock);
}

double decode_eigenvalue(std::uint64_t k, int n_clock, double t0, EigenvalueMode mode) {
  const std::uint64_t n_states = std::uint64_t{1} << n_clock;
  double value = static_cast<double>(k);
  if (mode == EigenvalueMode::TwosComplement && k >= n_states / 2) {
    value -= static_cast<double>(n_states);
  }
  return kTwoPi * value / (t0 * static_cast<double>(n_states));
}

double inversion_angle(double C, double lambda_tilde) {
  if (lambda_tilde == 0.0) return 0.0;
  const double ratio = C / lambda_tilde;
  if (std::abs(ratio) > 1.0 + 1e-12) {
    throw ConfigError("|C / lambda~| exceeds 1 for lambda~ = " +
                      std::to_string(lambda_tilde));
  }
  return 2.0 * std::asin(std::clamp(ratio, -1.0, 1.0));
}

std::vector<Gate> eigenvalue_inversion(std::span<const int> clock, int ancilla,
                                       double t0, double C, EigenvalueMode mode) {
  const int n_clock = static_cast<int>(clock.size());
  std::vector<double> angles(std::size_t{1} << n_clock);
  for (std::size_t k = 0; k < angles.size(); ++k) {
    angles[k] = inversion_angle(C, decode_eigenvalue(k, n_clock, t0, mode));
  }
  return multiplexed_rotation(RotationAxis::Y, ancilla, clock, angles);
}

HHLParameters resolve_parameters(const HermitianMatrix& m,
                                 const SpectralDecomposition& spectrum,
                                 const HHLConfig& cfg) {
  if (cfg.n_clock < 1) throw ConfigError("n_clock must be >= 1");
  if (cfg.mode == EigenvalueMode::TwosComplement && cfg.n_clock < 2) {
    throw ConfigError("two's-complement decoding needs n_clock >= 2");
  }
  HHLParameters p;
  const double max_abs = spectrum.eigenvalues.cwiseAbs().maxCoeff();
  p.lambda_estimate =
      cfg.estimate == SpectrumEstimate::Exact ? max_abs : gershgorin_bound(m);
  if (!(p.lambda_estimate > 0.0)) throw SingularError("matrix has an empty spectrum");

  const double n_states = std::ldexp(1.0, cfg.n_clock);
  const double usable = max_phase_fraction(cfg.mode) - 1.0 / n_states;
  p.t0 = cfg.t0.value_or(kTwoPi * usable / p.lambda_estimate);
  if (!(p.t0 > 0.0) || !std::isfinite(p.t0)) throw ConfigError("t0 must be positive");
  if (!(max_abs * p.t0 / kTwoPi < max_phase_fraction(cfg.mode))) {
    throw ConfigError("t0 does not compress the spectrum into the clock range");
  }
  const double smallest = kTwoPi / (p.t0 * n_states);
  p.C = cfg.C.value_or(smallest);
  if (!(p.C > 0.0) || p.C > smallest * (1.0 + 1e-12)) {
    throw ConfigError("C must lie in (0, smallest decodable |lambda~|]");
  }
  return p;
}

namespace {

struct HHLSegments {
  Circuit head;  // state preparation and phase estimation
  Circuit tail;  // inversion and uncompute
};

HHLSegments build_segments(const HermitianMatrix& m, const SpectralDecomposition& spectrum,
                           const HHLConfig& cfg, const HHLParameters& params) {
  const int mem = qubits_for_dim(static_cast<std::size_t>(m.dim()));
  if (cfg.b.size() != static_cast<std::size_t>(m.dim())) {
    throw DimensionError("b must have the matrix dimension");
  }
  const std::vector<int> memory = range(0, mem);
  const std::vector<int> clock = range(mem, cfg.n_clock);
  const int ancilla = mem + cfg.n_clock;
  HHLSegments s{Circuit(ancilla + 1), Circuit(ancilla + 1)};
  auto add_all = [](Circuit& c, std::vector<Gate> gs) {
    for (Gate& g : gs) c.add(std::move(g));
  };
  add_all(s.head, prepare_state(cfg.b, memory));
  for (int q : clock) s.head.add(gates::h(q));
  add_all(s.head, controlled_evolutions(spectrum, clock, memory, params.t0, 1.0));
  add_all(s.head, inverse_qft_gates(clock));

  add_all(s.tail, eigenvalue_inversion(clock, ancilla, params.t0, params.C, cfg.mode));
  add_all(s.tail, qft_gates(clock));
  std::vector<Gate> undo = controlled_evolutions(spectrum, clock, memory, params.t0, -1.0);
  add_all(s.tail, std::vector<Gate>(undo.rbegin(), undo.rend()));
  for (int q : clock) s.tail.add(gates::h(q));
  return s;
}

}  // namespace

Circuit build_hhl_circuit(const HermitianMatrix& m, const SpectralDecomposition& spectrum,
                          const HHLConfig& cfg, const HHLParameters& params) {
  HHLSegments s = build_segments(m, spectrum, cfg, params);
  s.head.append(s.tail);
  return std::move(s.head);
}

HHLReport run_hhl(const HermitianMatrix& m, const HHLConfig& cfg) {
  const int mem = qubits_for_dim(static_cast<std::size_t>(m.dim()));
  if (cfg.b.size() != static_cast<std::size_t>(m.dim())) {
    throw DimensionError("b must have the matrix dimension");
  }
  const StateVector oracle = classical_solve(m, cfg.b);  // SingularError, ZeroVector
  const SpectralDecomposition spectrum = eigendecompose(m);

  HHLReport r;
  r.dim = m.dim();
  r.diagonal = m.is_diagonal();
  r.density = achieved_density(m.matrix());
  r.kappa = condition_number(spectrum);
  r.seed = cfg.seed;
  r.n_clock = cfg.n_clock;
  r.mode = cfg.mode;
  const HHLParameters params = resolve_parameters(m, spectrum, cfg);
  r.t0 = params.t0;
  r.C = params.C;

  const HHLSegments segments = build_segments(m, spectrum, cfg, params);
  Circuit circuit = segments.head;
  circuit.append(segments.tail);
  r.width = circuit.width();
  r.depth_raw = depth(circuit);
  r.depth_basis = cfg.skip_basis_depth ? -1 : depth(decompose(circuit));

  const int n_clock = cfg.n_clock;
  const int ancilla = mem + n_clock;
  const std::size_t mem_dim = std::size_t{1} << mem;
  const std::size_t clock_mask = ((std::size_t{1} << n_clock) - 1) << mem;
  const std::size_t anc_bit = std::size_t{1} << ancilla;

  std::vector<Complex> amps(std::size_t{1} << circuit.n_qubits());
  amps[0] = 1.0;
  simulate_inplace(segments.head, amps);
  for (std::size_t x = 0; x < amps.size(); ++x) {
    if ((x & clock_mask) == 0) r.skipped_weight += std::norm(amps[x]);
  }
  simulate_inplace(segments.tail, amps);

  std::vector<double> joint(mem_dim, 0.0);
  std::vector<Complex> solution(mem_dim);
  double clock_zero = 0.0;
  for (std::size_t x = 0; x < amps.size(); ++x) {
    if (!(x & anc_bit)) continue;
    const double p = std::norm(amps[x]);
    r.success_probability += p;
    joint[x & (mem_dim - 1)] += p;
    if ((x & clock_mask) == 0) {
      solution[x & (mem_dim - 1)] = amps[x];
      clock_zero += p;
    }
  }
  r.success_probability = std::clamp(r.success_probability, 0.0, 1.0);
  r.top_outcome_probability = *std::max_element(joint.begin(), joint.end());
  r.clock_zero_weight =
      r.success_probability > 0.0 ? clock_zero / r.success_probability : 0.0;
  if (clock_zero > 0.0) {
    const StateVector post = normalize(solution);
    r.fidelity = state_fidelity(post, oracle);
    r.solution_amplitudes.assign(post.amplitudes().begin(), post.amplitudes().end());
  }

  if (cfg.shots > 0) {
    const StateVector final_state = adopt_state(std::move(amps));
    const Histogram h = sample(final_state, cfg.shots, cfg.seed);
    std::uint64_t hits = 0;
    for (const auto& [index, count] : h) {
      if (index & anc_bit) hits += count;
    }
    r.sampled_success_rate = static_cast<double>(hits) / static_cast<double>(cfg.shots);
  }
  return r;
}

const std::vector<std::string>& hhl_csv_columns() {
  static const std::vector<std::string> cols = {
      "dim",   "diagonal", "density", "kappa", "n_clock",
      "t0",    "C",        "mode",    "success_probability",
      "top_outcome_probability", "fidelity", "width", "depth_raw",
      "depth_basis", "seed"};
  return cols;
}

std::vector<std::string> hhl_csv_row(const HHLReport& r) {
  using detail::format_double;
  return {std::to_string(r.dim),
          r.diagonal ? "true" : "false",
          format_double(r.density),
          format_double(r.kappa),
          std::to_string(r.n_clock),
          format_double(r.t0),
          format_double(r.C),
          std::string(mode_name(r.mode)),
          format_double(r.success_probability),
          format_double(r.top_outcome_probability),
          format_double(r.fidelity),
          std::to_string(r.width),
          std::to_string(r.depth_raw),
          std::to_string(r.depth_basis),
          std::to_string(r.seed)};
}

std::string to_json(const HHLReport& r) {
  nlohmann::json j;
  j["dim"] = r.dim;
  j["diagonal"] = r.diagonal;
  j["density"] = r.density;
  j["kappa"] = r.kappa;
  j["n_clock"] = r.n_clock;
  j["t0"] = r.t0;
  j["C"] = r.C;
  j["mode"] = std::string(mode_name(r.mode));
  j["success_probability"] = r.success_probability;
  j["sampled_success_rate"] = r.sampled_success_rate;
  j["top_outcome_probability"] = r.top_outcome_probability;
  j["fidelity"] = r.fidelity;
  j["clock_zero_weight"] = r.clock_zero_weight;
  j["skipped_weight"] = r.skipped_weight;
  j["width"] = r.width;
  j["depth_raw"] = r.depth_raw;
  j["depth_basis"] = r.depth_basis;
  j["seed"] = r.seed;
  nlohmann::json amps = nlohmann::json::array();
  for (const Complex& c : r.solution_amplitudes) amps.push_back({c.real(), c.imag()});
  j["solution_amplitudes"] = std::move(amps);
  return j.dump();
}

}  // namespace qlin
