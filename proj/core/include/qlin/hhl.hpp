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
 * HHL linear-system solver on the dense simulator.
 *
 * Register layout for a system of dimension 2^m with an n-qubit clock:
 * qubits [0, m) hold the memory (|b>, later |x>), qubits [m, m + n) the clock
 * register (clock qubit j has weight 2^j), and qubit m + n the ancilla.
 *
 * Phase convention: the evolution time t0 maps an eigenvalue lambda to the
 * clock phase phi = lambda * t0 / (2 pi), read out as k ~ phi * 2^n and
 * decoded as lambda~ = 2 pi k / (t0 2^n). In two's-complement mode a reading
 * k >= 2^(n-1) decodes as k - 2^n.
 */

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qlin/circuit.hpp"
#include "qlin/spectral.hpp"

namespace qlin {

enum class EigenvalueMode { Unsigned, TwosComplement };
enum class SpectrumEstimate { Exact, Gershgorin };

std::string_view mode_name(EigenvalueMode mode);
/// "unsigned" / "signed" (alias "twos-complement"); ArgumentError otherwise.
EigenvalueMode parse_mode(std::string_view text);

struct HHLConfig {
  int n_clock = 4;
  /// Evolution-time scale; derived from the spectrum estimate when unset.
  std::optional<double> t0;
  /// Rotation constant; the smallest decodable |lambda~| when unset.
  std::optional<double> C;
  std::uint64_t shots = 100000;
  EigenvalueMode mode = EigenvalueMode::TwosComplement;
  SpectrumEstimate estimate = SpectrumEstimate::Exact;
  /// Right-hand side; normalized before loading. Must match the matrix size.
  std::vector<Complex> b;
  std::uint64_t seed = 0;
  /// Skip basis decomposition (depth_basis reported as -1).
  bool skip_basis_depth = false;
};

struct HHLReport {
  // matrix metadata
  int dim = 0;
  bool diagonal = false;
  double density = 0.0;
  double kappa = 0.0;
  std::uint64_t seed = 0;
  // resolved parameters
  int n_clock = 0;
  double t0 = 0.0;
  double C = 0.0;
  EigenvalueMode mode = EigenvalueMode::TwosComplement;
  // metrics
  double success_probability = 0.0;   ///< exact P(ancilla = 1)
  double sampled_success_rate = 0.0;  ///< ancilla = 1 frequency over shots
  double top_outcome_probability = 0.0;  ///< max_x P(ancilla = 1, memory = x)
  double fidelity = 0.0;
  double clock_zero_weight = 0.0;  ///< P(clock = 0 | ancilla = 1)
  double skipped_weight = 0.0;     ///< QPE weight on lambda~ = 0 (no rotation)
  int width = 0;
  int depth_raw = 0;
  int depth_basis = 0;
  std::vector<Complex> solution_amplitudes;
};

/// Quantum Fourier transform with entries e^{2 pi i jk/N}/sqrt(N), including
/// the final qubit reversal.
Circuit qft_circuit(int n);

/// QFT gates on an arbitrary ordered qubit list (list[0] least significant).
std::vector<Gate> qft_gates(std::span<const int> qubits);
std::vector<Gate> inverse_qft_gates(std::span<const int> qubits);

/// Clock-register distribution after phase estimation. `u_powers[j]` is the
/// unitary controlled by clock qubit j (normally U^(2^j)).
std::vector<double> phase_estimation(std::span<const UnitaryMatrix> u_powers,
                                     const StateVector& eigenstate, int n_clock);

/// Phase estimation of exp(i A t0). Throws ConfigError unless
/// max|lambda| t0 / (2 pi) < 1.
std::vector<double> phase_estimation(const HermitianMatrix& m, double t0,
                                     const StateVector& eigenstate, int n_clock);

/// lambda~ for clock reading k.
double decode_eigenvalue(std::uint64_t k, int n_clock, double t0, EigenvalueMode mode);

/// Ry angle 2 asin(C / lambda~) applied for clock reading k; 0 when
/// lambda~ = 0. Throws ConfigError if |C / lambda~| > 1.
double inversion_angle(double C, double lambda_tilde);

/// Uniformly controlled ancilla rotation over every clock value.
std::vector<Gate> eigenvalue_inversion(std::span<const int> clock, int ancilla,
                                       double t0, double C, EigenvalueMode mode);

struct HHLParameters {
  double t0 = 0.0;
  double C = 0.0;
  double lambda_estimate = 0.0;
};

/// Resolves t0 and C from the config and the spectrum, checking the
/// compression bound and C <= min |lambda~|. Throws ConfigError.
HHLParameters resolve_parameters(const HermitianMatrix& m,
                                 const SpectralDecomposition& spectrum,
                                 const HHLConfig& cfg);

/// The full circuit: prepare |b>, QPE, inversion, uncompute.
Circuit build_hhl_circuit(const HermitianMatrix& m, const SpectralDecomposition& spectrum,
                          const HHLConfig& cfg, const HHLParameters& params);

/// Builds, simulates and scores one HHL run. Throws SingularError,
/// ZeroVector, ConfigError, DimensionError.
HHLReport run_hhl(const HermitianMatrix& m, const HHLConfig& cfg);

/// Stable CSV column order for HHLReport rows.
const std::vector<std::string>& hhl_csv_columns();
std::vector<std::string> hhl_csv_row(const HHLReport& r);
std::string to_json(const HHLReport& r);

}  // namespace qlin
