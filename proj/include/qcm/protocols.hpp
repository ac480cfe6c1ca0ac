// Copyright 2026 The qcm Authors
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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qcm/model.hpp"

namespace qcm {

enum class SchemeTag { identical, w_plus, w_minus, w_prime, custom };

/// Choice of the coupling ratio r = gamma_1 / gamma for the star
/// configuration (gamma_1 = r, gamma_{j>1} = 1).
///
///   identical  r = 1
///   w_plus     r = sqrt(M) + 1   symmetric W state at the trapping time
///   w_minus    r = sqrt(M) - 1   antisymmetric W state
///   w_prime    r = sqrt(M - 1)   qubit 1 ends in |0>, W state on the rest
///   custom     caller-supplied r > 0
class CouplingScheme {
 public:
  static CouplingScheme identical() { return CouplingScheme(SchemeTag::identical, 1.0); }
  static CouplingScheme w_plus() { return CouplingScheme(SchemeTag::w_plus, 0.0); }
  static CouplingScheme w_minus() { return CouplingScheme(SchemeTag::w_minus, 0.0); }
  static CouplingScheme w_prime() { return CouplingScheme(SchemeTag::w_prime, 0.0); }
  /// Throws ConfigError unless r is finite and > 0.
  static CouplingScheme custom(double r);
  /// Accepts the names returned by name(); "custom" is not parseable.
  static CouplingScheme parse(std::string_view name);

  SchemeTag tag() const { return tag_; }
  std::string_view name() const;
  /// Resolved ratio for m qubits. w_minus and w_prime need m >= 2.
  double ratio(int m) const;

  bool operator==(const CouplingScheme&) const = default;

 private:
  CouplingScheme(SchemeTag tag, double r) : tag_(tag), custom_ratio_(r) {}

  SchemeTag tag_;
  double custom_ratio_;
};

/// Single-qubit reduced density matrix in the basis {|0>, |1>}.
struct QubitDensity {
  Eigen::Matrix2cd matrix;

  double trace() const { return matrix.trace().real(); }
  /// <q|rho|q> for q = (|0> + e^{i mu}|1>)/sqrt(2).
  double equatorial_overlap(double mu) const;
};

enum class StateClass { symmetric_W, antisymmetric_W, separable_W, generic };

std::string_view to_string(StateClass c);

/// Amplitude magnitudes/signs below this are treated as equal or zero when
/// classifying a trapped state.
inline constexpr double kClassificationTolerance = 1e-10;

/// Classifies a qubit-amplitude pattern by comparing qubit 1 with the
/// partner qubits 2..M, which must all agree for any W class.
StateClass classify(const StateVector& state, double tol = kClassificationTolerance);

struct ProtocolReport {
  int m = 0;
  CouplingScheme scheme = CouplingScheme::identical();
  double ratio = 1.0;
  double trapping_time = 0.0;
  double alpha = 0.0;
  /// F_1..F_M against the orthogonal complement of the input; empty for W
  /// state generation.
  std::vector<double> fidelities;
  /// Qubit-1 and qubit-2 amplitudes of the theta = 0 branch at the trapping
  /// time, i.e. U_11 and U_21.
  Complex a1;
  Complex a;
  Complex photon;
  StateClass classification = StateClass::generic;
};

struct TrappedAmplitudes {
  double a1;
  double a;
};

/// a1 = (M-1-r^2)/(M-1+r^2), a = -2r/(M-1+r^2). Needs m >= 2 and r > 0.
TrappedAmplitudes trapped_amplitudes(int m, double r);

struct WStateResult {
  StateVector state;
  ProtocolReport report;
};

/// Evolves the excited qubit 1 (theta = 0) to the m_odd-th trapping time.
WStateResult generate_w_state(int m, const CouplingScheme& scheme, int m_odd = 1);

/// Partial trace over the cavity and every qubit except j of a state in the
/// zero/one-excitation space, normalized by the state's norm. Works for
/// conditional (sub-normalized) states too.
QubitDensity reduced_qubit_density(const StateVector& state, int j);

/// Fidelity of qubit j with (|0> + e^{i mu}|1>)/sqrt(2) after evolving the
/// theta = pi/2, phase-alpha input for time t.
double copy_fidelity(const SystemConfig& config, int j, double t, double alpha,
                     double mu);

struct FidelityPair {
  double target;
  double input;
};

/// Closed-form anti-cloning fidelities at the trapping time for the four
/// named schemes. Throws ConfigError for custom schemes.
FidelityPair fidelity_curve(int m, const CouplingScheme& scheme);

/// Full anti-cloning pipeline: theta = pi/2 input with phase alpha, evolution
/// to the trapping time, per-qubit reduced densities and fidelities against
/// mu = alpha - pi.
ProtocolReport run_anticlone(int m, const CouplingScheme& scheme, double alpha,
                             int m_odd = 1);

enum class RatioObjective { w_symmetry, target_fidelity, separable_transfer };

RatioObjective parse_objective(std::string_view name);
std::string_view to_string(RatioObjective objective);

/// Locates coupling ratios numerically: log-grid scan over (0, 4 sqrt(M)]
/// followed by golden-section refinement to a bracket below 1e-8.
///   w_symmetry          every r with |a1| = |a| (ascending)
///   target_fidelity     argmax of the target-qubit fidelity
///   separable_transfer  r with a1 = 0
/// Throws NoRootError when the objective has no solution in range.
std::vector<double> optimize_coupling_ratio(int m, RatioObjective objective);

}  // namespace qcm
