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

#include <string_view>
#include <vector>

#include "qcm/model.hpp"
#include "qcm/protocols.hpp"

namespace qcm {

/// No-click amplitudes of the theta = 0 branch in the star configuration
/// (gamma_1 = r, gamma_{j>1} = 1), evaluated at time t.
struct ConditionalAmplitudes {
  Complex b1;        ///< qubit 1
  Complex b;         ///< each partner qubit j = 2..M
  Complex b_photon;  ///< one photon, all qubits ground
  double t = 0.0;
  double alpha_coupling = 0.0;  ///< gamma_1 gamma / omega^2
  double omega_c = 0.0;         ///< sqrt(4 omega^2 - (kappa - Gamma)^2)

  double norm_squared(int m) const;
};

/// Candidate closed forms for the qubit-1 amplitude. The published
/// expression reads b1 = 1 + r b(t); integrating the conditional generator
/// shows the dark-mode part decays, giving b1 = e^{-Gamma t} + r b(t).
/// `check` re-runs this comparison against RK4 on every invocation.
enum class QubitOneReading { unit_offset, decaying_offset };

std::string_view to_string(QubitOneReading reading);

/// The reading validated against evolve_oracle_rk4.
inline constexpr QubitOneReading kValidatedReading = QubitOneReading::decaying_offset;

/// Closed-form conditional amplitudes. Throws OverdampedError when
/// 2 omega <= |kappa - Gamma| and ConfigError for invalid m, r or rates.
ConditionalAmplitudes conditional_amplitudes(int m, double r, double gamma_decay,
                                             double kappa, double t);

/// Same, with an explicit qubit-1 reading. Only `check` and the tests use
/// the unit_offset variant.
ConditionalAmplitudes conditional_amplitudes(int m, double r, double gamma_decay,
                                             double kappa, double t,
                                             QubitOneReading reading);

/// Sub-normalized conditional state for an arbitrary input (theta, alpha):
/// phi_0 does not decay, so the result is
/// sin(theta/2)|phi_0> + e^{i alpha} cos(theta/2) |theta = 0 branch>.
StateVector conditional_state(int m, double r, double gamma_decay, double kappa,
                              double t, double theta, double alpha);

/// 2 m_odd pi / omega_c. Reduces to m_odd pi / omega when Gamma = kappa.
double renormalized_trapping_time(int m, double r, double gamma_decay, double kappa,
                                  int m_odd = 1);

/// Squared norm of the theta = 0 conditional state: the probability that
/// no photon or qubit decay is detected during (0, t).
double no_click_probability(int m, double r, double gamma_decay, double kappa,
                            double t);

struct DecoherenceReport {
  int m = 0;
  CouplingScheme scheme = CouplingScheme::identical();
  double ratio = 1.0;
  double gamma_decay = 0.0;
  double kappa = 0.0;
  double trapping_time_c = 0.0;
  double fidelity = 1.0;
  double no_click = 1.0;
};

/// |<Psi(tau*)|Psi~_cond(tau*_c)>| where Psi(tau*) is the pure trapped state
/// and Psi~_cond the normalized no-click state at the renormalized trapping
/// time. Also fills the no-click probability at tau*_c.
DecoherenceReport decohered_fidelity(int m, const CouplingScheme& scheme,
                                     double gamma_decay, double kappa, int m_odd = 1);

/// Rows ordered by (M, scheme) with schemes {w_plus, w_prime} per M.
std::vector<DecoherenceReport> figure2_scan(int m_first, int m_last,
                                            double gamma_decay, double kappa);

}  // namespace qcm
