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

#include "qcm/model.hpp"

namespace qcm {

/// Time-evolution operator on the one-excitation block (indices 1..M+1),
/// stored in the same layout as GeneratorMatrix.
struct PropagatorMatrix {
  ComplexMatrix matrix;
  double time = 0.0;
};

/// Fixed-step classical fourth-order Runge-Kutta.
struct IntegratorSettings {
  double dt = 1e-4;
};

/// Analytic U(t) = exp(-iHt) of the interaction Hamiltonian:
///   U_jk        = delta_jk - 2 gamma_j gamma_k beta       (j, k qubits)
///   U_j,ph      = U_ph,j = -i gamma_j sin(omega t)/omega
///   U_ph,ph     = cos(omega t)
/// with beta = sin^2(omega t / 2) / omega^2. Every qubit-qubit off-diagonal
/// entry carries the minus sign.
PropagatorMatrix closed_form_propagator(const SystemConfig& config, double t);

/// Applies closed_form_propagator to the one-excitation block; the phi_0
/// amplitude is carried over unchanged.
StateVector evolve(const StateVector& state, const SystemConfig& config, double t);

/// exp(-iHt) from the eigendecomposition of a Hermitian generator.
PropagatorMatrix expm_propagator(const GeneratorMatrix& generator, double t);

/// Reference evolution through expm_propagator. Throws ConfigError for a
/// dissipative generator and NumericalError if the eigensolver fails.
StateVector evolve_oracle_expm(const GeneratorMatrix& generator,
                               const StateVector& state, double t);

/// Integrates d|psi>/dt = -i G |psi> with RK4 without renormalizing, so a
/// dissipative generator yields the sub-normalized no-click state. The step
/// is shrunk to t/ceil(t/dt) so the final time is hit exactly.
StateVector evolve_oracle_rk4(const GeneratorMatrix& generator,
                              const StateVector& state, double t,
                              const IntegratorSettings& settings = {});

/// m_odd * pi / omega, the instant at which the cavity returns to vacuum.
double trapping_time(const SystemConfig& config, int m_odd = 1);

}  // namespace qcm
