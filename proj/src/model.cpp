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

#include "qcm/model.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "qcm/error.hpp"

namespace qcm {

SystemConfig::SystemConfig(std::vector<double> couplings, double gamma_decay,
                           double kappa)
    : couplings_(std::move(couplings)), gamma_decay_(gamma_decay), kappa_(kappa) {
  if (couplings_.empty()) {
    throw ConfigError("system needs at least one qubit");
  }
  for (std::size_t i = 0; i < couplings_.size(); ++i) {
    const double g = couplings_[i];
    if (!std::isfinite(g) || g <= 0.0) {
      throw ConfigError("coupling " + std::to_string(i + 1) +
                        " must be finite and strictly positive");
    }
  }
  if (!std::isfinite(gamma_decay_) || gamma_decay_ < 0.0) {
    throw ConfigError("qubit decay rate must be finite and non-negative");
  }
  if (!std::isfinite(kappa_) || kappa_ < 0.0) {
    throw ConfigError("cavity decay rate must be finite and non-negative");
  }
}

SystemConfig SystemConfig::star(int m, double ratio, double gamma_decay,
                                double kappa) {
  if (m < 1) {
    throw ConfigError("number of qubits must be >= 1");
  }
  std::vector<double> couplings(static_cast<std::size_t>(m), 1.0);
  couplings[0] = ratio;
  return SystemConfig(std::move(couplings), gamma_decay, kappa);
}

double SystemConfig::coupling(int j) const {
  if (j < 1 || j > m()) {
    throw DimensionError("qubit index " + std::to_string(j) + " out of range");
  }
  return couplings_[static_cast<std::size_t>(j - 1)];
}

StateVector::StateVector(ComplexVector amplitudes, bool normalized)
    : amplitudes_(std::move(amplitudes)), normalized_(normalized) {
  if (amplitudes_.size() < 3) {
    throw DimensionError("state vector needs M+2 >= 3 amplitudes");
  }
}

Complex StateVector::qubit(int j) const {
  if (j < 1 || j > m()) {
    throw DimensionError("qubit index " + std::to_string(j) + " out of range");
  }
  return amplitudes_[ExcitationBasis::qubit(j)];
}

GeneratorMatrix build_hamiltonian(const SystemConfig& config) {
  const int m = config.m();
  ComplexMatrix h = ComplexMatrix::Zero(m + 1, m + 1);
  for (int j = 0; j < m; ++j) {
    const double g = config.couplings()[static_cast<std::size_t>(j)];
    h(j, m) = g;
    h(m, j) = g;
  }
  return {std::move(h), GeneratorKind::hermitian};
}

GeneratorMatrix build_dissipative_hamiltonian(const SystemConfig& config) {
  GeneratorMatrix g = build_hamiltonian(config);
  const int m = config.m();
  for (int j = 0; j < m; ++j) {
    g.matrix(j, j) = Complex(0.0, -config.gamma_decay());
  }
  g.matrix(m, m) = Complex(0.0, -config.kappa());
  g.kind = GeneratorKind::dissipative;
  return g;
}

StateVector initial_state(double theta, double alpha, const SystemConfig& config) {
  ComplexVector amps = ComplexVector::Zero(ExcitationBasis::dimension(config.m()));
  amps[ExcitationBasis::kVacuum] = std::sin(theta / 2.0);
  const double c = std::cos(theta / 2.0);
  amps[ExcitationBasis::qubit(1)] = Complex(c * std::cos(alpha), c * std::sin(alpha));
  return StateVector(std::move(amps), true);
}

double collective_rabi(const SystemConfig& config) {
  double sum = 0.0;
  for (double g : config.couplings()) {
    sum += g * g;
  }
  return std::sqrt(sum);
}

}  // namespace qcm
