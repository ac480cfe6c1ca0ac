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

#include "qcm/decoherence.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qcm/error.hpp"
#include "qcm/propagator.hpp"

namespace qcm {
namespace {

double conditional_frequency(double omega, double gamma_decay, double kappa) {
  const double split = kappa - gamma_decay;
  const double disc = 4.0 * omega * omega - split * split;
  if (!(disc > 0.0)) {
    throw OverdampedError("overdamped regime: 2*omega <= |kappa - Gamma| (omega=" +
                          std::to_string(omega) + ")");
  }
  return std::sqrt(disc);
}

void require_star(int m, double r) {
  if (m < 1) {
    throw ConfigError("number of qubits must be >= 1");
  }
  if (!std::isfinite(r) || r <= 0.0) {
    throw ConfigError("coupling ratio must be finite and strictly positive");
  }
}

}  // namespace

double ConditionalAmplitudes::norm_squared(int m) const {
  return std::norm(b1) + (m - 1) * std::norm(b) + std::norm(b_photon);
}

std::string_view to_string(QubitOneReading reading) {
  switch (reading) {
    case QubitOneReading::unit_offset: return "unit_offset";
    case QubitOneReading::decaying_offset: return "decaying_offset";
  }
  return "decaying_offset";
}

ConditionalAmplitudes conditional_amplitudes(int m, double r, double gamma_decay,
                                             double kappa, double t) {
  return conditional_amplitudes(m, r, gamma_decay, kappa, t, kValidatedReading);
}

ConditionalAmplitudes conditional_amplitudes(int m, double r, double gamma_decay,
                                             double kappa, double t,
                                             QubitOneReading reading) {
  require_star(m, r);
  // Validates the decay rates.
  const SystemConfig config = SystemConfig::star(m, r, gamma_decay, kappa);
  const double omega = collective_rabi(config);
  const double big_omega = conditional_frequency(omega, gamma_decay, kappa);
  const double alpha_c = r / (omega * omega);
  const double u = std::sin(big_omega * t / 2.0);
  const double v = std::cos(big_omega * t / 2.0);
  const double split = kappa - gamma_decay;

  // The bright mode sum_j gamma_j c_j / omega oscillates with the photon
  // at omega_c and decays at (Gamma + kappa)/2; the dark remainder decays
  // at Gamma.
  const double bright = std::exp(-0.5 * (gamma_decay + kappa) * t) *
                        (v + split * u / big_omega);
  const double dark = std::exp(-gamma_decay * t);

  ConditionalAmplitudes out;
  out.t = t;
  out.alpha_coupling = alpha_c;
  out.omega_c = big_omega;
  out.b = alpha_c * (bright - dark);
  const double offset = reading == QubitOneReading::unit_offset ? 1.0 : dark;
  out.b1 = offset + r * out.b.real();
  out.b_photon = Complex(0.0, -2.0 * omega * std::sqrt(r * alpha_c) *
                                  std::exp(-0.5 * (gamma_decay + kappa) * t) * u /
                                  big_omega);
  return out;
}

StateVector conditional_state(int m, double r, double gamma_decay, double kappa,
                              double t, double theta, double alpha) {
  const ConditionalAmplitudes c = conditional_amplitudes(m, r, gamma_decay, kappa, t);
  const double cc = std::cos(theta / 2.0);
  const Complex weight(cc * std::cos(alpha), cc * std::sin(alpha));
  ComplexVector amps(ExcitationBasis::dimension(m));
  amps[ExcitationBasis::kVacuum] = std::sin(theta / 2.0);
  amps[ExcitationBasis::qubit(1)] = weight * c.b1;
  for (int j = 2; j <= m; ++j) {
    amps[ExcitationBasis::qubit(j)] = weight * c.b;
  }
  amps[ExcitationBasis::photon(m)] = weight * c.b_photon;
  return StateVector(std::move(amps), false);
}

double renormalized_trapping_time(int m, double r, double gamma_decay, double kappa,
                                  int m_odd) {
  require_star(m, r);
  if (m_odd < 1 || m_odd % 2 == 0) {
    throw ConfigError("trapping index must be a positive odd integer");
  }
  const SystemConfig config = SystemConfig::star(m, r, gamma_decay, kappa);
  const double big_omega =
      conditional_frequency(collective_rabi(config), gamma_decay, kappa);
  return 2.0 * m_odd * std::numbers::pi / big_omega;
}

double no_click_probability(int m, double r, double gamma_decay, double kappa,
                            double t) {
  return conditional_amplitudes(m, r, gamma_decay, kappa, t).norm_squared(m);
}

DecoherenceReport decohered_fidelity(int m, const CouplingScheme& scheme,
                                     double gamma_decay, double kappa, int m_odd) {
  if (m < 2) {
    throw ConfigError("decohered fidelity needs M >= 2");
  }
  const double r = scheme.ratio(m);
  const double tau_c = renormalized_trapping_time(m, r, gamma_decay, kappa, m_odd);
  const ConditionalAmplitudes c = conditional_amplitudes(m, r, gamma_decay, kappa, tau_c);
  const double norm2 = c.norm_squared(m);
  if (!(norm2 > 0.0)) {
    throw NumericalError("conditional state has zero norm");
  }
  // The pure trapped state has no photon component and real amplitudes.
  const TrappedAmplitudes pure = trapped_amplitudes(m, r);
  const Complex overlap = pure.a1 * c.b1 + static_cast<double>(m - 1) * pure.a * c.b;

  DecoherenceReport report;
  report.m = m;
  report.scheme = scheme;
  report.ratio = r;
  report.gamma_decay = gamma_decay;
  report.kappa = kappa;
  report.trapping_time_c = tau_c;
  report.fidelity = std::abs(overlap) / std::sqrt(norm2);
  report.no_click = norm2;
  return report;
}

std::vector<DecoherenceReport> figure2_scan(int m_first, int m_last,
                                            double gamma_decay, double kappa) {
  if (m_first < 2 || m_last < m_first) {
    throw ConfigError("qubit range must satisfy 2 <= first <= last");
  }
  std::vector<DecoherenceReport> rows;
  rows.reserve(static_cast<std::size_t>(2 * (m_last - m_first + 1)));
  for (int m = m_first; m <= m_last; ++m) {
    rows.push_back(decohered_fidelity(m, CouplingScheme::w_plus(), gamma_decay, kappa));
    rows.push_back(decohered_fidelity(m, CouplingScheme::w_prime(), gamma_decay, kappa));
  }
  return rows;
}

}  // namespace qcm
