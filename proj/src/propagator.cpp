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

#include "qcm/propagator.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qcm/error.hpp"

namespace qcm {
namespace {

void require_matching(const GeneratorMatrix& generator, const StateVector& state) {
  if (generator.m() != state.m()) {
    throw DimensionError("generator acts on M=" + std::to_string(generator.m()) +
                         " but state has M=" + std::to_string(state.m()));
  }
}

StateVector splice(const StateVector& state, const ComplexVector& block,
                   bool normalized) {
  ComplexVector amps(state.amplitudes().size());
  amps[ExcitationBasis::kVacuum] = state.vacuum();
  amps.tail(block.size()) = block;
  return StateVector(std::move(amps), normalized);
}

}  // namespace

PropagatorMatrix closed_form_propagator(const SystemConfig& config, double t) {
  const int m = config.m();
  const double omega = collective_rabi(config);
  const double half = std::sin(omega * t / 2.0);
  const double beta = half * half / (omega * omega);
  const double s = std::sin(omega * t) / omega;
  const auto& g = config.couplings();

  ComplexMatrix u(m + 1, m + 1);
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k < m; ++k) {
      const double delta = (j == k) ? 1.0 : 0.0;
      u(j, k) = delta - 2.0 * g[j] * g[k] * beta;
    }
    u(j, m) = Complex(0.0, -g[j] * s);
    u(m, j) = u(j, m);
  }
  u(m, m) = std::cos(omega * t);
  return {std::move(u), t};
}

StateVector evolve(const StateVector& state, const SystemConfig& config, double t) {
  if (state.m() != config.m()) {
    throw DimensionError("state has M=" + std::to_string(state.m()) +
                         " but config has M=" + std::to_string(config.m()));
  }
  const PropagatorMatrix u = closed_form_propagator(config, t);
  return splice(state, u.matrix * state.excited_block(), state.normalized());
}

PropagatorMatrix expm_propagator(const GeneratorMatrix& generator, double t) {
  if (generator.kind != GeneratorKind::hermitian) {
    throw ConfigError("eigendecomposition oracle requires a Hermitian generator");
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(generator.matrix);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigendecomposition of the generator failed");
  }
  const Eigen::VectorXd& eval = solver.eigenvalues();
  ComplexVector phases(eval.size());
  for (Eigen::Index i = 0; i < eval.size(); ++i) {
    phases[i] = std::exp(Complex(0.0, -eval[i] * t));
  }
  const ComplexMatrix& v = solver.eigenvectors();
  return {v * phases.asDiagonal() * v.adjoint(), t};
}

StateVector evolve_oracle_expm(const GeneratorMatrix& generator,
                               const StateVector& state, double t) {
  require_matching(generator, state);
  const PropagatorMatrix u = expm_propagator(generator, t);
  return splice(state, u.matrix * state.excited_block(), state.normalized());
}

StateVector evolve_oracle_rk4(const GeneratorMatrix& generator,
                              const StateVector& state, double t,
                              const IntegratorSettings& settings) {
  require_matching(generator, state);
  if (!(settings.dt > 0.0) || !std::isfinite(settings.dt)) {
    throw ConfigError("integrator step must be finite and positive");
  }
  if (!(t >= 0.0) || !std::isfinite(t)) {
    throw ConfigError("integration time must be finite and non-negative");
  }
  const bool normalized =
      state.normalized() && generator.kind == GeneratorKind::hermitian;
  if (t == 0.0) {
    return StateVector(state.amplitudes(), normalized);
  }

  const auto steps = static_cast<long>(std::ceil(t / settings.dt));
  const double h = t / static_cast<double>(steps);
  const ComplexMatrix a = Complex(0.0, -1.0) * generator.matrix;

  ComplexVector y = state.excited_block();
  ComplexVector k1(y.size()), k2(y.size()), k3(y.size()), k4(y.size());
  ComplexVector probe(y.size());
  for (long n = 0; n < steps; ++n) {
    k1.noalias() = a * y;
    probe = y + (0.5 * h) * k1;
    k2.noalias() = a * probe;
    probe = y + (0.5 * h) * k2;
    k3.noalias() = a * probe;
    probe = y + h * k3;
    k4.noalias() = a * probe;
    y += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  if (!y.allFinite()) {
    throw NumericalError("RK4 produced non-finite amplitudes; reduce the step");
  }
  return splice(state, y, normalized);
}

double trapping_time(const SystemConfig& config, int m_odd) {
  if (m_odd < 1 || m_odd % 2 == 0) {
    throw ConfigError("trapping index must be a positive odd integer");
  }
  return m_odd * std::numbers::pi / collective_rabi(config);
}

}  // namespace qcm
