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

#include <complex>
#include <vector>

#include <Eigen/Dense>

namespace qcm {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

/// The qubit-cavity machine: M qubits coupled to one cavity mode with
/// couplings gamma_j, qubit dipole decay Gamma and cavity decay kappa.
///
/// All rates are in units of the reference coupling gamma = 1, so times are
/// in units of 1/gamma.
class SystemConfig {
 public:
  /// Throws ConfigError unless every coupling is finite and > 0 and both
  /// decay rates are finite and >= 0.
  explicit SystemConfig(std::vector<double> couplings, double gamma_decay = 0.0,
                        double kappa = 0.0);

  /// Star configuration: gamma_1 = ratio, gamma_j = 1 for j = 2..m.
  static SystemConfig star(int m, double ratio, double gamma_decay = 0.0,
                           double kappa = 0.0);

  int m() const { return static_cast<int>(couplings_.size()); }
  const std::vector<double>& couplings() const { return couplings_; }
  /// 1-based qubit index.
  double coupling(int j) const;
  double gamma_decay() const { return gamma_decay_; }
  double kappa() const { return kappa_; }

 private:
  std::vector<double> couplings_;
  double gamma_decay_;
  double kappa_;
};

/// Index layout of the zero/one-excitation space:
///   0        -> phi_0     all qubits ground, cavity vacuum
///   1..M     -> phi_j     qubit j excited, cavity vacuum
///   M+1      -> phi_{M+1} all qubits ground, one photon
/// Generators and propagators act on indices 1..M+1 only and are stored as
/// (M+1)x(M+1) matrices whose row/column k corresponds to basis index k+1.
struct ExcitationBasis {
  static constexpr int kVacuum = 0;
  static constexpr int dimension(int m) { return m + 2; }
  static constexpr int qubit(int j) { return j; }
  static constexpr int photon(int m) { return m + 1; }
};

/// Amplitudes over ExcitationBasis. Conditional (no-click) states are
/// sub-normalized and carry normalized() == false.
class StateVector {
 public:
  /// Throws DimensionError if fewer than three amplitudes are given (M >= 1).
  StateVector(ComplexVector amplitudes, bool normalized);

  const ComplexVector& amplitudes() const { return amplitudes_; }
  bool normalized() const { return normalized_; }
  int m() const { return static_cast<int>(amplitudes_.size()) - 2; }
  double norm_squared() const { return amplitudes_.squaredNorm(); }

  Complex vacuum() const { return amplitudes_[ExcitationBasis::kVacuum]; }
  /// 1-based qubit index; throws DimensionError when out of range.
  Complex qubit(int j) const;
  Complex photon() const { return amplitudes_[ExcitationBasis::photon(m())]; }

  /// Amplitudes on the one-excitation block (indices 1..M+1).
  ComplexVector excited_block() const { return amplitudes_.tail(m() + 1); }

 private:
  ComplexVector amplitudes_;
  bool normalized_;
};

enum class GeneratorKind { hermitian, dissipative };

/// Generator of d|psi>/dt = -i G |psi> on the one-excitation block.
struct GeneratorMatrix {
  ComplexMatrix matrix;
  GeneratorKind kind = GeneratorKind::hermitian;

  int m() const { return static_cast<int>(matrix.rows()) - 1; }
};

/// Interaction Hamiltonian: qubit j couples to the photon with gamma_j, no
/// other entries.
GeneratorMatrix build_hamiltonian(const SystemConfig& config);

/// build_hamiltonian minus i*Gamma on each qubit diagonal entry and minus
/// i*kappa on the photon diagonal entry (no-click conditional generator).
GeneratorMatrix build_dissipative_hamiltonian(const SystemConfig& config);

/// Qubit 1 in sin(theta/2)|0> + e^{i alpha} cos(theta/2)|1>, all other
/// qubits ground, cavity vacuum.
StateVector initial_state(double theta, double alpha, const SystemConfig& config);

/// omega = sqrt(sum_j gamma_j^2).
double collective_rabi(const SystemConfig& config);

}  // namespace qcm
