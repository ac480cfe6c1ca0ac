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

#include "qcm/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>

#include "qcm/error.hpp"
#include "qcm/propagator.hpp"

namespace qcm {

CouplingScheme CouplingScheme::custom(double r) {
  if (!std::isfinite(r) || r <= 0.0) {
    throw ConfigError("coupling ratio must be finite and strictly positive");
  }
  return CouplingScheme(SchemeTag::custom, r);
}

CouplingScheme CouplingScheme::parse(std::string_view name) {
  if (name == "identical") return identical();
  if (name == "w_plus") return w_plus();
  if (name == "w_minus") return w_minus();
  if (name == "w_prime") return w_prime();
  throw ConfigError("unknown coupling scheme '" + std::string(name) + "'");
}

std::string_view CouplingScheme::name() const {
  switch (tag_) {
    case SchemeTag::identical: return "identical";
    case SchemeTag::w_plus: return "w_plus";
    case SchemeTag::w_minus: return "w_minus";
    case SchemeTag::w_prime: return "w_prime";
    case SchemeTag::custom: return "custom";
  }
  return "custom";
}

double CouplingScheme::ratio(int m) const {
  if (m < 1) {
    throw ConfigError("number of qubits must be >= 1");
  }
  const double root = std::sqrt(static_cast<double>(m));
  switch (tag_) {
    case SchemeTag::identical:
      return 1.0;
    case SchemeTag::w_plus:
      return root + 1.0;
    case SchemeTag::w_minus:
      if (m < 2) throw ConfigError("w_minus needs M >= 2 (r would be 0)");
      return root - 1.0;
    case SchemeTag::w_prime:
      if (m < 2) throw ConfigError("w_prime needs M >= 2 (r would be 0)");
      return std::sqrt(static_cast<double>(m - 1));
    case SchemeTag::custom:
      return custom_ratio_;
  }
  return custom_ratio_;
}

double QubitDensity::equatorial_overlap(double mu) const {
  const Complex phase = std::exp(Complex(0.0, mu));
  const Complex v = matrix(0, 0) + matrix(1, 1) + phase * matrix(0, 1) +
                    std::conj(phase) * matrix(1, 0);
  return 0.5 * v.real();
}

std::string_view to_string(StateClass c) {
  switch (c) {
    case StateClass::symmetric_W: return "symmetric_W";
    case StateClass::antisymmetric_W: return "antisymmetric_W";
    case StateClass::separable_W: return "separable_W";
    case StateClass::generic: return "generic";
  }
  return "generic";
}

StateClass classify(const StateVector& state, double tol) {
  const int m = state.m();
  if (m < 2) {
    return StateClass::generic;
  }
  const Complex first = state.qubit(1);
  const Complex partner = state.qubit(2);
  for (int j = 3; j <= m; ++j) {
    if (std::abs(state.qubit(j) - partner) > tol) {
      return StateClass::generic;
    }
  }
  if (std::abs(partner) <= tol) {
    return StateClass::generic;
  }
  if (std::abs(first) < tol) {
    return StateClass::separable_W;
  }
  if (std::abs(first - partner) < tol) {
    return StateClass::symmetric_W;
  }
  if (std::abs(first + partner) < tol) {
    return StateClass::antisymmetric_W;
  }
  return StateClass::generic;
}

TrappedAmplitudes trapped_amplitudes(int m, double r) {
  if (m < 2) {
    throw ConfigError("trapped amplitudes need M >= 2");
  }
  if (!std::isfinite(r) || r <= 0.0) {
    throw ConfigError("coupling ratio must be finite and strictly positive");
  }
  const double partners = static_cast<double>(m - 1);
  const double denom = partners + r * r;
  return {(partners - r * r) / denom, -2.0 * r / denom};
}

namespace {

ProtocolReport base_report(int m, const CouplingScheme& scheme,
                           const SystemConfig& config, double tau) {
  ProtocolReport report;
  report.m = m;
  report.scheme = scheme;
  report.ratio = config.coupling(1);
  report.trapping_time = tau;
  const PropagatorMatrix u = closed_form_propagator(config, tau);
  report.a1 = u.matrix(0, 0);
  report.a = u.matrix(1, 0);
  report.photon = u.matrix(m, 0);
  return report;
}

void require_protocol_size(int m) {
  if (m < 2) {
    throw ConfigError("protocols need M >= 2");
  }
}

}  // namespace

WStateResult generate_w_state(int m, const CouplingScheme& scheme, int m_odd) {
  require_protocol_size(m);
  const SystemConfig config = SystemConfig::star(m, scheme.ratio(m));
  const double tau = trapping_time(config, m_odd);
  StateVector state = evolve(initial_state(0.0, 0.0, config), config, tau);
  ProtocolReport report = base_report(m, scheme, config, tau);
  report.classification = classify(state);
  return {std::move(state), std::move(report)};
}

QubitDensity reduced_qubit_density(const StateVector& state, int j) {
  const Complex cj = state.qubit(j);
  const Complex c0 = state.vacuum();
  const double norm = state.norm_squared();
  if (!(norm > 0.0)) {
    throw NumericalError("cannot reduce a zero-norm state");
  }
  const double excited = std::norm(cj) / norm;
  QubitDensity rho;
  rho.matrix(0, 0) = 1.0 - excited;
  rho.matrix(1, 1) = excited;
  rho.matrix(0, 1) = c0 * std::conj(cj) / norm;
  rho.matrix(1, 0) = std::conj(rho.matrix(0, 1));
  return rho;
}

double copy_fidelity(const SystemConfig& config, int j, double t, double alpha,
                     double mu) {
  const StateVector psi =
      evolve(initial_state(std::numbers::pi / 2.0, alpha, config), config, t);
  return reduced_qubit_density(psi, j).equatorial_overlap(mu);
}

FidelityPair fidelity_curve(int m, const CouplingScheme& scheme) {
  require_protocol_size(m);
  const double md = static_cast<double>(m);
  const double inv_root = 1.0 / std::sqrt(md);
  switch (scheme.tag()) {
    case SchemeTag::identical:
      return {0.5 * (1.0 + 2.0 / md), 1.0 / md};
    case SchemeTag::w_plus:
      return {0.5 * (1.0 + inv_root), 0.5 * (1.0 + inv_root)};
    case SchemeTag::w_minus:
      return {0.5 * (1.0 + inv_root), 0.5 * (1.0 - inv_root)};
    case SchemeTag::w_prime:
      return {0.5 * (1.0 + 1.0 / std::sqrt(md - 1.0)), 0.5};
    case SchemeTag::custom:
      break;
  }
  throw ConfigError("no closed-form fidelity curve for a custom coupling ratio");
}

ProtocolReport run_anticlone(int m, const CouplingScheme& scheme, double alpha,
                             int m_odd) {
  require_protocol_size(m);
  const SystemConfig config = SystemConfig::star(m, scheme.ratio(m));
  const double tau = trapping_time(config, m_odd);
  const StateVector psi =
      evolve(initial_state(std::numbers::pi / 2.0, alpha, config), config, tau);

  ProtocolReport report = base_report(m, scheme, config, tau);
  report.alpha = alpha;
  const double mu = alpha - std::numbers::pi;
  report.fidelities.reserve(static_cast<std::size_t>(m));
  for (int j = 1; j <= m; ++j) {
    report.fidelities.push_back(reduced_qubit_density(psi, j).equatorial_overlap(mu));
  }
  report.classification = classify(psi);
  return report;
}

RatioObjective parse_objective(std::string_view name) {
  if (name == "w_symmetry") return RatioObjective::w_symmetry;
  if (name == "target_fidelity") return RatioObjective::target_fidelity;
  if (name == "separable_transfer") return RatioObjective::separable_transfer;
  throw ConfigError("unknown optimizer objective '" + std::string(name) + "'");
}

std::string_view to_string(RatioObjective objective) {
  switch (objective) {
    case RatioObjective::w_symmetry: return "w_symmetry";
    case RatioObjective::target_fidelity: return "target_fidelity";
    case RatioObjective::separable_transfer: return "separable_transfer";
  }
  return "w_symmetry";
}

namespace {

constexpr int kGridPoints = 400;
constexpr double kGridFloor = 1e-3;
constexpr double kBracketWidth = 1e-8;

std::vector<double> log_grid(int m) {
  const double hi = 4.0 * std::sqrt(static_cast<double>(m));
  const double lo = kGridFloor;
  std::vector<double> grid(kGridPoints);
  const double step = std::log(hi / lo) / (kGridPoints - 1);
  for (int i = 0; i < kGridPoints; ++i) {
    grid[static_cast<std::size_t>(i)] = lo * std::exp(step * i);
  }
  grid.back() = hi;
  return grid;
}

double golden_section_min(const std::function<double(double)>& f, double lo,
                          double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = f(c);
  double fd = f(d);
  while (hi - lo > kBracketWidth) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = f(d);
    }
  }
  return 0.5 * (lo + hi);
}

// Roots of a continuous function located by sign changes on the grid and
// refined by minimizing |f| inside each bracketing cell.
std::vector<double> grid_roots(const std::vector<double>& grid,
                               const std::function<double(double)>& f) {
  std::vector<double> roots;
  double prev = f(grid[0]);
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double cur = f(grid[i]);
    if ((prev < 0.0) != (cur < 0.0)) {
      const auto abs_f = [&f](double r) { return std::abs(f(r)); };
      roots.push_back(golden_section_min(abs_f, grid[i - 1], grid[i]));
    }
    prev = cur;
  }
  return roots;
}

}  // namespace

std::vector<double> optimize_coupling_ratio(int m, RatioObjective objective) {
  require_protocol_size(m);
  const std::vector<double> grid = log_grid(m);
  std::vector<double> found;

  switch (objective) {
    case RatioObjective::w_symmetry:
      found = grid_roots(grid, [m](double r) {
        const TrappedAmplitudes t = trapped_amplitudes(m, r);
        return std::abs(t.a1) - std::abs(t.a);
      });
      break;
    case RatioObjective::separable_transfer:
      found = grid_roots(grid, [m](double r) { return trapped_amplitudes(m, r).a1; });
      break;
    case RatioObjective::target_fidelity: {
      // The target fidelity at the anti-clone phase is (1 - a)/2; minimizing
      // a directly avoids the constant offset swamping the curvature.
      const auto partner = [m](double r) { return trapped_amplitudes(m, r).a; };
      std::size_t best = 0;
      for (std::size_t i = 1; i < grid.size(); ++i) {
        if (partner(grid[i]) < partner(grid[best])) best = i;
      }
      if (best == 0 || best + 1 == grid.size()) {
        break;
      }
      found.push_back(golden_section_min(partner, grid[best - 1], grid[best + 1]));
      break;
    }
  }
  if (found.empty()) {
    throw NoRootError("objective " + std::string(to_string(objective)) +
                      " has no solution in (0, 4 sqrt(M)] for M=" + std::to_string(m));
  }
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace qcm
