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

#include <cstdint>
#include <string>
#include <vector>

#include "qcm/propagator.hpp"

namespace qcm {

/// Randomized cross-validation of every closed form against the numerical
/// oracles. Deterministic for a given seed.
struct CheckOptions {
  int trials = 200;
  std::uint64_t seed = 42;
  /// Flips the sign of one qubit-qubit entry of the closed-form propagator
  /// (row M, column 2) before it is compared. Exercises the failure path.
  bool inject_sign_fault = false;
  IntegratorSettings integrator;
};

enum class SuiteStatus { pass, fail, consistent, rejected };

std::string_view to_string(SuiteStatus status);

struct SuiteResult {
  std::string name;
  int trials = 0;
  double max_deviation = 0.0;
  double tolerance = 0.0;
  SuiteStatus status = SuiteStatus::pass;
};

struct CheckReport {
  std::vector<SuiteResult> suites;

  /// True when every tolerance suite passed and the shipped conditional
  /// reading is consistent with the integrator.
  bool passed() const;
  /// Names of the suites responsible for passed() == false.
  std::vector<std::string> failing_suites() const;
};

/// Tolerance ladder.
inline constexpr double kExpmTolerance = 1e-10;
inline constexpr double kRk4Tolerance = 1e-8;
inline constexpr double kUnitarityTolerance = 1e-10;
inline constexpr double kGroupTolerance = 1e-10;
inline constexpr double kTrappingTolerance = 1e-12;

/// Suites, in report order:
///   unitarity             max |U^dag U - I|
///   group_property        max |U(t1) U(t2) - U(t1 + t2)|
///   closed_vs_expm        closed form vs eigendecomposition exponential
///   closed_vs_rk4         closed-form evolution vs RK4 on random states
///   vacuum_trapping       photon amplitude of the theta = 0 state at tau*
///   conditional_<reading> conditional closed form vs RK4 on the dissipative
///                         generator, one row per qubit-1 reading
/// With trials == 0 the report is empty.
CheckReport run_check(const CheckOptions& options);

}  // namespace qcm
