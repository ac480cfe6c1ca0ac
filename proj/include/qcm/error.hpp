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

#include <stdexcept>
#include <string>

namespace qcm {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid physical or numerical parameters (non-positive couplings, even
/// trapping index, unknown scheme, ...).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// State and generator dimensions disagree, or a qubit index is out of range.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// 2*omega <= |kappa - Gamma|: the conditional closed form has no real
/// oscillation frequency.
class OverdampedError : public Error {
 public:
  using Error::Error;
};

/// Eigensolver failure or non-finite amplitudes during integration.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// The coupling-ratio optimizer found no root/extremum in its bracket.
class NoRootError : public Error {
 public:
  using Error::Error;
};

}  // namespace qcm
