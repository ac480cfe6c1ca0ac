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
#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qcm/error.hpp"

namespace qcm::cli {

enum class Command { check, wstate, anticlone, decoherence, scan };
enum class OutputFormat { csv, json };

/// Exit-code contract of the qcm tool.
enum ExitCode : int { kSuccess = 0, kBreach = 1, kConfigError = 2 };

struct RunConfig {
  Command command = Command::check;
  /// Inclusive qubit range; --m N sets both ends.
  std::optional<int> m_first;
  std::optional<int> m_last;
  std::optional<std::string> scheme;
  std::optional<double> ratio;
  double gamma_decay = 0.001;
  double kappa = 0.02;
  double alpha = 0.0;
  std::optional<double> theta;
  int m_odd = 1;
  OutputFormat format = OutputFormat::csv;
  std::string out_path;  ///< empty: standard output
  int trials = 200;
  std::uint64_t seed = 42;
  std::optional<std::string> r_grid;  ///< "lo:hi:count"
  bool inject_fault = false;
};

using Cell = std::variant<long long, double, std::string>;

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
};

/// Header row, then one line per row; doubles printed with 17 significant
/// digits so every value round-trips.
std::string to_csv(const Table& table);
/// Array of objects, keys in column order.
std::string to_json(const Table& table);

/// A command's internal consistency assertion failed (exit code 1).
class BreachError : public qcm::Error {
 public:
  using qcm::Error::Error;
};

struct CommandResult {
  Table table;
  /// Non-empty when the table was produced but a tolerance was breached.
  std::string breach;
};

CommandResult cmd_check(const RunConfig& config);
CommandResult cmd_wstate(const RunConfig& config);
CommandResult cmd_anticlone(const RunConfig& config);
CommandResult cmd_decoherence(const RunConfig& config);
CommandResult cmd_scan(const RunConfig& config);

/// Parses arguments (argv[0] excluded), runs the command, writes the table
/// to `out` or --out, diagnostics to `err`, and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcm::cli
