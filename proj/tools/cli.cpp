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

#include "cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcm/qcm.hpp"

namespace qcm::cli {
namespace {

constexpr double kPipelineTolerance = 1e-12;

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::string format_cell(const Cell& cell) {
  if (const auto* i = std::get_if<long long>(&cell)) return std::to_string(*i);
  if (const auto* d = std::get_if<double>(&cell)) return format_double(*d);
  return std::get<std::string>(cell);
}

std::pair<int, int> qubit_range(const RunConfig& config, int first, int last) {
  const int lo = config.m_first.value_or(first);
  const int hi = config.m_last.value_or(last);
  if (hi < lo) {
    throw ConfigError("empty m-range");
  }
  return {lo, hi};
}

/// --scheme and --r are alternatives; an explicit ratio wins as "custom".
std::vector<CouplingScheme> schemes_from(const RunConfig& config,
                                         std::vector<CouplingScheme> fallback) {
  if (config.scheme && config.ratio) {
    throw ConfigError("--scheme and --r are mutually exclusive");
  }
  if (config.ratio) return {CouplingScheme::custom(*config.ratio)};
  if (config.scheme) return {CouplingScheme::parse(*config.scheme)};
  return fallback;
}

std::string scheme_label(const CouplingScheme& scheme) { return std::string(scheme.name()); }

struct RatioGrid {
  double lo;
  double hi;
  int count;
};

RatioGrid parse_grid(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 3) {
    throw ConfigError("r-grid must be lo:hi:count");
  }
  try {
    return {std::stod(parts[0]), std::stod(parts[1]), std::stoi(parts[2])};
  } catch (const std::exception&) {
    throw ConfigError("r-grid must be lo:hi:count");
  }
}

}  // namespace

std::string to_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += table.columns[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += format_cell(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& table) {
  auto array = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    nlohmann::ordered_json object = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::visit([&](const auto& v) { object[table.columns[i]] = v; }, row[i]);
    }
    array.push_back(std::move(object));
  }
  return array.dump(2) + '\n';
}

CommandResult cmd_check(const RunConfig& config) {
  if (config.trials < 0) {
    throw ConfigError("--trials must be non-negative");
  }
  CheckOptions options;
  options.trials = config.trials;
  options.seed = config.seed;
  options.inject_sign_fault = config.inject_fault;
  const CheckReport report = run_check(options);

  CommandResult result;
  result.table.columns = {"suite", "trials", "max_deviation", "tolerance", "status"};
  for (const SuiteResult& s : report.suites) {
    result.table.rows.push_back({s.name, static_cast<long long>(s.trials),
                                 s.max_deviation, s.tolerance,
                                 std::string(to_string(s.status))});
  }
  const auto failing = report.failing_suites();
  if (!failing.empty()) {
    result.breach = "tolerance breached in:";
    for (const auto& name : failing) result.breach += " " + name;
  }
  return result;
}

CommandResult cmd_wstate(const RunConfig& config) {
  const auto [lo, hi] = qubit_range(config, 2, 2);
  const auto schemes = schemes_from(config, {CouplingScheme::w_plus()});

  CommandResult result;
  result.table.columns = {"M", "scheme", "r", "tau_star", "a1", "a",
                          "photon_abs", "classification"};
  for (int m = lo; m <= hi; ++m) {
    for (const auto& scheme : schemes) {
      const WStateResult w = generate_w_state(m, scheme, config.m_odd);
      result.table.rows.push_back(
          {static_cast<long long>(m), scheme_label(scheme), w.report.ratio,
           w.report.trapping_time, w.state.qubit(1).real(), w.state.qubit(2).real(),
           std::abs(w.state.photon()), std::string(to_string(w.report.classification))});
    }
  }
  return result;
}

CommandResult cmd_anticlone(const RunConfig& config) {
  const auto [lo, hi] = qubit_range(config, 2, 30);
  if (lo < 2) throw ConfigError("anticlone needs M >= 2");

  CommandResult result;
  result.table.columns = {"M",       "F_iden",  "F_plusminus", "F_sep",
                          "F1_iden", "F1_plus", "F1_minus",    "F1_sep",
                          "F_plus_minus_F_sep_next"};
  const auto check = [&](double pipeline, double closed, const std::string& what, int m) {
    if (!(std::abs(pipeline - closed) <= kPipelineTolerance) && result.breach.empty()) {
      result.breach = "pipeline and closed form disagree for " + what +
                      " at M=" + std::to_string(m);
    }
  };

  for (int m = lo; m <= hi; ++m) {
    const ProtocolReport iden = run_anticlone(m, CouplingScheme::identical(), config.alpha, config.m_odd);
    const ProtocolReport plus = run_anticlone(m, CouplingScheme::w_plus(), config.alpha, config.m_odd);
    const ProtocolReport minus = run_anticlone(m, CouplingScheme::w_minus(), config.alpha, config.m_odd);
    const ProtocolReport sep = run_anticlone(m, CouplingScheme::w_prime(), config.alpha, config.m_odd);

    const FidelityPair c_iden = fidelity_curve(m, CouplingScheme::identical());
    const FidelityPair c_plus = fidelity_curve(m, CouplingScheme::w_plus());
    const FidelityPair c_minus = fidelity_curve(m, CouplingScheme::w_minus());
    const FidelityPair c_sep = fidelity_curve(m, CouplingScheme::w_prime());
    check(iden.fidelities[1], c_iden.target, "F_iden", m);
    check(plus.fidelities[1], c_plus.target, "F_plus", m);
    check(minus.fidelities[1], c_minus.target, "F_minus", m);
    check(sep.fidelities[1], c_sep.target, "F_sep", m);
    check(iden.fidelities[0], c_iden.input, "F1_iden", m);
    check(plus.fidelities[0], c_plus.input, "F1_plus", m);
    check(minus.fidelities[0], c_minus.input, "F1_minus", m);
    check(sep.fidelities[0], c_sep.input, "F1_sep", m);

    const double sep_next = fidelity_curve(m + 1, CouplingScheme::w_prime()).target;
    result.table.rows.push_back(
        {static_cast<long long>(m), iden.fidelities[1], plus.fidelities[1],
         sep.fidelities[1], iden.fidelities[0], plus.fidelities[0],
         minus.fidelities[0], sep.fidelities[0], c_plus.target - sep_next});
  }
  return result;
}

CommandResult cmd_decoherence(const RunConfig& config) {
  const auto [lo, hi] = qubit_range(config, 2, 20);
  if (lo < 2) throw ConfigError("decoherence needs M >= 2");
  const auto schemes =
      schemes_from(config, {CouplingScheme::w_plus(), CouplingScheme::w_prime()});

  CommandResult result;
  result.table.columns = {"M", "scheme", "r", "tau_c", "F_r", "P_no_click"};
  for (int m = lo; m <= hi; ++m) {
    for (const auto& scheme : schemes) {
      const DecoherenceReport rep =
          decohered_fidelity(m, scheme, config.gamma_decay, config.kappa, config.m_odd);
      double p = rep.no_click;
      if (config.theta) {
        // phi_0 never decays; the excited branch carries weight cos^2(theta/2).
        const double s = std::sin(*config.theta / 2.0);
        p = s * s + (1.0 - s * s) * rep.no_click;
      }
      result.table.rows.push_back({static_cast<long long>(m), scheme_label(scheme),
                                   rep.ratio, rep.trapping_time_c, rep.fidelity, p});
    }
  }
  return result;
}

CommandResult cmd_scan(const RunConfig& config) {
  const auto [m, m_hi] = qubit_range(config, 4, 4);
  if (m != m_hi) throw ConfigError("scan takes a single --m");
  if (m < 2) throw ConfigError("scan needs M >= 2");

  const double r_max = 4.0 * std::sqrt(static_cast<double>(m));
  RatioGrid grid{r_max / 80.0, r_max, 80};
  if (config.r_grid) grid = parse_grid(*config.r_grid);
  if (grid.count <= 0 || !(grid.lo <= grid.hi)) {
    throw ConfigError("empty r-grid");
  }
  if (!(grid.lo > 0.0)) {
    throw ConfigError("r-grid values must be strictly positive");
  }

  CommandResult result;
  result.table.columns = {"kind", "r", "a1", "a", "F_target", "F_input"};
  const auto emit = [&](const std::string& kind, double r) {
    const TrappedAmplitudes t = trapped_amplitudes(m, r);
    // Anti-clone phase: cos(alpha - mu) = -1.
    result.table.rows.push_back(
        {kind, r, t.a1, t.a, 0.5 * (1.0 - t.a), 0.5 * (1.0 - t.a1)});
  };
  for (int i = 0; i < grid.count; ++i) {
    const double r = grid.count == 1
                         ? grid.lo
                         : grid.lo + (grid.hi - grid.lo) * i / (grid.count - 1);
    emit("grid", r);
  }
  for (const RatioObjective objective :
       {RatioObjective::w_symmetry, RatioObjective::target_fidelity,
        RatioObjective::separable_transfer}) {
    for (double r : optimize_coupling_ratio(m, objective)) {
      emit("optimum_" + std::string(to_string(objective)), r);
    }
  }
  return result;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  std::string command;
  std::optional<int> m_single;
  std::optional<std::string> m_range;
  std::string format = "csv";

  CLI::App app{"Qubit-cavity machine: W states, anti-cloning and no-click dynamics", "qcm"};
  app.set_config("--config", "", "key = value file; command-line flags take precedence");
  app.add_option("command", command, "check | wstate | anticlone | decoherence | scan")
      ->required()
      ->check(CLI::IsMember({"check", "wstate", "anticlone", "decoherence", "scan"}));
  auto* m_opt = app.add_option("--m", m_single, "Number of qubits");
  app.add_option("--m-range", m_range, "Inclusive qubit range A:B")->excludes(m_opt);
  app.add_option("--scheme", config.scheme, "identical | w_plus | w_minus | w_prime");
  app.add_option("--r", config.ratio, "Explicit coupling ratio gamma_1/gamma");
  app.add_option("--gamma-decay", config.gamma_decay, "Qubit dipole decay rate")
      ->capture_default_str();
  app.add_option("--kappa", config.kappa, "Cavity decay rate")->capture_default_str();
  app.add_option("--alpha", config.alpha, "Input qubit phase (radians)")
      ->capture_default_str();
  app.add_option("--theta", config.theta, "Input qubit polar angle (radians)");
  app.add_option("--m-odd", config.m_odd, "Odd trapping index")->capture_default_str();
  app.add_option("--format", format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", config.out_path, "Output file (default: stdout)");
  app.add_option("--trials", config.trials, "Randomized trials for check")
      ->capture_default_str();
  app.add_option("--seed", config.seed, "Seed for check")->capture_default_str();
  app.add_option("--r-grid", config.r_grid, "Ratio grid lo:hi:count for scan");
  app.add_flag("--inject-fault", config.inject_fault,
               "Corrupt one propagator entry (exercises check failure)")
      ->group("");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "qcm: " << e.what() << '\n';
    return kConfigError;
  }

  try {
    if (m_single) {
      config.m_first = *m_single;
      config.m_last = *m_single;
    } else if (m_range) {
      const auto colon = m_range->find(':');
      if (colon == std::string::npos) throw ConfigError("--m-range must be A:B");
      try {
        config.m_first = std::stoi(m_range->substr(0, colon));
        config.m_last = std::stoi(m_range->substr(colon + 1));
      } catch (const std::exception&) {
        throw ConfigError("--m-range must be A:B");
      }
    }
    config.format = format == "json" ? OutputFormat::json : OutputFormat::csv;

    static const std::map<std::string, Command> kCommands = {
        {"check", Command::check},
        {"wstate", Command::wstate},
        {"anticlone", Command::anticlone},
        {"decoherence", Command::decoherence},
        {"scan", Command::scan}};
    config.command = kCommands.at(command);

    CommandResult result;
    switch (config.command) {
      case Command::check: result = cmd_check(config); break;
      case Command::wstate: result = cmd_wstate(config); break;
      case Command::anticlone: result = cmd_anticlone(config); break;
      case Command::decoherence: result = cmd_decoherence(config); break;
      case Command::scan: result = cmd_scan(config); break;
    }

    const std::string text =
        config.format == OutputFormat::json ? to_json(result.table) : to_csv(result.table);
    if (config.out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(config.out_path, std::ios::binary);
      if (!file) throw ConfigError("cannot open output file " + config.out_path);
      file << text;
    }
    if (!result.breach.empty()) {
      err << "qcm " << command << ": " << result.breach << '\n';
      return kBreach;
    }
    return kSuccess;
  } catch (const ConfigError& e) {
    err << "qcm " << command << ": configuration error: " << e.what() << '\n';
    return kConfigError;
  } catch (const OverdampedError& e) {
    err << "qcm " << command << ": " << e.what() << '\n';
    return kConfigError;
  } catch (const NoRootError& e) {
    err << "qcm " << command << ": " << e.what() << '\n';
    return kConfigError;
  } catch (const DimensionError& e) {
    err << "qcm " << command << ": " << e.what() << '\n';
    return kConfigError;
  } catch (const Error& e) {
    err << "qcm " << command << ": " << e.what() << '\n';
    return kBreach;
  }
}

}  // namespace qcm::cli
