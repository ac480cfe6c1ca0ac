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

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qcm/qcm.hpp"

namespace py = pybind11;

namespace {

qcm::CouplingScheme scheme_from(const py::object& scheme) {
  if (py::isinstance<py::str>(scheme)) {
    return qcm::CouplingScheme::parse(scheme.cast<std::string>());
  }
  return qcm::CouplingScheme::custom(scheme.cast<double>());
}

py::dict report_dict(const qcm::ProtocolReport& r) {
  py::dict d;
  d["m"] = r.m;
  d["scheme"] = std::string(r.scheme.name());
  d["r"] = r.ratio;
  d["trapping_time"] = r.trapping_time;
  d["alpha"] = r.alpha;
  d["fidelities"] = r.fidelities;
  d["a1"] = r.a1;
  d["a"] = r.a;
  d["photon"] = r.photon;
  d["classification"] = std::string(qcm::to_string(r.classification));
  return d;
}

py::dict decoherence_dict(const qcm::DecoherenceReport& r) {
  py::dict d;
  d["m"] = r.m;
  d["scheme"] = std::string(r.scheme.name());
  d["r"] = r.ratio;
  d["gamma_decay"] = r.gamma_decay;
  d["kappa"] = r.kappa;
  d["tau_c"] = r.trapping_time_c;
  d["fidelity"] = r.fidelity;
  d["no_click"] = r.no_click;
  return d;
}

qcm::SystemConfig make_config(std::vector<double> couplings, double gamma_decay,
                              double kappa) {
  return qcm::SystemConfig(std::move(couplings), gamma_decay, kappa);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Qubit-cavity machine: single-excitation dynamics, W states, "
            "anti-cloning and no-click conditional evolution.";

  auto base = py::register_exception<qcm::Error>(m, "QcmError");
  py::register_exception<qcm::ConfigError>(m, "ConfigError", base.ptr());
  py::register_exception<qcm::OverdampedError>(m, "OverdampedError", base.ptr());
  py::register_exception<qcm::NoRootError>(m, "NoRootError", base.ptr());
  py::register_exception<qcm::DimensionError>(m, "DimensionError", base.ptr());
  py::register_exception<qcm::NumericalError>(m, "NumericalError", base.ptr());

  m.def("collective_rabi",
        [](std::vector<double> couplings) {
          return qcm::collective_rabi(make_config(std::move(couplings), 0.0, 0.0));
        },
        py::arg("couplings"));
  m.def("build_hamiltonian",
        [](std::vector<double> couplings) {
          return qcm::build_hamiltonian(make_config(std::move(couplings), 0.0, 0.0)).matrix;
        },
        py::arg("couplings"));
  m.def("build_dissipative_hamiltonian",
        [](std::vector<double> couplings, double gamma_decay, double kappa) {
          return qcm::build_dissipative_hamiltonian(
                     make_config(std::move(couplings), gamma_decay, kappa))
              .matrix;
        },
        py::arg("couplings"), py::arg("gamma_decay"), py::arg("kappa"));
  m.def("closed_form_propagator",
        [](std::vector<double> couplings, double t) {
          return qcm::closed_form_propagator(make_config(std::move(couplings), 0.0, 0.0), t)
              .matrix;
        },
        py::arg("couplings"), py::arg("t"));
  m.def("evolve",
        [](std::vector<double> couplings, double theta, double alpha, double t) {
          const auto config = make_config(std::move(couplings), 0.0, 0.0);
          return qcm::evolve(qcm::initial_state(theta, alpha, config), config, t)
              .amplitudes();
        },
        py::arg("couplings"), py::arg("theta"), py::arg("alpha"), py::arg("t"),
        "Amplitudes over (phi_0, phi_1..phi_M, photon) after time t.");
  m.def("trapping_time",
        [](std::vector<double> couplings, int m_odd) {
          return qcm::trapping_time(make_config(std::move(couplings), 0.0, 0.0), m_odd);
        },
        py::arg("couplings"), py::arg("m_odd") = 1);

  m.def("trapped_amplitudes",
        [](int m, double r) {
          const auto t = qcm::trapped_amplitudes(m, r);
          return py::make_tuple(t.a1, t.a);
        },
        py::arg("m"), py::arg("r"));
  m.def("scheme_ratio",
        [](int m, const py::object& scheme) { return scheme_from(scheme).ratio(m); },
        py::arg("m"), py::arg("scheme"));
  m.def("generate_w_state",
        [](int m, const py::object& scheme, int m_odd) {
          const auto w = qcm::generate_w_state(m, scheme_from(scheme), m_odd);
          return py::make_tuple(w.state.amplitudes(), report_dict(w.report));
        },
        py::arg("m"), py::arg("scheme"), py::arg("m_odd") = 1);
  m.def("fidelity_curve",
        [](int m, const py::object& scheme) {
          const auto f = qcm::fidelity_curve(m, scheme_from(scheme));
          return py::make_tuple(f.target, f.input);
        },
        py::arg("m"), py::arg("scheme"));
  m.def("run_anticlone",
        [](int m, const py::object& scheme, double alpha, int m_odd) {
          return report_dict(qcm::run_anticlone(m, scheme_from(scheme), alpha, m_odd));
        },
        py::arg("m"), py::arg("scheme"), py::arg("alpha") = 0.0, py::arg("m_odd") = 1);
  m.def("copy_fidelity",
        [](std::vector<double> couplings, int j, double t, double alpha, double mu) {
          return qcm::copy_fidelity(make_config(std::move(couplings), 0.0, 0.0), j, t,
                                    alpha, mu);
        },
        py::arg("couplings"), py::arg("j"), py::arg("t"), py::arg("alpha"), py::arg("mu"));
  m.def("optimize_coupling_ratio",
        [](int m, const std::string& objective) {
          return qcm::optimize_coupling_ratio(m, qcm::parse_objective(objective));
        },
        py::arg("m"), py::arg("objective"));

  m.def("conditional_amplitudes",
        [](int m, double r, double gamma_decay, double kappa, double t) {
          const auto c = qcm::conditional_amplitudes(m, r, gamma_decay, kappa, t);
          py::dict d;
          d["b1"] = c.b1;
          d["b"] = c.b;
          d["b_photon"] = c.b_photon;
          d["alpha_coupling"] = c.alpha_coupling;
          d["omega_c"] = c.omega_c;
          return d;
        },
        py::arg("m"), py::arg("r"), py::arg("gamma_decay"), py::arg("kappa"), py::arg("t"));
  m.def("renormalized_trapping_time", &qcm::renormalized_trapping_time, py::arg("m"),
        py::arg("r"), py::arg("gamma_decay"), py::arg("kappa"), py::arg("m_odd") = 1);
  m.def("no_click_probability", &qcm::no_click_probability, py::arg("m"), py::arg("r"),
        py::arg("gamma_decay"), py::arg("kappa"), py::arg("t"));
  m.def("decohered_fidelity",
        [](int m, const py::object& scheme, double gamma_decay, double kappa, int m_odd) {
          return decoherence_dict(
              qcm::decohered_fidelity(m, scheme_from(scheme), gamma_decay, kappa, m_odd));
        },
        py::arg("m"), py::arg("scheme"), py::arg("gamma_decay") = 0.001,
        py::arg("kappa") = 0.02, py::arg("m_odd") = 1);
  m.def("figure2_scan",
        [](int first, int last, double gamma_decay, double kappa) {
          py::list rows;
          for (const auto& r : qcm::figure2_scan(first, last, gamma_decay, kappa)) {
            rows.append(decoherence_dict(r));
          }
          return rows;
        },
        py::arg("m_first"), py::arg("m_last"), py::arg("gamma_decay") = 0.001,
        py::arg("kappa") = 0.02);

  m.def("run_check",
        [](int trials, std::uint64_t seed) {
          qcm::CheckOptions options;
          options.trials = trials;
          options.seed = seed;
          const auto report = qcm::run_check(options);
          py::list rows;
          for (const auto& s : report.suites) {
            py::dict d;
            d["suite"] = s.name;
            d["trials"] = s.trials;
            d["max_deviation"] = s.max_deviation;
            d["tolerance"] = s.tolerance;
            d["status"] = std::string(qcm::to_string(s.status));
            rows.append(d);
          }
          return py::make_tuple(report.passed(), rows);
        },
        py::arg("trials") = 200, py::arg("seed") = 42);
}
