# Copyright 2026 The qcm Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math

import numpy as np
import pytest

import qcm


def test_version():
    assert qcm.__version__ == "0.1.0"


def test_hamiltonian_and_propagator():
    couplings = [1.0, 2.0, 2.0]
    assert qcm.collective_rabi(couplings) == pytest.approx(3.0)
    h = np.asarray(qcm.build_hamiltonian(couplings))
    assert h.shape == (4, 4)
    assert np.allclose(h, h.conj().T)
    u = np.asarray(qcm.closed_form_propagator(couplings, 0.8))
    assert np.allclose(u.conj().T @ u, np.eye(4), atol=1e-12)


def test_evolve_returns_to_vacuum_at_trapping_time():
    couplings = [math.sqrt(3.0), 1.0, 1.0, 1.0]
    tau = qcm.trapping_time(couplings)
    amps = np.asarray(qcm.evolve(couplings, 0.0, 0.0, tau))
    assert amps.shape == (6,)
    assert abs(amps[-1]) < 1e-12
    assert np.sum(np.abs(amps) ** 2) == pytest.approx(1.0, abs=1e-12)


def test_w_state_generation():
    amps, report = qcm.generate_w_state(4, "w_plus")
    assert report["classification"] == "symmetric_W"
    assert report["r"] == pytest.approx(3.0)
    assert np.allclose(np.abs(amps[1:5]), 0.5, atol=1e-10)
    a1, a = qcm.trapped_amplitudes(3, math.sqrt(2.0))
    assert a1 == pytest.approx(0.0, abs=1e-12)
    assert a == pytest.approx(-1.0 / math.sqrt(2.0))


def test_anticlone_optimum():
    report = qcm.run_anticlone(2, "w_plus", 0.3)
    assert report["fidelities"][1] == pytest.approx(0.5 * (1 + 1 / math.sqrt(2)), abs=1e-12)
    target, source = qcm.fidelity_curve(5, "identical")
    assert target == pytest.approx(0.7)
    assert source == pytest.approx(0.2)


def test_optimizer():
    roots = qcm.optimize_coupling_ratio(4, "w_symmetry")
    assert roots == pytest.approx([1.0, 3.0], abs=1e-6)


def test_decoherence():
    rows = qcm.figure2_scan(2, 4)
    assert [(row["m"], row["scheme"]) for row in rows] == [
        (2, "w_plus"), (2, "w_prime"), (3, "w_plus"), (3, "w_prime"), (4, "w_plus"), (4, "w_prime")]
    assert rows[0]["no_click"] >= 0.97
    r = qcm.scheme_ratio(3, "w_plus")
    tau = qcm.renormalized_trapping_time(3, r, 0.001, 0.02)
    amps = qcm.conditional_amplitudes(3, r, 0.001, 0.02, tau)
    assert abs(amps["b_photon"]) < 1e-14
    assert qcm.decohered_fidelity(3, "w_prime", 0.01, 0.01)["fidelity"] == pytest.approx(1.0, abs=1e-12)


def test_check_report():
    passed, rows = qcm.run_check(trials=10, seed=3)
    assert passed
    suites = {s["suite"]: s for s in rows}
    assert suites["unitarity"]["status"] == "pass"
    assert suites["conditional_decaying_offset"]["status"] == "consistent"


def test_errors_are_mapped():
    with pytest.raises(qcm.ConfigError):
        qcm.generate_w_state(1, "w_plus")
    with pytest.raises(qcm.OverdampedError):
        qcm.decohered_fidelity(2, "w_prime", 0.0, 5.0)
    with pytest.raises(qcm.QcmError):
        qcm.scheme_ratio(3, "nonsense")
