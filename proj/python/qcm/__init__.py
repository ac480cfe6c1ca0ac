"""Qubit-cavity machine: W-state generation, phase-covariant anti-cloning and
no-click conditional dynamics on the single-excitation subspace."""

from ._core import (
    ConfigError,
    DimensionError,
    NoRootError,
    NumericalError,
    OverdampedError,
    QcmError,
    build_dissipative_hamiltonian,
    build_hamiltonian,
    closed_form_propagator,
    collective_rabi,
    conditional_amplitudes,
    copy_fidelity,
    decohered_fidelity,
    evolve,
    fidelity_curve,
    figure2_scan,
    generate_w_state,
    no_click_probability,
    optimize_coupling_ratio,
    renormalized_trapping_time,
    run_anticlone,
    run_check,
    scheme_ratio,
    trapped_amplitudes,
    trapping_time,
)

__version__ = "0.1.0"
