"""Entanglement-witness constraints on Yukawa-type interactions."""

from ._core import (
    Coupling,
    EwitError,
    Geometry,
    ModifiedNewtonian,
    PseudoscalarAlp,
    ScalarAlp,
    WitnessTarget,
    Yukawa,
    alpha_from_witness,
    alpha_g_from_witness,
    evaluate_witness,
    g_p_from_witness,
    g_s_from_witness,
    ion_trap_delta_x,
    mass_ev_to_range_m,
    omega_ent_from_witness,
    phase_pair,
    potential_energy,
    preset_config,
    preset_names,
    range_m_to_mass_ev,
    scan,
    validate,
    witness_closed_form,
)

__all__ = [name for name in dir() if not name.startswith("_")]
