"""Minimal QET model: Hamiltonian construction and ground state."""

from __future__ import annotations


__all__ = [
    "GroundState",
    "ModelOperators",
    "ModelParams",
    "ZeroPointReport",
    "analytic_ground_amplitudes",
    "build_model",
    "ground_state_analytic",
    "ground_state_numeric",
    "zero_point_check",
]

from qet_sim.model.hamiltonian import (
    GroundState,
    ModelOperators,
    ModelParams,
    ZeroPointReport,
    analytic_ground_amplitudes,
    build_model,
    ground_state_analytic,
    ground_state_numeric,
    zero_point_check,
)
