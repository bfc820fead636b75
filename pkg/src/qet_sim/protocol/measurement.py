"""Alice's sigma^x measurement and the energy it leaves in the system."""

from __future__ import annotations

import math
from collections.abc import Iterable
from dataclasses import dataclass

import numpy as np
from loguru import logger
from numpy.typing import NDArray

from qet_sim.linalg import (
    EigenSystem,
    HermitianOperator,
    Ket,
    NumericFailureError,
    QETValidationError,
    embed,
    evolve_from_eigensystem,
    expectation,
    hermitian_eig,
    pauli,
)
from qet_sim.model import GroundState, ModelOperators


PROBABILITY_FLOOR = 1e-14
PROBABILITY_SUM_TOLERANCE = 1e-12


@dataclass(frozen=True, eq=False)
class MeasurementBranch:
    """One outcome (-1)^mu of Alice's measurement."""

    mu: int
    prob: float
    state: Ket


@dataclass(frozen=True, eq=False)
class MeasurementEnsemble:
    """Both post-measurement branches, kept as separate pure states."""

    branches: tuple[MeasurementBranch, ...]

    def __post_init__(self) -> None:
        if len(self.branches) != 2:
            raise QETValidationError(
                f"Ensemble needs exactly 2 branches, got {len(self.branches)}"
            )
        if sorted(branch.mu for branch in self.branches) != [0, 1]:
            raise QETValidationError("Branch outcomes must be mu = 0 and mu = 1")
        total = sum(branch.prob for branch in self.branches)
        if abs(total - 1.0) > PROBABILITY_SUM_TOLERANCE:
            raise QETValidationError(f"Branch probabilities sum to {total!r}, not 1")

    def branch(self, mu: int) -> MeasurementBranch:
        for branch in self.branches:
            if branch.mu == mu:
                return branch
        raise QETValidationError(f"No branch with mu={mu}")


def measurement_projectors() -> tuple[HermitianOperator, HermitianOperator]:
    """Return P_A(0), P_A(1) with P_A(mu) = (I + (-1)^mu sx_A) / 2."""
    sx_a = embed(pauli("x"), "A").matrix
    eye = np.eye(4, dtype=np.complex128)
    return (
        HermitianOperator(0.5 * (eye + sx_a)),
        HermitianOperator(0.5 * (eye - sx_a)),
    )


def apply_measurement(g: GroundState) -> MeasurementEnsemble:
    """Project the ground state onto both sigma_A^x outcomes.

    Raises:
        NumericFailureError: If a branch has probability below 1e-14
    """
    branches = []
    for mu, projector in enumerate(measurement_projectors()):
        prob = expectation(g.ket, projector)
        if prob < PROBABILITY_FLOOR:
            raise NumericFailureError(
                f"Branch mu={mu} has probability {prob:.3e}; cannot normalize"
            )
        state = Ket(projector.apply(g.ket) / math.sqrt(prob))
        branches.append(MeasurementBranch(mu=mu, prob=prob, state=state))
        logger.debug(f"Branch mu={mu}: p={prob!r}")
    return MeasurementEnsemble(branches=tuple(branches))


def injected_energy(ens: MeasurementEnsemble, ops: ModelOperators) -> float:
    """Average total energy after the measurement (E_A, since E_0 = 0)."""
    return sum(
        branch.prob * expectation(branch.state, ops.h_total) for branch in ens.branches
    )


def _evolved(eig: EigenSystem, state: Ket, t: float) -> Ket:
    return Ket(evolve_from_eigensystem(eig, t).apply(state))


def _check_times(times: Iterable[float]) -> list[float]:
    checked = [float(t) for t in times]
    for t in checked:
        if not math.isfinite(t) or t < 0:
            raise QETValidationError(f"Times must be finite and non-negative, got {t!r}")
    return checked


def energy_curve(
    ens: MeasurementEnsemble,
    ops: ModelOperators,
    times: Iterable[float],
    eig: EigenSystem | None = None,
) -> NDArray[np.float64]:
    """Evaluate <H_B(t)> for many times from one diagonalization of H.

    Pass ``eig`` (the eigen system of ops.h_total) to skip the diagonalization.
    """
    checked = _check_times(times)
    if eig is None:
        eig = hermitian_eig(ops.h_total)
    values = [
        sum(
            branch.prob * expectation(_evolved(eig, branch.state, t), ops.h_b)
            for branch in ens.branches
        )
        for t in checked
    ]
    return np.array(values, dtype=np.float64)


def energy_at_B(ens: MeasurementEnsemble, ops: ModelOperators, t: float) -> float:
    """Average <H_B> after the branches evolve freely for time t."""
    return float(energy_curve(ens, ops, [t])[0])


def ensemble_energy(ens: MeasurementEnsemble, ops: ModelOperators, t: float) -> float:
    """Average total energy after free evolution for time t (conserved)."""
    (t,) = _check_times([t])
    eig = hermitian_eig(ops.h_total)
    return sum(
        branch.prob * expectation(_evolved(eig, branch.state, t), ops.h_total)
        for branch in ens.branches
    )
