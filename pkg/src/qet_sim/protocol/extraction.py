"""Bob's outcome-conditioned rotation and the energy ledger of one run."""

from __future__ import annotations

import math
from collections.abc import Callable

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict, model_validator

from qet_sim.linalg import (
    Ket,
    QETValidationError,
    UnitaryOperator,
    embed,
    evolve,
    expectation,
    pauli,
)
from qet_sim.model import (
    ModelOperators,
    ModelParams,
    build_model,
    ground_state_numeric,
)
from qet_sim.protocol.measurement import (
    MeasurementEnsemble,
    apply_measurement,
    injected_energy,
)


LEDGER_TOLERANCE = 1e-12


class BranchEnergy(BaseModel):
    """Energy of one branch just before and just after Bob's rotation."""

    model_config = ConfigDict(frozen=True)

    mu: int
    prob: float
    energy_before: float
    energy_after: float


class ProtocolTrace(BaseModel):
    """End-to-end energy ledger of one protocol run."""

    model_config = ConfigDict(frozen=True)

    params: ModelParams
    theta: float
    wait_time: float
    swap_outcomes: bool = False
    e_injected: float
    e_after_operation: float
    e_extracted: float
    branch_details: list[BranchEnergy]

    @model_validator(mode="after")
    def _check_ledger(self) -> ProtocolTrace:
        if self.e_injected < -LEDGER_TOLERANCE:
            raise ValueError(f"Injected energy is negative: {self.e_injected!r}")
        balance = self.e_injected - self.e_after_operation - self.e_extracted
        if abs(balance) > LEDGER_TOLERANCE:
            raise ValueError(f"Energy ledger does not balance (residual {balance!r})")
        return self


def bob_unitary(mu: int, theta: float) -> UnitaryOperator:
    """Return U_B(mu) = I cos(theta) - i (-1)^mu sy_B sin(theta) on the two-qubit space."""
    if mu not in (0, 1):
        raise QETValidationError(f"mu must be 0 or 1, got {mu!r}")
    if not math.isfinite(theta):
        raise QETValidationError(f"theta must be finite, got {theta!r}")
    sign = 1.0 if mu == 0 else -1.0
    single = (
        math.cos(theta) * np.eye(2, dtype=np.complex128)
        - 1j * sign * math.sin(theta) * pauli("y").matrix
    )
    return embed(UnitaryOperator(single), "B")


def local_unitary_energy(
    state: Ket, ops: ModelOperators, unitary: UnitaryOperator
) -> float:
    """Return <state| U^dagger H U |state>."""
    return expectation(Ket(unitary.apply(state)), ops.h_total)


def extracted_energy(
    ens: MeasurementEnsemble,
    ops: ModelOperators,
    theta: float,
    wait_time: float = 0.0,
    swap_outcomes: bool = False,
) -> ProtocolTrace:
    """Run Bob's step on every branch and account for the energy moved out.

    Each branch evolves freely for ``wait_time`` and then receives U_B(mu); the
    extracted energy is the drop in average total energy, i.e. what the
    operating device takes away from the two qubits.

    Args:
        ens: Post-measurement ensemble
        ops: Model operators
        theta: Rotation angle in radians
        wait_time: Delay between measurement and rotation (1/energy units)
        swap_outcomes: Apply U_B(1 - mu) to branch mu instead of U_B(mu)

    Returns:
        Protocol trace with the full energy ledger

    Raises:
        QETValidationError: If wait_time is negative or not finite
    """
    if not math.isfinite(wait_time) or wait_time < 0:
        raise QETValidationError(f"wait_time must be finite and >= 0, got {wait_time!r}")

    propagator = evolve(ops.h_total, wait_time)
    e_injected = injected_energy(ens, ops)

    details = []
    for branch in ens.branches:
        evolved = Ket(propagator.apply(branch.state))
        mu = 1 - branch.mu if swap_outcomes else branch.mu
        rotated = bob_unitary(mu, theta)
        details.append(
            BranchEnergy(
                mu=branch.mu,
                prob=branch.prob,
                energy_before=expectation(evolved, ops.h_total),
                energy_after=local_unitary_energy(evolved, ops, rotated),
            )
        )

    e_after = sum(detail.prob * detail.energy_after for detail in details)
    e_extracted = e_injected - e_after
    logger.debug(
        f"theta={theta!r} wait={wait_time!r}: E_A={e_injected!r} E_B={e_extracted!r}"
    )
    return ProtocolTrace(
        params=ops.params,
        theta=theta,
        wait_time=wait_time,
        swap_outcomes=swap_outcomes,
        e_injected=e_injected,
        e_after_operation=e_after,
        e_extracted=e_extracted,
        branch_details=details,
    )


def prepare_run(params: ModelParams) -> tuple[ModelOperators, MeasurementEnsemble]:
    """Build the model, diagonalize it and apply Alice's measurement.

    The ground state comes from diagonalization, so everything downstream is an
    oracle independent of the closed-form expressions.
    """
    ops = build_model(params)
    ensemble = apply_measurement(ground_state_numeric(ops))
    return ops, ensemble


def extraction_objective(
    ens: MeasurementEnsemble,
    ops: ModelOperators,
    wait_time: float = 0.0,
    swap_outcomes: bool = False,
) -> Callable[[float], float]:
    """Return theta -> extracted energy with the waiting step precomputed.

    Same ledger as extracted_energy, without building a trace per call; used by
    searches that evaluate hundreds of angles.
    """
    if not math.isfinite(wait_time) or wait_time < 0:
        raise QETValidationError(f"wait_time must be finite and >= 0, got {wait_time!r}")
    propagator = evolve(ops.h_total, wait_time)
    e_injected = injected_energy(ens, ops)
    sy_b = embed(pauli("y"), "B").matrix
    hamiltonian = ops.h_total.matrix
    prepared = []
    for branch in ens.branches:
        vector = propagator.apply(branch.state)
        mu = 1 - branch.mu if swap_outcomes else branch.mu
        sign = 1.0 if mu == 0 else -1.0
        prepared.append((branch.prob, vector, sign * (sy_b @ vector)))

    def objective(theta: float) -> float:
        cos, sin = math.cos(theta), math.sin(theta)
        e_after = 0.0
        for prob, vector, rotated_part in prepared:
            # U_B(mu) v = cos(theta) v - i (-1)^mu sin(theta) sy_B v
            rotated = cos * vector - 1j * sin * rotated_part
            e_after += prob * float(np.vdot(rotated, hamiltonian @ rotated).real)
        return e_injected - e_after

    return objective
