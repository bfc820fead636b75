"""Two-qubit minimal QET Hamiltonian and its ground state."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np
from loguru import logger
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field

from qet_sim.linalg import (
    HermitianOperator,
    Ket,
    NumericFailureError,
    QETValidationError,
    embed,
    expectation,
    hermitian_eig,
    kron,
    pauli,
)


GAP_TOLERANCE = 1e-8
ZERO_POINT_TOLERANCE = 1e-10

GroundStateSource = Literal["analytic", "numeric"]


class ModelParams(BaseModel):
    """Couplings of the Hamiltonian, both positive energies."""

    model_config = ConfigDict(frozen=True)

    h: float = Field(gt=0, allow_inf_nan=False, description="Local field strength")
    k: float = Field(gt=0, allow_inf_nan=False, description="Ising coupling")

    @property
    def root(self) -> float:
        """sqrt(4h^2 + k^2), the scale appearing in every zero-point shift."""
        return math.hypot(2.0 * self.h, self.k)

    def scaled(self, factor: float) -> ModelParams:
        """Return (factor*h, factor*k)."""
        return ModelParams(h=self.h * factor, k=self.k * factor)


@dataclass(frozen=True, eq=False)
class ModelOperators:
    """H_A, H_B, V and H = H_A + H_B + V for one parameter set."""

    params: ModelParams
    h_a: HermitianOperator
    h_b: HermitianOperator
    v: HermitianOperator
    h_total: HermitianOperator


@dataclass(frozen=True, eq=False)
class GroundState:
    """Ground-state ket tagged with how it was obtained."""

    ket: Ket
    source: GroundStateSource
    eigenvalue: float | None = None


class ZeroPointReport(BaseModel):
    """Ground-state expectations of the three Hamiltonian terms."""

    model_config = ConfigDict(frozen=True)

    h_a: float
    h_b: float
    v: float
    tolerance: float = ZERO_POINT_TOLERANCE
    passed: bool


def build_model(params: ModelParams) -> ModelOperators:
    """Build the shifted Hamiltonian terms for (h, k).

    H_A = h sz_A + 2h^2/r, H_B = h sz_B + 2h^2/r, V = k sx_A sx_B + k^2/r with
    r = sqrt(4h^2 + k^2); each shift is a multiple of the 4x4 identity.

    Args:
        params: Model couplings

    Returns:
        Operators of the model
    """
    h, k, r = params.h, params.k, params.root
    eye = np.eye(4, dtype=np.complex128)

    h_a = HermitianOperator(
        h * embed(pauli("z"), "A").matrix + (2.0 * h * h / r) * eye
    )
    h_b = HermitianOperator(
        h * embed(pauli("z"), "B").matrix + (2.0 * h * h / r) * eye
    )
    v = HermitianOperator(
        k * kron(pauli("x"), pauli("x")).matrix + (k * k / r) * eye
    )
    h_total = HermitianOperator(h_a.matrix + h_b.matrix + v.matrix)

    logger.debug(f"Built model for h={h}, k={k}")
    return ModelOperators(params=params, h_a=h_a, h_b=h_b, v=v, h_total=h_total)


def analytic_ground_amplitudes(h: float, k: float) -> NDArray[np.float64]:
    """Evaluate the closed-form ground state in the |++>, |+->, |-+>, |--> basis.

    Unlike ModelParams this accepts h = 0, so the h -> 0+ limit can be evaluated.

    Raises:
        QETValidationError: If h < 0, k <= 0 or either is not finite
    """
    if not (math.isfinite(h) and math.isfinite(k)) or h < 0 or k <= 0:
        raise QETValidationError(f"Need h >= 0 and k > 0 (got h={h}, k={k})")
    r = math.hypot(2.0 * h, k)
    # 1 - 2h/r rewritten as k^2 / (r (r + 2h)) to avoid cancellation when k << h
    plus_plus = math.sqrt(k * k / (2.0 * r * (r + 2.0 * h)))
    minus_minus = math.sqrt((r + 2.0 * h) / (2.0 * r))
    return np.array([plus_plus, 0.0, 0.0, -minus_minus])


def ground_state_analytic(params: ModelParams) -> GroundState:
    """Ground state from the closed-form amplitudes."""
    amplitudes = analytic_ground_amplitudes(params.h, params.k)
    return GroundState(ket=Ket(amplitudes), source="analytic")


def ground_state_numeric(ops: ModelOperators) -> GroundState:
    """Ground state from diagonalizing H.

    Raises:
        NumericFailureError: If the two lowest eigenvalues are within 1e-8
    """
    eig = hermitian_eig(ops.h_total)
    gap = float(eig.eigenvalues[1] - eig.eigenvalues[0])
    if gap <= GAP_TOLERANCE:
        raise NumericFailureError(
            f"Ground space is near-degenerate (gap {gap:.3e} <= {GAP_TOLERANCE}); "
            "the lowest eigenvector is not well defined"
        )
    e0 = float(eig.eigenvalues[0])
    logger.debug(f"Numeric ground energy {e0:.3e}, gap {gap:.6f}")
    return GroundState(ket=eig.eigenvectors[0], source="numeric", eigenvalue=e0)


def zero_point_check(ops: ModelOperators, g: GroundState) -> ZeroPointReport:
    """Evaluate <H_A>, <H_B>, <V> in the ground state."""
    values = [expectation(g.ket, term) for term in (ops.h_a, ops.h_b, ops.v)]
    passed = all(abs(value) <= ZERO_POINT_TOLERANCE for value in values)
    if not passed:
        logger.warning(f"Zero-point conditions violated: {values}")
    return ZeroPointReport(h_a=values[0], h_b=values[1], v=values[2], passed=passed)
