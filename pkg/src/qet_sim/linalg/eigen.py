"""Hermitian eigendecomposition, spectral time evolution and expectation values."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from loguru import logger
from numpy.typing import NDArray

from qet_sim.linalg.exceptions import NumericFailureError, QETValidationError
from qet_sim.linalg.operators import (
    ComplexArray,
    HermitianOperator,
    Ket,
    Operator,
    UnitaryOperator,
    identity,
)


JACOBI_TOLERANCE = 1e-14
JACOBI_MAX_SWEEPS = 100
PHASE_TIE_TOLERANCE = 1e-12
IMAGINARY_RESIDUE_TOLERANCE = 1e-12


@dataclass(frozen=True, eq=False)
class EigenSystem:
    """Ascending eigenvalues with their orthonormal, phase-fixed eigenvectors."""

    eigenvalues: NDArray[np.float64]
    eigenvectors: tuple[Ket, ...]

    def __post_init__(self) -> None:
        values = np.array(self.eigenvalues, dtype=np.float64, copy=True)
        if values.ndim != 1 or values.size != len(self.eigenvectors):
            raise QETValidationError("Eigenvalue and eigenvector counts differ")
        if np.any(np.diff(values) < 0):
            raise QETValidationError("Eigenvalues must be sorted ascending")
        values.flags.writeable = False
        object.__setattr__(self, "eigenvalues", values)

    @property
    def dim(self) -> int:
        return int(self.eigenvalues.size)

    @property
    def vector_matrix(self) -> ComplexArray:
        """Eigenvectors as the columns of one matrix, in eigenvalue order."""
        return np.column_stack([vec.amplitudes for vec in self.eigenvectors])

    def reconstruct(self) -> Operator:
        """Return sum_i lambda_i |v_i><v_i|."""
        vectors = self.vector_matrix
        return Operator((vectors * self.eigenvalues) @ vectors.conj().T)


def _off_diagonal_norm(a: ComplexArray) -> float:
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def _rotate(a: ComplexArray, v: ComplexArray, p: int, q: int) -> None:
    """Annihilate a[p, q] with one complex Jacobi rotation, updating a and v in place."""
    apq = a[p, q]
    r = abs(apq)
    if r == 0.0:
        return
    phase = apq / r
    alpha = a[p, p].real
    beta = a[q, q].real

    tau = (beta - alpha) / (2.0 * r)
    t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + math.sqrt(tau * tau + 1.0))
    c = 1.0 / math.sqrt(t * t + 1.0)
    s = t * c

    rotation = np.eye(a.shape[0], dtype=np.complex128)
    rotation[p, p] = c
    rotation[p, q] = s
    rotation[q, p] = -s * phase.conjugate()
    rotation[q, q] = c * phase.conjugate()

    a[:, :] = rotation.conj().T @ a @ rotation
    a[p, q] = 0.0
    a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real
    v[:, :] = v @ rotation


def _fix_phase(vector: ComplexArray) -> ComplexArray:
    """Make the largest-magnitude component real and positive (lowest index on ties)."""
    magnitudes = np.abs(vector)
    pivot = int(np.flatnonzero(magnitudes >= magnitudes.max() - PHASE_TIE_TOLERANCE)[0])
    phase = vector[pivot] / magnitudes[pivot]
    fixed = vector / phase
    fixed[pivot] = magnitudes[pivot]
    return fixed


def hermitian_eig(
    op: HermitianOperator,
    tolerance: float = JACOBI_TOLERANCE,
    max_sweeps: int = JACOBI_MAX_SWEEPS,
) -> EigenSystem:
    """Diagonalize a Hermitian operator with cyclic Jacobi rotations.

    Convergence is declared when the off-diagonal Frobenius norm drops below
    ``tolerance`` times max(1, ||op||_F). Output is deterministic for identical
    input: eigenvalues ascending, eigenvectors phase-fixed.

    Args:
        op: Operator to diagonalize
        tolerance: Relative off-diagonal threshold
        max_sweeps: Maximum number of full cyclic sweeps

    Returns:
        Eigen system of ``op``

    Raises:
        NumericFailureError: If the sweeps do not converge
    """
    a = np.array(op.matrix, dtype=np.complex128, copy=True)
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)
    threshold = tolerance * max(1.0, float(np.linalg.norm(a)))

    sweeps = 0
    while _off_diagonal_norm(a) >= threshold:
        if sweeps == max_sweeps:
            raise NumericFailureError(
                f"Jacobi eigensolver did not converge after {max_sweeps} sweeps "
                f"(off-diagonal norm {_off_diagonal_norm(a):.3e})"
            )
        for p in range(n - 1):
            for q in range(p + 1, n):
                _rotate(a, v, p, q)
        sweeps += 1

    logger.debug(f"Jacobi converged in {sweeps} sweeps for dim {n}")

    eigenvalues = np.diag(a).real
    order = np.argsort(eigenvalues, kind="stable")
    eigenvectors = tuple(Ket(_fix_phase(v[:, i])) for i in order)
    return EigenSystem(eigenvalues=eigenvalues[order], eigenvectors=eigenvectors)


def evolve_from_eigensystem(eig: EigenSystem, t: float) -> UnitaryOperator:
    """Return exp(-i H t) from a precomputed eigen system of H."""
    if not math.isfinite(t):
        raise QETValidationError(f"Time must be finite, got {t!r}")
    if t == 0.0:
        return UnitaryOperator(identity(eig.dim).matrix)
    vectors = eig.vector_matrix
    phases = np.exp(-1j * eig.eigenvalues * t)
    return UnitaryOperator((vectors * phases) @ vectors.conj().T)


def evolve(h_op: HermitianOperator, t: float) -> UnitaryOperator:
    """Return the propagator exp(-i H t) via spectral decomposition.

    Negative times are allowed; t = 0 returns the identity exactly.
    """
    if not math.isfinite(t):
        raise QETValidationError(f"Time must be finite, got {t!r}")
    if t == 0.0:
        return UnitaryOperator(identity(h_op.dim).matrix)
    return evolve_from_eigensystem(hermitian_eig(h_op), t)


def expectation(state: Ket, op: HermitianOperator) -> float:
    """Return <state|op|state> as a real number.

    Raises:
        QETValidationError: On dimension mismatch
        NumericFailureError: If the imaginary residue exceeds 1e-12 (scaled by
            the largest entry of ``op`` when that exceeds one)
    """
    value = complex(np.vdot(state.amplitudes, op.apply(state)))
    scale = max(1.0, float(np.max(np.abs(op.matrix))))
    if abs(value.imag) > IMAGINARY_RESIDUE_TOLERANCE * scale:
        raise NumericFailureError(
            f"Expectation value has imaginary residue {value.imag:.3e}"
        )
    return value.real
