"""Dense complex operators and state vectors for one and two qubits."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal, TypeVar

import numpy as np
from numpy.typing import ArrayLike, NDArray

from qet_sim.linalg.exceptions import NumericFailureError, QETValidationError


ComplexArray = NDArray[np.complex128]

# Entries of every operator and ket are complex128 scalars; finiteness is
# enforced once, when the carrier is built.
ComplexScalar = complex

PauliAxis = Literal["x", "y", "z"]
Site = Literal["A", "B"]
OperatorT = TypeVar("OperatorT", bound="Operator")

MAX_DIMENSION = 16
NORM_TOLERANCE = 1e-12
HERMITIAN_TOLERANCE = 1e-12
UNITARY_TOLERANCE = 1e-10

_PAULI_MATRICES: dict[str, list[list[complex]]] = {
    "x": [[0, 1], [1, 0]],
    "y": [[0, -1j], [1j, 0]],
    "z": [[1, 0], [0, -1]],
}


def _frozen_array(values: ArrayLike) -> ComplexArray:
    array = np.array(values, dtype=np.complex128, copy=True)
    if not np.all(np.isfinite(array)):
        raise QETValidationError("Entries must be finite (no NaN/Inf)")
    array.flags.writeable = False
    return array


@dataclass(frozen=True, eq=False)
class Ket:
    """Normalized state vector."""

    amplitudes: ComplexArray

    def __post_init__(self) -> None:
        array = _frozen_array(self.amplitudes)
        if array.ndim != 1 or array.size == 0:
            raise QETValidationError(
                f"Ket amplitudes must be a non-empty vector, got shape {array.shape}"
            )
        norm = float(np.linalg.norm(array))
        if abs(norm - 1.0) > NORM_TOLERANCE:
            raise QETValidationError(f"Ket is not normalized (norm={norm!r})")
        object.__setattr__(self, "amplitudes", array)

    @classmethod
    def from_vector(cls, vector: ArrayLike) -> Ket:
        """Build a ket by normalizing an arbitrary non-zero vector.

        Raises:
            NumericFailureError: If the vector has zero norm
        """
        array = np.asarray(vector, dtype=np.complex128)
        norm = float(np.linalg.norm(array))
        if norm == 0.0:
            raise NumericFailureError("Cannot normalize a zero vector")
        return cls(array / norm)

    @property
    def dim(self) -> int:
        return int(self.amplitudes.size)

    def inner(self, other: Ket) -> complex:
        """Return <self|other>."""
        if other.dim != self.dim:
            raise QETValidationError(
                f"Dimension mismatch: {self.dim} vs {other.dim}"
            )
        return complex(np.vdot(self.amplitudes, other.amplitudes))

    def overlap(self, other: Ket) -> float:
        """Return |<self|other>|, the phase-free comparison of two states."""
        return abs(self.inner(other))


@dataclass(frozen=True, eq=False)
class Operator:
    """Square complex matrix acting on kets of the same dimension."""

    matrix: ComplexArray

    def __post_init__(self) -> None:
        array = _frozen_array(self.matrix)
        if array.ndim != 2 or array.shape[0] != array.shape[1] or array.size == 0:
            raise QETValidationError(
                f"Operator must be a non-empty square matrix, got shape {array.shape}"
            )
        self._validate(array)
        object.__setattr__(self, "matrix", array)

    def _validate(self, array: ComplexArray) -> None:
        """Hook for subclasses that carry an algebraic invariant."""

    @property
    def dim(self) -> int:
        return int(self.matrix.shape[0])

    def dagger(self) -> Operator:
        return Operator(self.matrix.conj().T)

    def trace(self) -> complex:
        return complex(np.trace(self.matrix))

    def apply(self, state: Ket) -> ComplexArray:
        """Return O|state> as a raw (not necessarily normalized) vector."""
        if state.dim != self.dim:
            raise QETValidationError(
                f"Dimension mismatch: operator {self.dim} vs ket {state.dim}"
            )
        return self.matrix @ state.amplitudes

    def max_abs_diff(self, other: Operator) -> float:
        """Largest entrywise deviation from another operator."""
        self._check_same_dim(other)
        return float(np.max(np.abs(self.matrix - other.matrix)))

    def _check_same_dim(self, other: Operator) -> None:
        if other.dim != self.dim:
            raise QETValidationError(f"Dimension mismatch: {self.dim} vs {other.dim}")

    def __matmul__(self, other: Operator) -> Operator:
        self._check_same_dim(other)
        return Operator(self.matrix @ other.matrix)

    def __add__(self, other: Operator) -> Operator:
        self._check_same_dim(other)
        return Operator(self.matrix + other.matrix)

    def __sub__(self, other: Operator) -> Operator:
        self._check_same_dim(other)
        return Operator(self.matrix - other.matrix)

    def __mul__(self, scalar: complex) -> Operator:
        return Operator(self.matrix * scalar)

    __rmul__ = __mul__

    def __neg__(self) -> Operator:
        return Operator(-self.matrix)


class HermitianOperator(Operator):
    """Operator equal to its conjugate transpose within 1e-12 entrywise."""

    def _validate(self, array: ComplexArray) -> None:
        deviation = float(np.max(np.abs(array - array.conj().T)))
        if deviation > HERMITIAN_TOLERANCE:
            raise QETValidationError(
                f"Operator is not Hermitian (max deviation {deviation:.3e})"
            )

    def scaled(self, factor: float) -> HermitianOperator:
        """Multiply by a real factor, keeping the Hermitian type."""
        return HermitianOperator(self.matrix * factor)


class UnitaryOperator(Operator):
    """Operator with U U† = I within 1e-10 entrywise."""

    def _validate(self, array: ComplexArray) -> None:
        product = array @ array.conj().T
        deviation = float(np.max(np.abs(product - np.eye(array.shape[0]))))
        if deviation > UNITARY_TOLERANCE:
            raise QETValidationError(
                f"Operator is not unitary (max deviation {deviation:.3e})"
            )

    def dagger(self) -> UnitaryOperator:
        return UnitaryOperator(self.matrix.conj().T)


def identity(dim: int) -> HermitianOperator:
    """Return the dim x dim identity."""
    if dim < 1 or dim > MAX_DIMENSION:
        raise QETValidationError(f"Dimension {dim} outside 1..{MAX_DIMENSION}")
    return HermitianOperator(np.eye(dim, dtype=np.complex128))


def pauli(axis: PauliAxis) -> HermitianOperator:
    """Return the Pauli matrix for ``axis`` in the sigma^z basis, |+> first."""
    if axis not in _PAULI_MATRICES:
        raise QETValidationError(f"Unknown Pauli axis {axis!r} (expected x, y or z)")
    return HermitianOperator(np.array(_PAULI_MATRICES[axis], dtype=np.complex128))


def kron(a: Operator, b: Operator) -> Operator:
    """Tensor product with ``a`` as the left (subsystem A) factor.

    For two qubits the basis order is |++>, |+->, |-+>, |-->.

    Raises:
        QETValidationError: If the product dimension exceeds MAX_DIMENSION
    """
    dim = a.dim * b.dim
    if dim > MAX_DIMENSION:
        raise QETValidationError(
            f"Tensor product dimension {dim} exceeds maximum {MAX_DIMENSION}"
        )
    return Operator(np.kron(a.matrix, b.matrix))


def embed(op: OperatorT, site: Site) -> OperatorT:
    """Place a single-qubit operator on site A or B of the two-qubit space.

    The returned operator keeps the class of ``op`` (Hermitian or unitary
    single-qubit operators stay Hermitian or unitary after embedding).
    """
    if op.dim != 2:
        raise QETValidationError(f"Can only embed single-qubit operators, got dim {op.dim}")
    if site == "A":
        product = kron(op, identity(2))
    elif site == "B":
        product = kron(identity(2), op)
    else:
        raise QETValidationError(f"Unknown site {site!r} (expected A or B)")
    return type(op)(product.matrix)


def commutator(a: Operator, b: Operator) -> Operator:
    """Return [a, b] = ab - ba."""
    return (a @ b) - (b @ a)
