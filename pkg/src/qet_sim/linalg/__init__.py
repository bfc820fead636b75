"""Exact dense linear algebra for one- and two-qubit operators."""

from __future__ import annotations


__all__ = [
    "ComplexScalar",
    "EigenSystem",
    "HermitianOperator",
    "Ket",
    "NumericFailureError",
    "Operator",
    "QETError",
    "QETValidationError",
    "UnitaryOperator",
    "commutator",
    "embed",
    "evolve",
    "evolve_from_eigensystem",
    "expectation",
    "hermitian_eig",
    "identity",
    "kron",
    "pauli",
]

from qet_sim.linalg.eigen import (
    EigenSystem,
    evolve,
    evolve_from_eigensystem,
    expectation,
    hermitian_eig,
)
from qet_sim.linalg.exceptions import NumericFailureError, QETError, QETValidationError
from qet_sim.linalg.operators import (
    ComplexScalar,
    HermitianOperator,
    Ket,
    Operator,
    UnitaryOperator,
    commutator,
    embed,
    identity,
    kron,
    pauli,
)
