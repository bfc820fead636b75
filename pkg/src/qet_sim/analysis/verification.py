"""Structural self-checks behind ``qet verify``."""

from __future__ import annotations

import math
from collections.abc import Callable
from typing import Literal

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict

from qet_sim.analysis.audit import (
    AUDIT_RELATIVE_TOLERANCE,
    DEFAULT_CURVE_SAMPLES,
    ConsistencyRow,
    EnergyCurveFit,
    fit_energy_curve,
    formula_audit,
)
from qet_sim.analysis.optimizer import optimize_theta
from qet_sim.analysis.sweep import EXTRACTION_BOUND
from qet_sim.linalg import (
    commutator,
    evolve,
    hermitian_eig,
    identity,
    pauli,
)
from qet_sim.model import (
    ModelParams,
    build_model,
    ground_state_analytic,
    ground_state_numeric,
    zero_point_check,
)
from qet_sim.protocol import (
    apply_measurement,
    bob_unitary,
    energy_at_B,
    ensemble_energy,
    extracted_energy,
    injected_energy,
    local_unitary_energy,
)


CheckModule = Literal["linalg", "model", "protocol", "analysis"]

EXACT_TOLERANCE = 1e-12
ORACLE_TOLERANCE = 1e-10


class CheckResult(BaseModel):
    """One named structural check: |value| (or value itself) against a threshold."""

    model_config = ConfigDict(frozen=True)

    module: CheckModule
    name: str
    value: float
    threshold: float
    passed: bool
    detail: str


class VerificationSummary(BaseModel):
    """Per-module pass flags and the printed formulas that disagree with the oracle."""

    model_config = ConfigDict(frozen=True)

    passed: bool
    modules: dict[str, bool]
    n_checks: int
    n_failed: int
    findings: list[str]


class VerificationReport(BaseModel):
    """Checks, formula-audit rows and curve fit for one parameter set."""

    model_config = ConfigDict(frozen=True)

    params: ModelParams
    checks: list[CheckResult]
    formula_audit: list[ConsistencyRow]
    energy_curve: EnergyCurveFit
    summary: VerificationSummary


class _Checks:
    def __init__(self) -> None:
        self.results: list[CheckResult] = []

    def at_most(
        self, module: CheckModule, name: str, value: float, threshold: float, detail: str
    ) -> None:
        self._add(module, name, value, threshold, abs(value) <= threshold, detail)

    def holds(
        self,
        module: CheckModule,
        name: str,
        value: float,
        threshold: float,
        predicate: Callable[[float, float], bool],
        detail: str,
    ) -> None:
        self._add(module, name, value, threshold, predicate(value, threshold), detail)

    def _add(
        self,
        module: CheckModule,
        name: str,
        value: float,
        threshold: float,
        passed: bool,
        detail: str,
    ) -> None:
        if not passed:
            logger.warning(f"Check {module}.{name} failed: {value!r} vs {threshold!r}")
        self.results.append(
            CheckResult(
                module=module,
                name=name,
                value=value,
                threshold=threshold,
                passed=passed,
                detail=detail,
            )
        )


def run_verification(
    params: ModelParams,
    relative_tolerance: float = AUDIT_RELATIVE_TOLERANCE,
    n_samples: int = DEFAULT_CURVE_SAMPLES,
) -> VerificationReport:
    """Run every structural check for (h, k) and attach the formula audit.

    Energy thresholds scale with max(1, sqrt(4h^2 + k^2)) so the checks stay
    meaningful for large couplings. Printed-formula mismatches land in
    ``summary.findings`` and never fail the summary.
    """
    h, k = params.h, params.k
    scale = max(1.0, params.root)
    checks = _Checks()

    # linalg
    sx, sy, sz = pauli("x"), pauli("y"), pauli("z")
    checks.at_most(
        "linalg",
        "pauli_commutator",
        commutator(sx, sy).max_abs_diff(sz * 2j),
        EXACT_TOLERANCE,
        "[sx, sy] = 2i sz",
    )
    ops = build_model(params)
    eig = hermitian_eig(ops.h_total)
    checks.at_most(
        "linalg",
        "eigen_reconstruction",
        eig.reconstruct().max_abs_diff(ops.h_total),
        ORACLE_TOLERANCE * scale,
        "sum of lambda_i v_i v_i^dagger reproduces H",
    )
    vectors = eig.vector_matrix
    gram = vectors.conj().T @ vectors
    checks.at_most(
        "linalg",
        "eigen_orthonormality",
        float(np.max(np.abs(gram - np.eye(eig.dim)))),
        ORACLE_TOLERANCE,
        "eigenvectors are orthonormal",
    )
    t = 1.0 / k
    round_trip = evolve(ops.h_total, t) @ evolve(ops.h_total, -t)
    checks.at_most(
        "linalg",
        "evolution_inverse",
        round_trip.max_abs_diff(identity(4)),
        ORACLE_TOLERANCE,
        "U(t) U(-t) = I at t = 1/k",
    )

    # model
    numeric = ground_state_numeric(ops)
    analytic = ground_state_analytic(params)
    checks.at_most(
        "model",
        "ground_energy",
        float(eig.eigenvalues[0]),
        ORACLE_TOLERANCE * scale,
        "lowest eigenvalue of H is 0",
    )
    checks.at_most(
        "model",
        "analytic_ground_state_overlap",
        1.0 - numeric.ket.overlap(analytic.ket),
        ORACLE_TOLERANCE,
        "closed-form and diagonalized ground states agree up to phase",
    )
    zero_point = zero_point_check(ops, numeric)
    checks.at_most(
        "model",
        "zero_point_conditions",
        max(abs(zero_point.h_a), abs(zero_point.h_b), abs(zero_point.v)),
        ORACLE_TOLERANCE * scale,
        "<H_A> = <H_B> = <V> = 0 in the ground state",
    )

    # protocol
    ensemble = apply_measurement(numeric)
    checks.at_most(
        "protocol",
        "branch_probability",
        ensemble.branch(0).prob - 0.5,
        EXACT_TOLERANCE,
        "both sigma_A^x outcomes occur with probability 1/2",
    )
    e_injected = injected_energy(ensemble, ops)
    expected_injection = 2.0 * h * h / params.root
    checks.at_most(
        "protocol",
        "injected_energy",
        e_injected - expected_injection,
        ORACLE_TOLERANCE * scale,
        "E_A = 2h^2 / sqrt(4h^2 + k^2)",
    )
    checks.at_most(
        "protocol",
        "b_unexcited_after_measurement",
        energy_at_B(ensemble, ops, 0.0),
        EXACT_TOLERANCE * scale,
        "<H_B> is unchanged by Alice's measurement",
    )
    checks.at_most(
        "protocol",
        "energy_conservation",
        ensemble_energy(ensemble, ops, t) - e_injected,
        ORACLE_TOLERANCE * scale,
        "free evolution conserves the ensemble energy",
    )
    checks.at_most(
        "protocol",
        "identity_rotation",
        extracted_energy(ensemble, ops, 0.0).e_extracted,
        0.0,
        "theta = 0 extracts exactly nothing",
    )

    # analysis
    optimum = optimize_theta(params)
    _, alpha, beta = optimum.harmonic_coeffs
    two_theta = 2.0 * optimum.theta_star
    checks.at_most(
        "analysis",
        "harmonic_stationarity",
        2.0 * (beta * math.cos(two_theta) - alpha * math.sin(two_theta)),
        ORACLE_TOLERANCE * scale,
        "dE_B/dtheta vanishes at theta*",
    )
    checks.at_most(
        "analysis",
        "search_agreement",
        optimum.search_e_b - optimum.e_b_max,
        ORACLE_TOLERANCE * scale,
        "harmonic optimum and golden-section optimum agree",
    )
    checks.holds(
        "analysis",
        "extraction_positive",
        optimum.e_b_max,
        0.0,
        lambda value, limit: value > limit,
        "the optimal rotation extracts positive energy",
    )
    checks.holds(
        "analysis",
        "extraction_bound",
        optimum.e_b_max / k,
        EXTRACTION_BOUND,
        lambda value, limit: value <= limit,
        "E_B / k stays below 0.13",
    )
    checks.holds(
        "analysis",
        "ground_state_passivity",
        local_unitary_energy(numeric.ket, ops, bob_unitary(0, optimum.theta_star)),
        -EXACT_TOLERANCE * scale,
        lambda value, limit: value >= limit,
        "no local rotation lowers the ground-state energy",
    )
    swapped = extracted_energy(ensemble, ops, optimum.theta_star, swap_outcomes=True)
    checks.holds(
        "analysis",
        "outcome_dependence",
        swapped.e_extracted,
        0.0,
        lambda value, limit: value < limit,
        "ignoring Alice's outcome deposits energy instead of extracting it",
    )

    fit = fit_energy_curve(params, n_samples)
    rows = formula_audit(params, relative_tolerance, fit=fit, optimum=optimum)
    modules = {
        module: all(check.passed for check in checks.results if check.module == module)
        for module in ("linalg", "model", "protocol", "analysis")
    }
    n_failed = sum(not check.passed for check in checks.results)
    summary = VerificationSummary(
        passed=n_failed == 0,
        modules=modules,
        n_checks=len(checks.results),
        n_failed=n_failed,
        findings=[row.quantity for row in rows if not row.matches],
    )
    logger.info(
        f"Verification for h={h}, k={k}: {summary.n_checks - n_failed}/"
        f"{summary.n_checks} checks passed, findings {summary.findings}"
    )
    return VerificationReport(
        params=params,
        checks=checks.results,
        formula_audit=rows,
        energy_curve=fit,
        summary=summary,
    )
