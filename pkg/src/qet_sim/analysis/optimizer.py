"""Optimal extraction angle and the closed-form maximum it should reach."""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict

from qet_sim.analysis.search import golden_section_maximize
from qet_sim.linalg import NumericFailureError
from qet_sim.model import ModelOperators, ModelParams
from qet_sim.protocol import (
    MeasurementEnsemble,
    extracted_energy,
    extraction_objective,
    prepare_run,
)


SEARCH_AGREEMENT = 1e-8
SEED_POINTS = 16
GOLDEN_ITERATIONS = 200

HarmonicCoefficients = tuple[float, float, float]


class ThetaOptimum(BaseModel):
    """Best rotation angle for Bob and the energy it extracts."""

    model_config = ConfigDict(frozen=True)

    theta_star: float
    e_b_max: float
    harmonic_coeffs: HarmonicCoefficients
    search_theta: float
    search_e_b: float
    wait_time: float = 0.0


def harmonic_coefficients(
    ens: MeasurementEnsemble, ops: ModelOperators, wait_time: float = 0.0
) -> HarmonicCoefficients:
    """Recover (gamma, alpha, beta) with E_B(theta) = gamma + alpha cos 2theta + beta sin 2theta.

    U_B is quadratic in (cos theta, sin theta), so three samples at
    0, pi/4 and pi/2 determine the curve exactly.
    """
    objective = extraction_objective(ens, ops, wait_time)
    f0 = objective(0.0)
    f1 = objective(math.pi / 4.0)
    f2 = objective(math.pi / 2.0)
    gamma = 0.5 * (f0 + f2)
    return gamma, 0.5 * (f0 - f2), f1 - gamma


def harmonic_residual(
    ens: MeasurementEnsemble,
    ops: ModelOperators,
    thetas: Sequence[float],
    wait_time: float = 0.0,
) -> float:
    """Largest least-squares residual of E_B(theta) against the single-harmonic form."""
    objective = extraction_objective(ens, ops, wait_time)
    angles = np.asarray(thetas, dtype=np.float64)
    samples = np.array([objective(float(theta)) for theta in angles])
    design = np.column_stack(
        [np.ones_like(angles), np.cos(2.0 * angles), np.sin(2.0 * angles)]
    )
    coeffs, *_ = np.linalg.lstsq(design, samples, rcond=None)
    return float(np.max(np.abs(design @ coeffs - samples)))


def optimize_theta(params: ModelParams, wait_time: float = 0.0) -> ThetaOptimum:
    """Find the angle that moves the most energy out of B.

    The harmonic reconstruction gives theta* = atan2(beta, alpha) / 2 in
    [0, pi); a grid-seeded golden-section search over the same objective must
    agree with it.

    Args:
        params: Model couplings
        wait_time: Delay before Bob's rotation

    Returns:
        Optimum with the harmonic coefficients and the search cross-check

    Raises:
        NumericFailureError: If the two maxima differ by more than 1e-8
    """
    ops, ens = prepare_run(params)
    gamma, alpha, beta = harmonic_coefficients(ens, ops, wait_time)
    theta_star = (0.5 * math.atan2(beta, alpha)) % math.pi
    e_b_max = extracted_energy(ens, ops, theta_star, wait_time).e_extracted

    objective = extraction_objective(ens, ops, wait_time)
    step = math.pi / SEED_POINTS
    seeds = [i * step for i in range(SEED_POINTS)]
    best = max(seeds, key=objective)
    search_theta, search_e_b = golden_section_maximize(
        objective, best - step, best + step, max_iterations=GOLDEN_ITERATIONS
    )
    search_theta %= math.pi

    if abs(search_e_b - e_b_max) > SEARCH_AGREEMENT:
        raise NumericFailureError(
            f"Harmonic optimum {e_b_max!r} and golden-section optimum "
            f"{search_e_b!r} disagree for h={params.h}, k={params.k}"
        )

    logger.debug(f"h={params.h} k={params.k}: theta*={theta_star!r} E_B={e_b_max!r}")
    return ThetaOptimum(
        theta_star=theta_star,
        e_b_max=e_b_max,
        harmonic_coeffs=(gamma, alpha, beta),
        search_theta=search_theta,
        search_e_b=search_e_b,
        wait_time=wait_time,
    )


def analytic_eb(params: ModelParams) -> float:
    """Closed-form maximum extracted energy.

    E_B = (2h^2 + k^2)/sqrt(4h^2 + k^2) * [sqrt(1 + h^2 k^2/(2h^2 + k^2)^2) - 1],
    with sqrt(1 + x) - 1 evaluated as x / (sqrt(1 + x) + 1) to keep small-h
    values accurate.
    """
    h, k = params.h, params.k
    s = 2.0 * h * h + k * k
    x = (h * k / s) ** 2
    return s / params.root * x / (math.sqrt(1.0 + x) + 1.0)
