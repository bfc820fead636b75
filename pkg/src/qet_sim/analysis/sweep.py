"""E_B / k across the dimensionless ratio x = h / k."""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor

import numpy as np
from loguru import logger
from pydantic import BaseModel, ConfigDict, model_validator

from qet_sim.analysis.optimizer import harmonic_coefficients, optimize_theta
from qet_sim.analysis.search import golden_section_maximize
from qet_sim.linalg import QETValidationError
from qet_sim.model import ModelParams
from qet_sim.protocol import prepare_run


EXTRACTION_BOUND = 0.13
REFINE_TOLERANCE = 1e-10


class SweepRow(BaseModel):
    """Optimal extraction at one ratio x = h/k (k = 1)."""

    model_config = ConfigDict(frozen=True)

    x: float
    theta_star: float
    e_b_over_k: float


class SupremumEstimate(BaseModel):
    """Refined location and value of the largest E_B / k."""

    model_config = ConfigDict(frozen=True)

    x_at_max: float
    value: float


class SweepTable(BaseModel):
    """Rows sorted by x plus the refined supremum."""

    model_config = ConfigDict(frozen=True)

    rows: list[SweepRow]
    sup_estimate: SupremumEstimate
    paper_bound: float = EXTRACTION_BOUND
    bound_satisfied: bool

    @model_validator(mode="after")
    def _check_rows(self) -> SweepTable:
        xs = [row.x for row in self.rows]
        if xs != sorted(xs):
            raise ValueError("Sweep rows must be sorted by x")
        if any(row.e_b_over_k < 0 for row in self.rows):
            raise ValueError("Extracted energy must be non-negative in every row")
        return self


def _sweep_row(x: float) -> SweepRow:
    optimum = optimize_theta(ModelParams(h=x, k=1.0))
    return SweepRow(x=x, theta_star=optimum.theta_star, e_b_over_k=optimum.e_b_max)


def _peak_e_b(x: float) -> float:
    ops, ens = prepare_run(ModelParams(h=x, k=1.0))
    gamma, alpha, beta = harmonic_coefficients(ens, ops)
    return gamma + math.hypot(alpha, beta)


def sweep_ratio(x_min: float, x_max: float, n: int, workers: int = 1) -> SweepTable:
    """Optimize extraction on a log grid of x = h/k and refine the supremum.

    Rows are independent and computed in a thread pool; their order always
    follows x.

    Args:
        x_min: Smallest ratio (> 0)
        x_max: Largest ratio (> x_min)
        n: Number of grid points (>= 2)
        workers: Thread-pool size

    Returns:
        Sweep table

    Raises:
        QETValidationError: If the bounds or n are invalid
    """
    if not (math.isfinite(x_min) and math.isfinite(x_max)) or not 0 < x_min < x_max:
        raise QETValidationError(f"Need 0 < x_min < x_max (got {x_min}, {x_max})")
    if n < 2:
        raise QETValidationError(f"n must be >= 2, got {n}")
    if workers < 1:
        raise QETValidationError(f"workers must be >= 1, got {workers}")

    logger.info(f"Sweeping x in [{x_min}, {x_max}] with {n} points")
    grid = [float(x) for x in np.geomspace(x_min, x_max, n)]
    with ThreadPoolExecutor(max_workers=workers) as executor:
        rows = list(executor.map(_sweep_row, grid))

    best = max(range(n), key=lambda i: rows[i].e_b_over_k)
    lo = grid[max(best - 1, 0)]
    hi = grid[min(best + 1, n - 1)]
    x_at_max, _ = golden_section_maximize(_peak_e_b, lo, hi, tolerance=REFINE_TOLERANCE)
    value = optimize_theta(ModelParams(h=x_at_max, k=1.0)).e_b_max
    if value < rows[best].e_b_over_k:
        x_at_max, value = rows[best].x, rows[best].e_b_over_k

    logger.info(f"Supremum of E_B/k ~ {value!r} at x = {x_at_max!r}")
    return SweepTable(
        rows=rows,
        sup_estimate=SupremumEstimate(x_at_max=x_at_max, value=value),
        bound_satisfied=all(row.e_b_over_k <= EXTRACTION_BOUND for row in rows)
        and value <= EXTRACTION_BOUND,
    )
