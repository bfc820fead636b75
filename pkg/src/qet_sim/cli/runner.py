"""Dispatch a RunConfig to the analysis layer and serialize the result."""

from __future__ import annotations

import math
from typing import Any

import numpy as np
from loguru import logger

from qet_sim.analysis import (
    optimize_theta,
    run_verification,
    sweep_ratio,
    uncertainty_audit,
)
from qet_sim.cache import SweepCache
from qet_sim.cli.run_config import RunConfig
from qet_sim.linalg import hermitian_eig
from qet_sim.output import curve_csv, generate_json, sweep_csv
from qet_sim.protocol import energy_curve, extracted_energy, prepare_run


EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_NUMERIC = 2


def run(config: RunConfig) -> tuple[int, str]:
    """Execute one command.

    Returns:
        (exit status, serialized report); ``verify`` returns status 2 with its
        report when a structural check fails

    Raises:
        QETValidationError: On invalid inputs that slipped past RunConfig
        NumericFailureError: When a computation cannot be trusted
    """
    logger.debug(f"Running {config.command} with {config.model_dump(exclude_none=True)}")
    handler = _HANDLERS[config.command]
    return handler(config)


def _simulate(config: RunConfig) -> tuple[int, str]:
    params = config.params
    theta = config.theta
    if theta is None:
        theta = optimize_theta(params, wait_time=config.wait).theta_star
        logger.debug(f"No --theta given, using the optimum {theta!r}")
    ops, ensemble = prepare_run(params)
    trace = extracted_energy(ensemble, ops, theta, config.wait, config.swap_outcomes)
    dimensionless = {
        "e_injected_over_k": trace.e_injected / params.k,
        "e_extracted_over_k": trace.e_extracted / params.k,
        "wait_time_times_k": trace.wait_time * params.k,
    }
    return EXIT_OK, generate_json(trace, {"dimensionless": dimensionless})


def _curve(config: RunConfig) -> tuple[int, str]:
    params = config.params
    ops, ensemble = prepare_run(params)
    times = np.linspace(0.0, 4.0 * math.pi / params.k, config.samples)
    energies = energy_curve(ensemble, ops, times, eig=hermitian_eig(ops.h_total))
    if config.format == "csv":
        return EXIT_OK, curve_csv(times.tolist(), energies.tolist())
    points: list[dict[str, Any]] = [
        {"t": float(t), "energy_B": float(e)} for t, e in zip(times, energies, strict=True)
    ]
    return EXIT_OK, generate_json({"params": params.model_dump(), "points": points})


def _optimize(config: RunConfig) -> tuple[int, str]:
    params = config.params
    optimum = optimize_theta(params, wait_time=config.wait)
    extra = {"dimensionless": {"e_b_max_over_k": optimum.e_b_max / params.k}}
    return EXIT_OK, generate_json(optimum, extra)


def _sweep(config: RunConfig) -> tuple[int, str]:
    bounds = (config.x_min, config.x_max, config.n)
    if config.use_cache:
        with SweepCache(config.cache_dir, config.cache_ttl) as cache:
            table = cache.load(*bounds)
            if table is None:
                table = sweep_ratio(*bounds, workers=config.workers)
                cache.store(*bounds, table)
    else:
        table = sweep_ratio(*bounds, workers=config.workers)
    if config.format == "csv":
        return EXIT_OK, sweep_csv(table)
    return EXIT_OK, generate_json(table)


def _audit(config: RunConfig) -> tuple[int, str]:
    audit = uncertainty_audit(config.params, config.epsilon, config.e_cc)
    return EXIT_OK, generate_json(audit)


def _verify(config: RunConfig) -> tuple[int, str]:
    report = run_verification(config.params, config.relative_tolerance, config.samples)
    status = EXIT_OK if report.summary.passed else EXIT_NUMERIC
    return status, generate_json(report)


_HANDLERS = {
    "simulate": _simulate,
    "curve": _curve,
    "optimize": _optimize,
    "sweep": _sweep,
    "audit": _audit,
    "verify": _verify,
}
