"""Optimization, sweeps and audits built on the protocol oracle."""

from __future__ import annotations


__all__ = [
    "CheckResult",
    "ConsistencyRow",
    "EnergyCurveFit",
    "SupremumEstimate",
    "SweepRow",
    "SweepTable",
    "ThetaOptimum",
    "UncertaintyAudit",
    "VerificationReport",
    "VerificationSummary",
    "analytic_eb",
    "fit_energy_curve",
    "formula_audit",
    "golden_section_maximize",
    "harmonic_coefficients",
    "harmonic_residual",
    "optimize_theta",
    "run_verification",
    "sweep_ratio",
    "uncertainty_audit",
]

from qet_sim.analysis.audit import (
    ConsistencyRow,
    EnergyCurveFit,
    fit_energy_curve,
    formula_audit,
)
from qet_sim.analysis.optimizer import (
    ThetaOptimum,
    analytic_eb,
    harmonic_coefficients,
    harmonic_residual,
    optimize_theta,
)
from qet_sim.analysis.search import golden_section_maximize
from qet_sim.analysis.sweep import SupremumEstimate, SweepRow, SweepTable, sweep_ratio
from qet_sim.analysis.uncertainty import UncertaintyAudit, uncertainty_audit
from qet_sim.analysis.verification import (
    CheckResult,
    VerificationReport,
    VerificationSummary,
    run_verification,
)
