"""Unit tests for the structural verification suite."""

from __future__ import annotations

import pytest
from grid_params import GRID_IDS, PARAM_GRID
from pytest_mock import MockerFixture

from qet_sim.analysis import audit, run_verification, verification
from qet_sim.model import ModelParams


class TestRunVerification:
    """Test run_verification."""

    def test_unit_report(self, unit_params: ModelParams) -> None:
        """Test that every check passes and the printed E_A and curve are findings."""
        report = run_verification(unit_params)

        assert report.summary.passed
        assert report.summary.n_failed == 0
        assert report.summary.n_checks == len(report.checks)
        assert report.summary.modules == {
            "linalg": True,
            "model": True,
            "protocol": True,
            "analysis": True,
        }
        assert report.summary.findings == ["E_A", "curve_amplitude", "curve_frequency"]
        assert report.energy_curve.verdict == "single-frequency"

    def test_check_names_are_unique(self, unit_params: ModelParams) -> None:
        """Test that each check appears once."""
        names = [(check.module, check.name) for check in run_verification(unit_params).checks]

        assert len(names) == len(set(names))

    @pytest.mark.parametrize("params", PARAM_GRID, ids=GRID_IDS)
    def test_grid_passes(self, params: ModelParams) -> None:
        """Test that structural checks hold on the whole grid."""
        report = run_verification(params, n_samples=64)

        failed = [check.name for check in report.checks if not check.passed]
        assert failed == []

    def test_failed_check_fails_module(
        self, unit_params: ModelParams, mocker: MockerFixture
    ) -> None:
        """Test that a broken invariant marks its module and the summary as failed."""
        mocker.patch("qet_sim.analysis.verification.energy_at_B", return_value=0.5)

        report = run_verification(unit_params)

        assert not report.summary.passed
        assert report.summary.n_failed == 1
        assert report.summary.modules["protocol"] is False
        assert report.summary.modules["model"] is True

    def test_curve_and_optimum_computed_once(
        self, unit_params: ModelParams, mocker: MockerFixture
    ) -> None:
        """Test that the formula audit reuses the verification's fit and optimum."""
        real_fit, real_optimize = audit.fit_energy_curve, audit.optimize_theta
        fits = [
            mocker.patch.object(module, "fit_energy_curve", wraps=real_fit)
            for module in (audit, verification)
        ]
        optima = [
            mocker.patch.object(module, "optimize_theta", wraps=real_optimize)
            for module in (audit, verification)
        ]

        report = run_verification(unit_params, n_samples=64)

        assert report.summary.passed
        assert sum(spy.call_count for spy in fits) == 1
        assert sum(spy.call_count for spy in optima) == 1
