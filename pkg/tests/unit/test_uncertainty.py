"""Unit tests for the time-energy uncertainty audit."""

from __future__ import annotations

import math

import pytest
from grid_params import E_B_MAX_UNIT, GRID_IDS, PARAM_GRID

from qet_sim.analysis import uncertainty_audit
from qet_sim.linalg import QETValidationError
from qet_sim.model import ModelParams


class TestUncertaintyAudit:
    """Test uncertainty_audit."""

    def test_unit_audit(self, unit_params: ModelParams) -> None:
        """Test the inequality chain at h = k = 1 and epsilon = 1e-3."""
        audit = uncertainty_audit(unit_params, epsilon=1e-3)

        assert audit.t_teleportation == 1e-3
        assert audit.product_e_t == pytest.approx(7.257277587e-5, rel=1e-9)
        assert audit.e_b_max == pytest.approx(E_B_MAX_UNIT, abs=1e-12)
        assert audit.eq99_satisfied
        assert not audit.eq103_satisfied
        assert audit.bound_satisfied
        assert audit.required_e_b == pytest.approx(1000.0)
        assert audit.delta_t == 0.0
        assert audit.delta_e == 0.0
        assert audit.e_cc is None

    def test_teleportation_time_definition(self) -> None:
        """Test t_teleportation * k = epsilon."""
        audit = uncertainty_audit(ModelParams(h=0.4, k=2.5), epsilon=1e-3)

        assert audit.t_teleportation == 1e-3 / 2.5
        assert audit.t_teleportation * 2.5 == pytest.approx(1e-3, rel=1e-15)

    @pytest.mark.parametrize("params", PARAM_GRID, ids=GRID_IDS)
    @pytest.mark.parametrize("epsilon", [1e-3, 0.1])
    def test_relation_never_satisfied(self, params: ModelParams, epsilon: float) -> None:
        """Test that E_B t < 1 and E_B t <= 0.13 epsilon across the grid."""
        audit = uncertainty_audit(params, epsilon=epsilon)

        assert not audit.eq103_satisfied
        assert audit.product_e_t <= 0.13 * epsilon
        assert audit.e_b_over_k <= 0.13

    def test_finite_delay_keeps_extraction(self, unit_params: ModelParams) -> None:
        """Test that acting after t_teleportation extracts nearly the same energy."""
        audit = uncertainty_audit(unit_params, epsilon=1e-3)

        assert audit.e_b_at_teleportation_time == pytest.approx(audit.e_b_max, rel=1e-3)

    def test_classical_cost_reported_only(self, unit_params: ModelParams) -> None:
        """Test that e_cc is carried without affecting the verdicts."""
        with_cost = uncertainty_audit(unit_params, e_cc=5.0)
        without = uncertainty_audit(unit_params)

        assert with_cost.e_cc == 5.0
        assert with_cost.product_e_t == without.product_e_t

    @pytest.mark.parametrize("epsilon", [0.0, 1.0, -1e-3, math.nan])
    def test_invalid_epsilon(self, unit_params: ModelParams, epsilon: float) -> None:
        """Test that epsilon outside (0, 1) raises."""
        with pytest.raises(QETValidationError, match="epsilon"):
            uncertainty_audit(unit_params, epsilon=epsilon)

    def test_non_finite_cost(self, unit_params: ModelParams) -> None:
        """Test that an infinite e_cc raises."""
        with pytest.raises(QETValidationError, match="e_cc"):
            uncertainty_audit(unit_params, e_cc=math.inf)
