"""Unit tests for CLI commands."""

from __future__ import annotations

import json
from pathlib import Path
from unittest.mock import patch

import pytest
from click.testing import CliRunner
from grid_params import E_B_MAX_UNIT

from qet_sim.cli import RunConfig, run
from qet_sim.cli.main import cli
from qet_sim.linalg import NumericFailureError


class TestCLICommands:
    """Test CLI command functionality."""

    def test_cli_help(self) -> None:
        """Test CLI help output."""
        runner = CliRunner()
        result = runner.invoke(cli, ["--help"])

        assert result.exit_code == 0
        assert "quantum energy teleportation" in result.output
        for command in ("simulate", "curve", "optimize", "sweep", "audit", "verify", "config"):
            assert command in result.output

    def test_cli_version(self) -> None:
        """Test CLI version output."""
        runner = CliRunner()
        result = runner.invoke(cli, ["--version"])

        assert result.exit_code == 0
        assert "version" in result.output.lower()

    def test_simulate_help(self) -> None:
        """Test simulate help lists its flags."""
        runner = CliRunner()
        result = runner.invoke(cli, ["simulate", "--help"])

        assert result.exit_code == 0
        for flag in ("--h", "--k", "--theta", "--wait", "--output", "--format"):
            assert flag in result.output

    def test_unknown_command(self) -> None:
        """Test that an unknown command is a usage error with status 1."""
        runner = CliRunner()
        result = runner.invoke(cli, ["teleport"])

        assert result.exit_code == 1
        assert "Usage" in result.output

    def test_unknown_flag(self) -> None:
        """Test that an unknown flag is a usage error with status 1."""
        runner = CliRunner()
        result = runner.invoke(cli, ["optimize", "--h", "1", "--k", "1", "--bogus"])

        assert result.exit_code == 1
        assert "No such option" in result.output

    def test_missing_coupling(self) -> None:
        """Test that --k is required for optimize."""
        runner = CliRunner()
        result = runner.invoke(cli, ["optimize", "--h", "1"])

        assert result.exit_code == 1
        assert "Error:" in result.output

    def test_non_positive_coupling(self) -> None:
        """Test that h <= 0 is a validation error."""
        runner = CliRunner()
        result = runner.invoke(cli, ["simulate", "--h", "-1", "--k", "1", "--theta", "0"])

        assert result.exit_code == 1

    def test_csv_only_for_tables(self) -> None:
        """Test that CSV is refused for non-tabular reports."""
        runner = CliRunner()
        result = runner.invoke(cli, ["optimize", "--h", "1", "--k", "1", "--format", "csv"])

        assert result.exit_code == 1
        assert "CSV" in result.output

    def test_invalid_epsilon(self) -> None:
        """Test that epsilon >= 1 is a validation error."""
        runner = CliRunner()
        result = runner.invoke(cli, ["audit", "--h", "1", "--k", "1", "--epsilon", "2"])

        assert result.exit_code == 1

    def test_numeric_failure_exit_status(self) -> None:
        """Test that a near-degenerate ground space exits with status 2."""
        runner = CliRunner()
        result = runner.invoke(cli, ["optimize", "--h", "1e-9", "--k", "1"])

        assert result.exit_code == 2
        assert "near-degenerate" in result.output

    def test_simulate_identity_rotation(self) -> None:
        """Test that theta = 0 extracts nothing."""
        runner = CliRunner()
        result = runner.invoke(cli, ["simulate", "--h", "1", "--k", "1", "--theta", "0"])

        assert result.exit_code == 0
        report = json.loads(result.output)
        assert report["e_extracted"] == 0.0
        assert report["dimensionless"]["wait_time_times_k"] == 0.0

    def test_simulate_defaults_to_optimum(self) -> None:
        """Test that omitting --theta uses the optimal angle."""
        runner = CliRunner()
        result = runner.invoke(cli, ["simulate", "--h", "1", "--k", "1"])

        assert result.exit_code == 0
        assert json.loads(result.output)["e_extracted"] == pytest.approx(E_B_MAX_UNIT, abs=1e-12)

    def test_curve_csv(self) -> None:
        """Test the curve table header and row count."""
        runner = CliRunner()
        result = runner.invoke(
            cli, ["curve", "--h", "1", "--k", "1", "--samples", "32", "--format", "csv"]
        )

        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert lines[0] == "t,energy_B"
        assert len(lines) == 33
        times = [float(line.split(",")[0]) for line in lines[1:]]
        assert times == sorted(times)

    def test_curve_json(self) -> None:
        """Test the curve as a JSON array of points."""
        runner = CliRunner()
        result = runner.invoke(cli, ["curve", "--h", "1", "--k", "1", "--samples", "16"])

        assert result.exit_code == 0
        points = json.loads(result.output)["points"]
        assert len(points) == 16
        assert points[0] == {"t": 0.0, "energy_B": pytest.approx(0.0, abs=1e-12)}

    def test_sweep_csv(self) -> None:
        """Test a short sweep as CSV."""
        runner = CliRunner()
        result = runner.invoke(
            cli,
            ["sweep", "--x-min", "0.5", "--x-max", "2", "--n", "4", "--format", "csv"],
        )

        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert lines[0] == "x,theta_star,eb_over_k"
        assert len(lines) == 5

    def test_sweep_uses_cache(self) -> None:
        """Test that a cached sweep is served without recomputation."""
        runner = CliRunner()
        args = ["sweep", "--x-min", "0.5", "--x-max", "2", "--n", "3", "--cache"]
        with runner.isolated_filesystem():
            first = runner.invoke(cli, args)
            with patch("qet_sim.cli.runner.sweep_ratio") as mock_sweep:
                second = runner.invoke(cli, args)

                mock_sweep.assert_not_called()

            assert first.exit_code == 0
            assert second.exit_code == 0
            assert first.output == second.output
            assert Path(".qet-sim-cache").is_dir()

    def test_audit(self) -> None:
        """Test the uncertainty audit verdicts."""
        runner = CliRunner()
        result = runner.invoke(cli, ["audit", "--h", "1", "--k", "1", "--epsilon", "1e-3"])

        assert result.exit_code == 0
        report = json.loads(result.output)
        assert report["eq103_satisfied"] is False
        assert report["product_e_t"] == pytest.approx(7.26e-5, rel=1e-3)

    def test_verify_passes_with_findings(self) -> None:
        """Test that mismatching printed formulas do not fail verify."""
        runner = CliRunner()
        result = runner.invoke(cli, ["verify", "--h", "1", "--k", "1"])

        assert result.exit_code == 0
        summary = json.loads(result.output)["summary"]
        assert summary["passed"] is True
        assert "E_A" in summary["findings"]

    def test_verify_failure_exit_status(self) -> None:
        """Test that a failing structural check exits with status 2 and still reports."""
        runner = CliRunner()
        with patch("qet_sim.analysis.verification.energy_at_B", return_value=1.0):
            result = runner.invoke(cli, ["verify", "--h", "1", "--k", "1"])

        assert result.exit_code == 2
        assert '"passed": false' in result.output

    def test_output_file(self, tmp_path: Path) -> None:
        """Test --output writes the report and creates parent directories."""
        target = tmp_path / "reports" / "optimize.json"
        runner = CliRunner()
        result = runner.invoke(
            cli, ["optimize", "--h", "1", "--k", "1", "--output", str(target)]
        )

        assert result.exit_code == 0
        assert result.output == ""
        assert json.loads(target.read_text())["e_b_max"] == pytest.approx(E_B_MAX_UNIT)

    def test_config_file_sets_defaults(self, tmp_path: Path) -> None:
        """Test that --config supplies defaults the flags do not override."""
        config_file = tmp_path / "qet.yaml"
        config_file.write_text("audit:\n  epsilon: 0.01\n")
        runner = CliRunner()
        result = runner.invoke(
            cli, ["--config", str(config_file), "audit", "--h", "1", "--k", "1"]
        )

        assert result.exit_code == 0
        assert json.loads(result.output)["epsilon"] == 0.01

    def test_config_init(self) -> None:
        """Test config init command."""
        runner = CliRunner()

        with patch("qet_sim.config.create_default_config") as mock_create:
            mock_create.return_value = Path("config.yaml")
            result = runner.invoke(cli, ["config", "--init"])

            assert result.exit_code == 0
            mock_create.assert_called_once_with(None)

    def test_config_show(self, tmp_path: Path) -> None:
        """Test config show command."""
        config_file = tmp_path / "qet.yaml"
        config_file.write_text("sweep:\n  n: 42\n")
        runner = CliRunner()
        result = runner.invoke(cli, ["config", "--show", "--path", str(config_file)])

        assert result.exit_code == 0
        assert "42" in result.output


class TestRun:
    """Test the run operation behind every command."""

    def test_required_fields(self) -> None:
        """Test that commands other than sweep need h and k."""
        with pytest.raises(ValueError, match="requires both"):
            RunConfig(command="audit", h=1.0)

    def test_sweep_bounds(self) -> None:
        """Test that x_min must be below x_max."""
        with pytest.raises(ValueError, match="x-min"):
            RunConfig(command="sweep", x_min=2.0, x_max=1.0)

    def test_optimize_report(self) -> None:
        """Test run returns status 0 and the optimum as JSON."""
        status, report = run(RunConfig(command="optimize", h=1.0, k=1.0))

        assert status == 0
        assert json.loads(report)["e_b_max"] == pytest.approx(E_B_MAX_UNIT, abs=1e-12)

    def test_numeric_failure_propagates(self) -> None:
        """Test that numeric failures are raised for the caller to map."""
        with pytest.raises(NumericFailureError):
            run(RunConfig(command="simulate", h=1e-9, k=1.0, theta=0.1))
