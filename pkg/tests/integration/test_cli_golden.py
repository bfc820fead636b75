"""End-to-end CLI runs compared against stored reports for h = k = 1."""

from __future__ import annotations

import json
import re
from pathlib import Path
from typing import Any

import pytest
from click.testing import CliRunner

from qet_sim.cli.main import cli


GOLDEN_DIR = Path(__file__).parent / "golden"
ABS_TOLERANCE = 1e-12
# Golden-section angles are only resolved to ~sqrt(machine epsilon).
LOOSE_TOLERANCE = {"search_theta": 1e-6}
# A float that is a whole JSON value on its own line, with its key and comma.
FLOAT_VALUE = re.compile(r'(?m)^(\s*(?:"[^"]*": )?)(-?\d+\.\d+(?:e[+-]\d+)?)(,?)$')

CASES = [
    ("optimize_h1_k1.json", ["optimize", "--h", "1", "--k", "1"]),
    (
        "simulate_h1_k1_theta0.json",
        ["simulate", "--h", "1", "--k", "1", "--theta", "0"],
    ),
    (
        "audit_h1_k1_eps1e-3.json",
        ["audit", "--h", "1", "--k", "1", "--epsilon", "1e-3"],
    ),
]


def assert_matches(actual: Any, expected: Any, path: str = "$") -> None:
    """Compare parsed JSON recursively: same keys in the same order, floats within tolerance."""
    if isinstance(expected, dict):
        assert isinstance(actual, dict), path
        assert list(actual) == list(expected), path
        for key, value in expected.items():
            assert_matches(actual[key], value, f"{path}.{key}")
    elif isinstance(expected, list):
        assert isinstance(actual, list), path
        assert len(actual) == len(expected), path
        for index, (got, want) in enumerate(zip(actual, expected, strict=True)):
            assert_matches(got, want, f"{path}[{index}]")
    elif isinstance(expected, float):
        assert isinstance(actual, float), path
        key = path.rsplit(".", 1)[-1]
        tolerance = LOOSE_TOLERANCE.get(key, ABS_TOLERANCE)
        assert actual == pytest.approx(expected, abs=tolerance), path
    else:
        assert actual == expected, path


@pytest.mark.integration
class TestGoldenReports:
    """Test complete command runs against the stored reports."""

    @pytest.mark.parametrize(("golden", "args"), CASES, ids=[case[0] for case in CASES])
    def test_report_matches_golden(self, golden: str, args: list[str]) -> None:
        """Test that the report agrees with its golden file."""
        runner = CliRunner()
        result = runner.invoke(cli, args)

        assert result.exit_code == 0
        expected = json.loads((GOLDEN_DIR / golden).read_text(encoding="utf-8"))
        assert_matches(json.loads(result.output), expected)

    @pytest.mark.parametrize(("golden", "args"), CASES, ids=[case[0] for case in CASES])
    def test_report_text_matches_golden(self, golden: str, args: list[str]) -> None:
        """Test that all but the float digits match the golden text byte for byte."""
        runner = CliRunner()
        result = runner.invoke(cli, args)
        expected = (GOLDEN_DIR / golden).read_text(encoding="utf-8")

        assert result.exit_code == 0
        assert FLOAT_VALUE.sub(r"\1<float>\3", result.output) == FLOAT_VALUE.sub(
            r"\1<float>\3", expected
        )
        for _, literal, _ in FLOAT_VALUE.findall(result.output):
            mantissa = literal.lstrip("-").split("e")[0]
            digits = mantissa.replace(".", "").lstrip("0")
            assert len(digits) in (0, 17), literal

    @pytest.mark.parametrize(("golden", "args"), CASES, ids=[case[0] for case in CASES])
    def test_report_is_deterministic(self, golden: str, args: list[str]) -> None:
        """Test that repeated runs produce byte-identical reports."""
        runner = CliRunner()
        first = runner.invoke(cli, args)
        second = runner.invoke(cli, args)

        assert first.exit_code == 0
        assert first.output == second.output

    def test_written_report_matches_stdout(self, tmp_path: Path) -> None:
        """Test that --output writes exactly what stdout would show."""
        target = tmp_path / "out" / "verify.json"
        runner = CliRunner()
        printed = runner.invoke(cli, ["verify", "--h", "1", "--k", "1"])
        written = runner.invoke(
            cli, ["verify", "--h", "1", "--k", "1", "--output", str(target)]
        )

        assert printed.exit_code == 0
        assert written.exit_code == 0
        assert target.read_text(encoding="utf-8") == printed.output

    def test_sweep_locates_supremum(self) -> None:
        """Test that a coarse sweep brackets the refined supremum near x = 0.9."""
        runner = CliRunner()
        result = runner.invoke(
            cli, ["sweep", "--x-min", "0.1", "--x-max", "10", "--n", "21"]
        )

        assert result.exit_code == 0
        table = json.loads(result.output)
        assert table["bound_satisfied"] is True
        assert 0.8 < table["sup_estimate"]["x_at_max"] < 1.0
        assert table["sup_estimate"]["value"] == pytest.approx(0.07298, abs=5e-5)
