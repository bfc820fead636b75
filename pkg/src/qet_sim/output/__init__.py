"""Output formatters module."""

from __future__ import annotations


__all__ = [
    "CURVE_HEADER",
    "GENERATOR",
    "SWEEP_HEADER",
    "UNITS",
    "curve_csv",
    "format_float",
    "generate_csv",
    "generate_json",
    "print_error",
    "render_config",
    "sweep_csv",
]

from qet_sim.output.console import print_error, render_config
from qet_sim.output.csv_output import (
    CURVE_HEADER,
    SWEEP_HEADER,
    curve_csv,
    generate_csv,
    sweep_csv,
)
from qet_sim.output.json_output import GENERATOR, UNITS, format_float, generate_json
