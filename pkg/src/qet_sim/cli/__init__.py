"""CLI module for qet-sim."""

from __future__ import annotations


__all__ = ["RunConfig", "cli", "run"]

from qet_sim.cli.main import cli
from qet_sim.cli.run_config import RunConfig
from qet_sim.cli.runner import run
