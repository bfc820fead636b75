"""Validated description of one CLI invocation."""

from __future__ import annotations

from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from qet_sim.model import ModelParams


Command = Literal["simulate", "curve", "optimize", "sweep", "audit", "verify"]
OutputFormat = Literal["json", "csv"]

TABULAR_COMMANDS: frozenset[str] = frozenset({"curve", "sweep"})


class RunConfig(BaseModel):
    """Everything ``run`` needs; flags map one to one onto these fields."""

    model_config = ConfigDict(frozen=True, extra="forbid")

    command: Command
    h: float | None = Field(default=None, gt=0, allow_inf_nan=False)
    k: float | None = Field(default=None, gt=0, allow_inf_nan=False)
    theta: float | None = Field(default=None, allow_inf_nan=False)
    wait: float = Field(default=0.0, ge=0, allow_inf_nan=False)
    swap_outcomes: bool = False
    epsilon: float = Field(default=1e-3, gt=0, lt=1)
    e_cc: float | None = Field(default=None, allow_inf_nan=False)
    samples: int = Field(default=256, ge=16)
    relative_tolerance: float = Field(default=1e-9, gt=0)
    x_min: float = Field(default=0.01, gt=0, allow_inf_nan=False)
    x_max: float = Field(default=100.0, gt=0, allow_inf_nan=False)
    n: int = Field(default=200, ge=2)
    workers: int = Field(default=4, ge=1)
    format: OutputFormat = "json"
    output: Path | None = None
    use_cache: bool = False
    cache_dir: str = "./.qet-sim-cache"
    cache_ttl: int = Field(default=86400, gt=0)

    @model_validator(mode="after")
    def _check_command_fields(self) -> RunConfig:
        if self.command != "sweep" and (self.h is None or self.k is None):
            raise ValueError(f"'{self.command}' requires both --h and --k")
        if self.command == "sweep" and self.x_min >= self.x_max:
            raise ValueError(f"--x-min ({self.x_min}) must be below --x-max ({self.x_max})")
        if self.format == "csv" and self.command not in TABULAR_COMMANDS:
            raise ValueError(f"CSV output is only available for curve and sweep, not '{self.command}'")
        return self

    @property
    def params(self) -> ModelParams:
        """Model couplings; only valid for commands other than sweep."""
        if self.h is None or self.k is None:
            raise ValueError(f"'{self.command}' has no model parameters")
        return ModelParams(h=self.h, k=self.k)
