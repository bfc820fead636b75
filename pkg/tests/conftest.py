"""Shared fixtures."""

from __future__ import annotations

import sys
from collections.abc import Iterator

import pytest
from loguru import logger

from qet_sim.model import ModelOperators, ModelParams, build_model
from qet_sim.protocol import MeasurementEnsemble, prepare_run


@pytest.fixture(autouse=True)
def _reset_logger() -> Iterator[None]:
    """Drop sinks a CLI invocation bound to a runner's temporary stderr."""
    yield
    logger.remove()
    logger.add(sys.stderr, level="WARNING")


@pytest.fixture
def unit_params() -> ModelParams:
    """h = k = 1."""
    return ModelParams(h=1.0, k=1.0)


@pytest.fixture
def unit_ops(unit_params: ModelParams) -> ModelOperators:
    """Model operators at h = k = 1."""
    return build_model(unit_params)


@pytest.fixture
def unit_run(unit_params: ModelParams) -> tuple[ModelOperators, MeasurementEnsemble]:
    """Operators and post-measurement ensemble at h = k = 1."""
    return prepare_run(unit_params)
