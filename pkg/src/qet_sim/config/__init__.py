"""Configuration module."""

from __future__ import annotations


__all__ = [
    "AuditConfig",
    "CacheConfig",
    "ConfigManager",
    "OutputConfig",
    "QETConfig",
    "SweepConfig",
    "create_default_config",
]

from qet_sim.config.config import (
    AuditConfig,
    CacheConfig,
    ConfigManager,
    OutputConfig,
    QETConfig,
    SweepConfig,
    create_default_config,
)
