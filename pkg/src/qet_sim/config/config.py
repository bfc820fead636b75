"""Configuration file support for qet-sim."""

from __future__ import annotations

from pathlib import Path
from typing import Literal

import yaml
from loguru import logger
from pydantic import BaseModel, Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class AuditConfig(BaseModel):
    """Defaults for audit, curve and verify."""

    epsilon: float = Field(
        default=1e-3, gt=0, lt=1, description="t_teleportation * k for 't << 1/k'"
    )
    relative_tolerance: float = Field(
        default=1e-9, gt=0, description="Relative tolerance for printed formulas"
    )
    curve_samples: int = Field(
        default=256, ge=16, description="Samples of <H_B(t)> on [0, 4pi/k]"
    )


class SweepConfig(BaseModel):
    """Defaults for the h/k sweep."""

    x_min: float = Field(default=0.01, gt=0, description="Smallest h/k")
    x_max: float = Field(default=100.0, gt=0, description="Largest h/k")
    n: int = Field(default=200, ge=2, description="Grid points")
    workers: int = Field(default=4, ge=1, description="Thread-pool size")


class OutputConfig(BaseModel):
    """Output configuration."""

    format: Literal["json", "csv"] = Field(
        default="json", description="Default format of curve and sweep reports"
    )


class CacheConfig(BaseModel):
    """Cache configuration."""

    enabled: bool = Field(default=False, description="Cache sweep tables")
    ttl: int = Field(default=86400, gt=0, description="Cache TTL in seconds")
    directory: str = Field(default="./.qet-sim-cache", description="Cache directory")


class QETConfig(BaseSettings):
    """Main configuration model.

    Values can also come from the environment, e.g. ``QET_AUDIT__EPSILON=1e-4``;
    values read from a config file take precedence over the environment.
    """

    model_config = SettingsConfigDict(env_prefix="QET_", env_nested_delimiter="__")

    audit: AuditConfig = Field(default_factory=AuditConfig)
    sweep: SweepConfig = Field(default_factory=SweepConfig)
    output: OutputConfig = Field(default_factory=OutputConfig)
    cache: CacheConfig = Field(default_factory=CacheConfig)


DEFAULT_CONFIG_PATHS = [
    Path(".qet-sim") / "config.yaml",
    Path(".qet-sim") / "config.yml",
    Path(".qet-sim.yaml"),
    Path(".qet-sim.yml"),
]


def _write_yaml(config: QETConfig, path: Path) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        yaml.safe_dump(config.model_dump(), f, default_flow_style=False, sort_keys=False)
    return path


class ConfigManager:
    """Loads QETConfig from an explicit file, the first default file found, or defaults."""

    def __init__(self, config_path: str | Path | None = None) -> None:
        self.config_path = Path(config_path) if config_path else None
        self.config = self._load_config()

    def _load_config(self) -> QETConfig:
        if self.config_path and self.config_path.exists():
            return self._load_from_file(self.config_path)
        if self.config_path:
            logger.warning(f"Config file {self.config_path} not found, using defaults")

        for path in DEFAULT_CONFIG_PATHS:
            if path.exists():
                logger.debug(f"Loading config from {path}")
                return self._load_from_file(path)

        logger.debug("No config file found, using defaults")
        return QETConfig()

    def _load_from_file(self, path: Path) -> QETConfig:
        """Load configuration from a YAML file, falling back to defaults on error."""
        try:
            with open(path, encoding="utf-8") as f:
                data = yaml.safe_load(f) or {}
            config = QETConfig(**data)
        except Exception as e:
            logger.warning(f"Failed to load config from {path}: {e}")
            logger.warning("Using default configuration")
            return QETConfig()
        logger.debug(f"Loaded configuration from {path}")
        return config

    def save_config(self, path: str | Path | None = None) -> Path:
        """Write the current configuration as YAML and return the path written."""
        save_path = _write_yaml(self.config, Path(path) if path else DEFAULT_CONFIG_PATHS[0])
        logger.debug(f"Saved configuration to {save_path}")
        return save_path


def create_default_config(path: str | Path | None = None) -> Path:
    """Write the built-in defaults, ignoring the environment.

    Args:
        path: Target file (default: .qet-sim/config.yaml)

    Returns:
        Path of the new file
    """
    config_path = _write_yaml(
        QETConfig.model_construct(
            audit=AuditConfig(),
            sweep=SweepConfig(),
            output=OutputConfig(),
            cache=CacheConfig(),
        ),
        Path(path) if path else DEFAULT_CONFIG_PATHS[0],
    )
    logger.debug(f"Created default configuration at {config_path}")
    return config_path
