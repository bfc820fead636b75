"""JSON output formatter with exact 17-significant-digit floats."""

from __future__ import annotations

import json
import math
import re
from collections.abc import Mapping
from typing import Any

from pydantic import BaseModel

from qet_sim import __version__
from qet_sim.linalg import NumericFailureError


GENERATOR = f"qet-sim {__version__}"
UNITS = "energies in units where hbar = 1; k is the natural energy scale"
SIGNIFICANT_DIGITS = 17

_FLOAT_MARKER = "__qet_float__"
_FLOAT_TOKEN = re.compile(rf'"{_FLOAT_MARKER}([^"]*)"')


def format_float(value: float) -> str:
    """Render a double with exactly 17 significant digits so it re-parses to the same bits.

    Trailing zeros are kept, so ``1.0`` renders as ``1.0000000000000000``.

    Raises:
        NumericFailureError: If the value is NaN or infinite
    """
    if not math.isfinite(value):
        raise NumericFailureError(f"Cannot serialize non-finite value {value!r}")
    return f"{value:#.{SIGNIFICANT_DIGITS}g}"


def _tokenize(value: Any) -> Any:
    if isinstance(value, bool) or value is None or isinstance(value, (int, str)):
        return value
    if isinstance(value, float):
        return _FLOAT_MARKER + format_float(value)
    if isinstance(value, Mapping):
        return {str(key): _tokenize(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [_tokenize(item) for item in value]
    raise TypeError(f"Cannot serialize {type(value).__name__} to JSON")


def generate_json(
    report: BaseModel | Mapping[str, Any],
    extra: Mapping[str, Any] | None = None,
) -> str:
    """Serialize a report as one JSON object with generator and units metadata.

    Args:
        report: Report model (field names become keys) or a plain mapping
        extra: Additional top-level keys appended after the report fields

    Returns:
        UTF-8 JSON text ending in a newline
    """
    body = report.model_dump() if isinstance(report, BaseModel) else dict(report)
    output = {
        "generator": GENERATOR,
        "units": UNITS,
        **body,
        **(extra or {}),
    }
    text = json.dumps(_tokenize(output), indent=2, ensure_ascii=False)
    return _FLOAT_TOKEN.sub(lambda match: match.group(1), text) + "\n"
