"""CSV output for the curve and sweep tables."""

from __future__ import annotations

import csv
import io
from collections.abc import Iterable, Sequence

from qet_sim.analysis import SweepTable
from qet_sim.output.json_output import format_float


CURVE_HEADER = ("t", "energy_B")
SWEEP_HEADER = ("x", "theta_star", "eb_over_k")


def generate_csv(header: Sequence[str], rows: Iterable[Sequence[float]]) -> str:
    """Write a header and float rows with ``\\n`` line endings."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_float(float(value)) for value in row])
    return buffer.getvalue()


def curve_csv(times: Iterable[float], energies: Iterable[float]) -> str:
    return generate_csv(CURVE_HEADER, zip(times, energies, strict=True))


def sweep_csv(table: SweepTable) -> str:
    return generate_csv(
        SWEEP_HEADER, ((row.x, row.theta_star, row.e_b_over_k) for row in table.rows)
    )
