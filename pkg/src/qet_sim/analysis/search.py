"""Golden-section search for one-dimensional maxima."""

from __future__ import annotations

import math
from collections.abc import Callable


INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0  # 1 / phi
INV_PHI_SQUARE = (3.0 - math.sqrt(5.0)) / 2.0  # 1 / phi^2


def golden_section_maximize(
    f: Callable[[float], float],
    lo: float,
    hi: float,
    tolerance: float = 0.0,
    max_iterations: int = 200,
) -> tuple[float, float]:
    """Locate the maximum of a function unimodal on [lo, hi].

    Iteration stops after ``max_iterations``, once the bracket is narrower
    than ``tolerance``, or when it can no longer shrink in double precision.

    Returns:
        (argmax, max value)
    """
    lo, hi = min(lo, hi), max(lo, hi)
    width = hi - lo
    c = lo + INV_PHI_SQUARE * width
    d = lo + INV_PHI * width
    fc = f(c)
    fd = f(d)

    for _ in range(max_iterations):
        if hi - lo <= tolerance or hi - lo <= 2.0 * math.ulp(max(abs(lo), abs(hi))):
            break
        if fc > fd:
            hi = d
            d, fd = c, fc
            width = hi - lo
            c = lo + INV_PHI_SQUARE * width
            fc = f(c)
        else:
            lo = c
            c, fc = d, fd
            width = hi - lo
            d = lo + INV_PHI * width
            fd = f(d)

    if fc > fd:
        return c, fc
    return d, fd
