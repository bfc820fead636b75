"""The (h, k) test grid and exact reference values at h = k = 1."""

from __future__ import annotations

import itertools
import math

from qet_sim.model import ModelParams


H_VALUES = (0.1, 0.316, 1.0, 3.16, 10.0)
K_VALUES = (0.1, 0.464, 2.15, 10.0)
PARAM_GRID = [ModelParams(h=h, k=k) for h, k in itertools.product(H_VALUES, K_VALUES)]
GRID_IDS = [f"h={p.h}-k={p.k}" for p in PARAM_GRID]

THETA_STAR_UNIT = 0.5 * math.atan(1.0 / 3.0)
E_B_MAX_UNIT = math.sqrt(2.0) - 3.0 / math.sqrt(5.0)
E_A_UNIT = 2.0 / math.sqrt(5.0)
