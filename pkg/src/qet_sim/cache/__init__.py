"""Caching module."""

from __future__ import annotations


__all__ = ["SweepCache", "sweep_key"]

from qet_sim.cache.cache import SweepCache, sweep_key
