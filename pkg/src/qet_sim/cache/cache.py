"""Sweep tables persisted with diskcache between runs."""

from __future__ import annotations

from pathlib import Path
from types import TracebackType

from diskcache import Cache
from loguru import logger
from pydantic import ValidationError

from qet_sim.analysis import SweepTable


DEFAULT_CACHE_DIR = ".qet-sim-cache"
DEFAULT_TTL = 86400


def sweep_key(x_min: float, x_max: float, n: int) -> str:
    """Cache key of a sweep; floats use repr so distinct doubles never collide."""
    return f"sweep:{x_min!r}:{x_max!r}:{n}"


class SweepCache:
    """Disk-backed store of serialized SweepTable reports.

    Backend failures are logged and treated as misses; a sweep is always
    recomputable.
    """

    def __init__(self, cache_dir: str | Path | None = None, ttl: int = DEFAULT_TTL) -> None:
        self.cache_dir = Path(cache_dir) if cache_dir else Path.cwd() / DEFAULT_CACHE_DIR
        self.ttl = ttl
        self.cache = Cache(str(self.cache_dir))
        logger.debug(f"Opened sweep cache at {self.cache_dir} (ttl {ttl}s)")

    def __enter__(self) -> SweepCache:
        return self

    def __exit__(
        self,
        exc_type: type[BaseException] | None,
        exc: BaseException | None,
        traceback: TracebackType | None,
    ) -> None:
        self.close()

    def load(self, x_min: float, x_max: float, n: int) -> SweepTable | None:
        """Return the cached table for these bounds, or None on a miss."""
        key = sweep_key(x_min, x_max, n)
        try:
            payload = self.cache.get(key)
        except Exception as e:
            logger.warning(f"Cache read failed for {key}: {e}")
            return None
        if payload is None:
            return None
        try:
            table = SweepTable.model_validate_json(payload)
        except ValidationError as e:
            logger.warning(f"Discarding stale cache entry {key}: {e}")
            self.cache.delete(key)
            return None
        logger.debug(f"Cache hit for {key}")
        return table

    def store(self, x_min: float, x_max: float, n: int, table: SweepTable) -> None:
        """Save a table as JSON under its bounds."""
        key = sweep_key(x_min, x_max, n)
        try:
            self.cache.set(key, table.model_dump_json(), expire=self.ttl)
        except Exception as e:
            logger.warning(f"Cache write failed for {key}: {e}")

    def close(self) -> None:
        try:
            self.cache.close()
        except Exception as e:
            logger.warning(f"Cache close error: {e}")
