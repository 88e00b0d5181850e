"""Process-pool fan-out for the censuses.

Results always come back in input order; callers sort canonically afterwards,
so reports do not depend on the worker count.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Sequence, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def resolve_workers(requested: int | None, configured: int = 1) -> int:
    """Explicit request, else the configured thread count, capped by the CPU count."""
    workers = requested if requested is not None else configured
    return max(1, min(workers, os.cpu_count() or 1))


def chunked(items: Sequence[T], size: int) -> list[list[T]]:
    size = max(1, size)
    return [list(items[i:i + size]) for i in range(0, len(items), size)]


def parallel_map(fn: Callable[[T], R], items: Sequence[T], workers: int = 1) -> list[R]:
    """``[fn(x) for x in items]``, spread over a process pool when workers > 1.

    ``fn`` and the items must be picklable when a pool is used.
    """
    if workers <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    logger.debug("parallel_map: %d items on %d workers", len(items), workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
