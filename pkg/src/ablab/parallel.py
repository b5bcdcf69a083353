"""
Thread-pool helpers for data-parallel field evaluation.

Results always come back in submission order, so every reduction over
chunks sums in a fixed order and output is reproducible for any thread
count.
"""

from __future__ import annotations

import logging
import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, List, TypeVar

T = TypeVar("T")
R = TypeVar("R")

THREADS_ENV = "ABLAB_THREADS"

logger = logging.getLogger(__name__)


def worker_count() -> int:
    """Thread cap from ``ABLAB_THREADS`` (0 or unset = os.cpu_count())."""
    raw = os.environ.get(THREADS_ENV, "0").strip() or "0"
    try:
        requested = int(raw)
    except ValueError:
        logger.warning("ignoring non-integer %s=%r", THREADS_ENV, raw)
        requested = 0
    if requested < 0:
        logger.warning("ignoring negative %s=%d", THREADS_ENV, requested)
        requested = 0
    return requested or (os.cpu_count() or 1)


def ordered_map(func: Callable[[T], R], chunks: Iterable[T]) -> List[R]:
    """Apply ``func`` to every chunk, in parallel when more than one worker is allowed."""
    items = list(chunks)
    workers = min(worker_count(), len(items))
    if workers <= 1:
        return [func(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, items))


def chunk_slices(count: int, size: int) -> List[slice]:
    """Consecutive slices of at most ``size`` covering ``range(count)``."""
    size = max(1, int(size))
    return [slice(start, min(start + size, count)) for start in range(0, count, size)]
