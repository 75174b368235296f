"""Deterministic, order-preserving work distribution."""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get("CONVLAB_WORKERS", "1")))
    except ValueError:
        return 1


def parallel_map(fn: Callable[[T], R], items: Iterable[T],
                 workers: int | None = None) -> list[R]:
    """Map preserving input order; results are identical for any worker
    count.  ``fn`` must be a module-level callable when workers > 1."""
    seq: Sequence[T] = list(items)
    workers = worker_count() if workers is None else max(1, workers)
    if workers == 1 or len(seq) < 2 * workers:
        return [fn(x) for x in seq]
    chunk = max(1, len(seq) // (workers * 8))
    try:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(fn, seq, chunksize=chunk))
    except (OSError, RuntimeError):
        # sandboxed platforms without fork support fall back to serial
        return [fn(x) for x in seq]
