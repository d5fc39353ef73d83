"""Order-preserving fan-out over a lazily created process pool."""
from __future__ import annotations

import atexit
import math
import os
from concurrent.futures import ProcessPoolExecutor

_pool = None


def _get_pool() -> ProcessPoolExecutor:
    global _pool
    if _pool is None:
        # at least two workers so the parallel path is exercised on 1-CPU hosts
        _pool = ProcessPoolExecutor(max_workers=max(2, os.cpu_count() or 2))
        atexit.register(_pool.shutdown)
    return _pool


def run_tasks(func, tasks, parallel=False):
    """Apply ``func`` to every task and return results in task order."""
    tasks = list(tasks)
    if not parallel or len(tasks) < 2:
        return [func(t) for t in tasks]
    return list(_get_pool().map(func, tasks))


def split_depth(radices, min_chunks=8) -> int:
    """Shortest prefix length whose radix product reaches ``min_chunks``.

    Never returns the full length, so every chunk still has a suffix to walk.
    """
    k = 0
    while k < len(radices) - 1 and math.prod(radices[:k]) < min_chunks:
        k += 1
    return k
