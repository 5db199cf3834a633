"""Small shared plumbing: deterministic work splitting and parallel mapping."""

from __future__ import annotations

import multiprocessing
from typing import Callable, Sequence


def split_chunks(items: Sequence, jobs: int) -> list[list]:
    """Partition items into at most jobs contiguous chunks, order preserved."""
    if jobs <= 1 or len(items) <= 1:
        return [list(items)]
    n = max(1, min(jobs, len(items)))
    step = -(-len(items) // n)
    return [list(items[i : i + step]) for i in range(0, len(items), step)]


def parallel_map(fn: Callable, items: Sequence, jobs: int) -> list:
    """Map preserving order; forks worker processes when jobs > 1."""
    if jobs > 1 and len(items) > 1:
        with multiprocessing.Pool(min(jobs, len(items))) as pool:
            return pool.map(fn, items)
    return [fn(x) for x in items]
