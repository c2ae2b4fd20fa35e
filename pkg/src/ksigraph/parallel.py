"""Deterministic worker-pool helper.

Results come back in input order regardless of worker count, so any
reduction over them is bit-identical for every ``threads`` value.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor

__all__ = ["ordered_map"]


def ordered_map(fn, items, threads: int = 1) -> list:
    """Apply ``fn`` to each item, preserving input order in the result."""
    items = list(items)
    if threads is None or threads <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))
