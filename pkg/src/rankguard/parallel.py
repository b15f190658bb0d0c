"""Thread-count plumbing for the enumeration reductions.

All reductions that opt in are associative with deterministic tie-breaks,
so results are identical at any thread count; RANKGUARD_THREADS only caps
how wide the executor fans out.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, Iterator, TypeVar

T = TypeVar("T")
R = TypeVar("R")


def thread_count() -> int:
    raw = os.environ.get("RANKGUARD_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def ordered_map(fn: Callable[[T], R], items: Iterable[T]) -> Iterator[R]:
    """map() preserving order, fanned out when RANKGUARD_THREADS > 1."""
    workers = thread_count()
    if workers == 1:
        yield from map(fn, items)
        return
    with ThreadPoolExecutor(max_workers=workers) as pool:
        yield from pool.map(fn, items)
