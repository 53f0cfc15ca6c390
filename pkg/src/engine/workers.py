"""
Ordered parallel map over chunks of work.

Results come back in input order whatever the number of workers, so every
caller produces the same output for any ``n_jobs``.
"""
from __future__ import annotations

from typing import Callable, List, Sequence, TypeVar

from joblib import Parallel, delayed

T = TypeVar("T")
R = TypeVar("R")

DEFAULT_CHUNK_SIZE = 2048


def chunked(items: Sequence[T], size: int = DEFAULT_CHUNK_SIZE) -> List[Sequence[T]]:
    return [items[i:i + size] for i in range(0, len(items), size)]


def ordered_map(
    func: Callable[[Sequence[T]], R],
    items: Sequence[T],
    n_jobs: int = 1,
    chunk_size: int = DEFAULT_CHUNK_SIZE,
    prefer: str = "processes",
) -> List[R]:
    """Apply ``func`` to consecutive chunks of ``items``; one result per chunk, in order."""
    chunks = chunked(items, chunk_size)
    if n_jobs == 1 or len(chunks) <= 1:
        return [func(chunk) for chunk in chunks]
    return Parallel(n_jobs=n_jobs, prefer=prefer)(delayed(func)(chunk) for chunk in chunks)
