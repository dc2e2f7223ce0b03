"""Thread pool helper with deterministic (input-ordered) results."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, Iterable, TypeVar

A = TypeVar("A")
B = TypeVar("B")

_default_threads: int | None = None


def set_threads(n: int | None) -> None:
    global _default_threads
    if n is not None and n < 1:
        raise ValueError("thread count must be positive")
    _default_threads = n


def thread_count() -> int:
    if _default_threads is not None:
        return _default_threads
    env = os.environ.get("VVMACD_THREADS")
    if env:
        try:
            n = int(env)
        except ValueError:
            raise ValueError(f"VVMACD_THREADS must be a positive integer, got {env!r}") from None
        if n >= 1:
            return n
        raise ValueError(f"VVMACD_THREADS must be a positive integer, got {env!r}")
    return os.cpu_count() or 1


def pmap(fn: Callable[[A], B], items: Iterable[A], threads: int | None = None) -> list[B]:
    """``[fn(x) for x in items]``, possibly on a pool; output order matches input order."""
    items = list(items)
    n = threads or thread_count()
    if n <= 1 or len(items) < 2:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=min(n, len(items))) as pool:
        return list(pool.map(fn, items))
