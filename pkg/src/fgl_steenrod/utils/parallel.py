"""Bounded worker pool for independent checks."""

import logging
import os
from collections.abc import Callable, Iterable
from concurrent.futures import ThreadPoolExecutor
from typing import Optional, TypeVar

logger = logging.getLogger(__name__)

MAX_WORKERS_ENV = "FGL_STEENROD_MAX_WORKERS"

T = TypeVar("T")
R = TypeVar("R")


def max_workers_from_env(default: int = 1) -> int:
    """Worker cap from ``FGL_STEENROD_MAX_WORKERS``; unset or invalid values fall back to ``default``."""
    raw = os.environ.get(MAX_WORKERS_ENV)
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError:
        logger.warning(f"Ignoring {MAX_WORKERS_ENV}={raw!r}: not an integer")
        return default
    return max(value, 1)


def parallel_map(fn: Callable[[T], R], items: Iterable[T], max_workers: Optional[int] = None) -> list[R]:
    """``[fn(item) for item in items]``, in order, on at most ``max_workers`` threads."""
    items = list(items)
    workers = max_workers if max_workers is not None else max_workers_from_env()
    if workers <= 1 or len(items) <= 1:
        return [fn(item) for item in items]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))
