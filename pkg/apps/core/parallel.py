"""
Order-preserving parallel map over pure work units.
"""

from __future__ import annotations

import logging
from multiprocessing.pool import Pool
from typing import Callable, Iterable, TypeVar

logger = logging.getLogger("partcx.parallel")

T = TypeVar("T")
R = TypeVar("R")


def ordered_map(func: Callable[[T], R], items: Iterable[T], jobs: int = 1) -> list[R]:
    """
    Apply ``func`` to every item, in a process pool when ``jobs > 1``.

    Results come back in input order, so reports do not depend on the
    scheduling of the workers. ``func`` must be a module-level callable.
    """

    items = list(items)
    if jobs <= 1 or len(items) <= 1:
        return [func(item) for item in items]

    chunksize = max(1, len(items) // (jobs * 4))
    logger.debug("Dispatching work units", extra={"units": len(items), "jobs": jobs})
    with Pool(processes=jobs) as pool:
        return pool.map(func, items, chunksize=chunksize)
