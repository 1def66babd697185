"""Gram-table fills, optionally spread over a thread pool."""

from __future__ import annotations

import logging
from collections.abc import Callable, Sequence
from concurrent.futures import ThreadPoolExecutor
from typing import TypeVar

from dirac_pairings.config import get_settings

logger = logging.getLogger(__name__)

T = TypeVar("T")
V = TypeVar("V")


def gram_table(
    items: Sequence[T], entry: Callable[[T, T], V], threads: int | None = None
) -> list[list[V]]:
    """[[entry(a, b) for b in items] for a in items], filled row by row."""
    threads = threads or get_settings().threads
    cells = [(i, j) for i in range(len(items)) for j in range(len(items))]
    if threads <= 1 or len(cells) < 2:
        values = [entry(items[i], items[j]) for i, j in cells]
    else:
        logger.debug("Filling %d cells on %d threads", len(cells), threads)
        with ThreadPoolExecutor(max_workers=threads) as pool:
            values = list(pool.map(lambda ij: entry(items[ij[0]], items[ij[1]]), cells))
    n = len(items)
    return [values[i * n : (i + 1) * n] for i in range(n)]
