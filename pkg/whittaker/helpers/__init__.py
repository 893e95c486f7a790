"""Whittaker helpers."""
from __future__ import annotations

import logging
import time
from collections.abc import Iterator
from contextlib import contextmanager

LOGGER = logging.getLogger(__name__)


@contextmanager
def log_duration(logger: logging.Logger, what: str) -> Iterator[None]:
    """Log how long the wrapped block took."""
    start = time.perf_counter()
    yield
    logger.info(f"{what} computed in {time.perf_counter() - start:.1f} seconds")


def chunked(total: int, size: int) -> Iterator[tuple[int, int]]:
    """Yield (start, stop) pairs covering range(total) in blocks of size."""
    for start in range(0, total, size):
        yield start, min(start + size, total)
