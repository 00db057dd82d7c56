"""
Fans independent n values of one command over a thread pool.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Any, Callable, Dict, List, Sequence, TypeVar

LOGGER = logging.getLogger(__name__)

T = TypeVar("T")


class BatchProcessor:
    """Process several n values concurrently; results come back in input order."""

    def __init__(self, max_concurrent: int = 4):
        """
        Initialize batch processor.

        Args:
            max_concurrent: Maximum concurrent computations
        """
        self.max_concurrent = max_concurrent
        self.timings: Dict[int, float] = {}

    def _timed(self, func: Callable[[int], T], n: int) -> T:
        start = time.perf_counter()
        try:
            return func(n)
        finally:
            self.timings[n] = time.perf_counter() - start

    def process_batch(self, n_values: Sequence[int], func: Callable[[int], T]) -> List[T]:
        """
        Apply func to every n.

        The first exception in input order is re-raised after all work
        finishes.
        """
        if self.max_concurrent <= 1 or len(n_values) <= 1:
            return [self._timed(func, n) for n in n_values]

        outcomes: Dict[int, Any] = {}
        errors: Dict[int, BaseException] = {}
        with ThreadPoolExecutor(max_workers=self.max_concurrent) as executor:
            futures = {executor.submit(self._timed, func, n): idx for idx, n in enumerate(n_values)}
            for future in as_completed(futures):
                idx = futures[future]
                try:
                    outcomes[idx] = future.result()
                except Exception as exc:  # noqa: BLE001
                    errors[idx] = exc
        if errors:
            raise errors[min(errors)]
        return [outcomes[idx] for idx in range(len(n_values))]

    def get_timing_summary(self) -> Dict[str, Any]:
        if not self.timings:
            return {}
        times = list(self.timings.values())
        return {
            "total_time": sum(times),
            "average_time": sum(times) / len(times),
            "min_time": min(times),
            "max_time": max(times),
            "processed": len(times),
        }


__all__ = ["BatchProcessor"]
