"""
Runs verification suites sequentially or concurrently and records timings.
"""

from __future__ import annotations

import asyncio
import logging
import time
from typing import Any, Callable, Dict, List, Tuple

LOGGER = logging.getLogger(__name__)

Check = Tuple[str, Callable[[dict], dict]]


class ParallelProcessor:
    """Executes check nodes against a shared state and merges their updates."""

    def __init__(self, max_workers: int = 4):
        """
        Initialize parallel processor.

        Args:
            max_workers: Maximum concurrent suites
        """
        self.max_workers = max_workers
        self.execution_times: Dict[str, float] = {}

    def _execute(self, name: str, func: Callable[[dict], dict], state: Dict[str, Any]) -> Dict[str, Any]:
        start = time.perf_counter()
        try:
            return func(dict(state))
        finally:
            self.execution_times[name] = time.perf_counter() - start
            LOGGER.info("%s finished in %.2fs", name, self.execution_times[name])

    async def _execute_async(self, semaphore: asyncio.Semaphore, name: str, func, state) -> Dict[str, Any]:
        async with semaphore:
            return await asyncio.to_thread(self._execute, name, func, state)

    async def run_sequential(self, checks: List[Check], state: Dict[str, Any]) -> Dict[str, Any]:
        for name, func in checks:
            state.update(self._execute(name, func, state))
        return state

    async def run_parallel(self, checks: List[Check], state: Dict[str, Any]) -> Dict[str, Any]:
        """Run independent suites in worker threads; updates are merged in the given order."""
        semaphore = asyncio.Semaphore(self.max_workers)
        results = await asyncio.gather(*(self._execute_async(semaphore, name, func, state) for name, func in checks))
        for update in results:
            state.update(update)
        return state

    def run_blocking(self, checks: List[Check], state: Dict[str, Any], use_parallel: bool = False) -> Dict[str, Any]:
        """
        Run suites with a blocking call.

        Args:
            checks: List of (name, node function) tuples
            state: Initial state
            use_parallel: Whether to run the suites concurrently

        Returns:
            Final state
        """
        runner = self.run_parallel if use_parallel else self.run_sequential
        return asyncio.run(runner(checks, dict(state)))

    def get_timing_report(self) -> Dict[str, Any]:
        total_time = sum(self.execution_times.values())
        return {
            "checks": dict(self.execution_times),
            "total_time": total_time,
            "average_time": total_time / len(self.execution_times) if self.execution_times else 0,
        }


__all__ = ["ParallelProcessor"]
