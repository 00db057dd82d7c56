"""
Memo caches shared by the recursive constructions (H_n, G_n, Betti data).
"""

from __future__ import annotations

import functools
import threading
from typing import Any, Callable, Dict, List, TypeVar

F = TypeVar("F", bound=Callable[..., Any])

# Every cache created through `memoized` registers itself here
_registered_clears: List[Callable[[], None]] = []
_registry_lock = threading.Lock()


def memoized(func: F) -> F:
    """
    Cache a pure function on its positional arguments.

    The cache is guarded by a lock, so concurrent callers never observe a
    partially written entry. Recursive calls are allowed: the lock is only
    held while reading or writing the table, never while computing.

    Args:
        func: Function whose arguments are hashable

    Returns:
        Wrapped function with a `cache_clear()` attribute
    """
    cache: Dict[Any, Any] = {}
    lock = threading.Lock()

    @functools.wraps(func)
    def wrapper(*args):
        with lock:
            if args in cache:
                return cache[args]
        value = func(*args)
        with lock:
            cache.setdefault(args, value)
            return cache[args]

    def cache_clear():
        with lock:
            cache.clear()

    wrapper.cache_clear = cache_clear  # type: ignore[attr-defined]
    wrapper.cache_size = lambda: len(cache)  # type: ignore[attr-defined]

    with _registry_lock:
        _registered_clears.append(cache_clear)

    return wrapper  # type: ignore[return-value]


def clear_caches():
    """Clear every memo cache created through `memoized`."""
    with _registry_lock:
        for cache_clear in _registered_clears:
            cache_clear()


__all__ = ["memoized", "clear_caches"]
