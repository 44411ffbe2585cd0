"""Three-way comparators: the ordering contract every other module builds on.

A comparator is a callable ``cmp(a, b)`` returning a negative int when ``a``
precedes ``b``, zero when their keys are equal, and a positive int when ``a``
succeeds ``b``.  It must implement a strict weak ordering and be deterministic
within a run; the library documents but does not detect violations.
"""

from __future__ import annotations

from typing import Any, Callable

Comparator = Callable[[Any, Any], int]


def default_compare(a: Any, b: Any) -> int:
    """Ascending three-way comparison using the elements' native ``<``."""
    if a < b:
        return -1
    if b < a:
        return 1
    return 0
