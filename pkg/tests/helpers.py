"""Shared oracles and fixtures for the test suite.

The oracles deliberately stay brute force (two-pointer merges, full copies)
so they remain independent of the code paths they check.
"""

from __future__ import annotations

import random
from typing import Any, Sequence

from sortbench.comparator import Comparator, default_compare
from sortbench.instrumentation import TaggedElement


def stable_merge_oracle(
    a: Sequence[Any], b: Sequence[Any], compare: Comparator = default_compare
) -> list[Any]:
    """Plain two-pointer stable merge into a fresh list; ties taken from a."""
    out = []
    j = k = 0
    while j < len(a) and k < len(b):
        if compare(b[k], a[j]) < 0:
            out.append(b[k])
            k += 1
        else:
            out.append(a[j])
            j += 1
    out.extend(a[j:])
    out.extend(b[k:])
    return out


class RecordingList(list):
    """List that logs the index of every single-item write."""

    def __init__(self, iterable=()):
        super().__init__(iterable)
        self.writes: list[int] = []

    def __setitem__(self, index, value):
        if not isinstance(index, slice):
            self.writes.append(index)
        super().__setitem__(index, value)


class NoCompare:
    """Object that refuses every ordering comparison."""

    def _refuse(self, other):
        raise AssertionError("element was compared")

    __lt__ = __le__ = __gt__ = __ge__ = _refuse


class RampSequence:
    """Read-only sorted sequence computed on demand: ``base + (t // block) * step``.

    Lets co-ranking tests cover million-element instances without
    materializing them; ``block`` controls duplicate-run length.
    """

    __slots__ = ("n", "base", "block", "step")

    def __init__(self, n: int, base: float, block: int, step: float):
        if n < 0 or block < 1:
            raise ValueError("need n >= 0 and block >= 1")
        self.n = n
        self.base = base
        self.block = block
        self.step = step

    def __len__(self) -> int:
        return self.n

    def __getitem__(self, t: int) -> float:
        if not 0 <= t < self.n:
            raise IndexError(t)
        return self.base + (t // self.block) * self.step


def sorted_random_run(rng: random.Random, n: int, universe: int | None = None) -> list[float]:
    """Sorted run of n keys: floats, or duplicates from a small universe."""
    if universe is None:
        return sorted(rng.random() for _ in range(n))
    return sorted(float(rng.randrange(universe)) for _ in range(n))


def tagged_runs(
    rng: random.Random, n1: int, n2: int, universe: int
) -> list[TaggedElement]:
    """Two adjacent sorted runs of tagged duplicate-heavy keys, tags 0..n-1."""
    keys1 = sorted_random_run(rng, n1, universe)
    keys2 = sorted_random_run(rng, n2, universe)
    return [TaggedElement(k, i) for i, k in enumerate(keys1 + keys2)]
