"""Seeded benchmark input generation.

All generators are pure functions of (n, distribution, seed): the same
arguments always reproduce the same sequence.  Uniform values come from
Python's Mersenne Twister (19937-bit state, period 2**19937 - 1, doubles in
[0, 1)), so a million draws essentially never collide.

"sawtooth" is interpreted as ascending ramps of ``index mod period``; the
default period 2 gives strict alternation.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Sequence

from .instrumentation import TaggedElement

KINDS = ("uniform", "sorted", "reversed", "sawtooth", "fewdistinct")


@dataclass(frozen=True)
class Distribution:
    """Input shape: one of uniform random, presorted, reversed, sawtooth
    ramps of a given period, or random keys from a small universe."""

    kind: str
    period: int = 2
    universe: int = 16

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown distribution {self.kind!r}; expected one of {KINDS}")
        if self.period < 2:
            raise ValueError("sawtooth period must be >= 2")
        if self.universe < 1:
            raise ValueError("fewdistinct universe must be >= 1")

    def label(self) -> str:
        if self.kind == "sawtooth":
            return f"sawtooth({self.period})"
        if self.kind == "fewdistinct":
            return f"fewdistinct({self.universe})"
        return self.kind


def generate(n: int, dist: Distribution, seed: int) -> list[float]:
    """Produce ``n`` double-precision values for the given distribution."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    rng = random.Random(seed)
    kind = dist.kind
    if kind == "uniform":
        return [rng.random() for _ in range(n)]
    if kind == "sorted":
        return sorted(rng.random() for _ in range(n))
    if kind == "reversed":
        return sorted((rng.random() for _ in range(n)), reverse=True)
    if kind == "sawtooth":
        p = dist.period
        return [float(i % p) for i in range(n)]
    # fewdistinct: duplicates guaranteed once n exceeds the universe
    u = dist.universe
    return [float(rng.randrange(u)) for _ in range(n)]


def tag(values: Sequence[float]) -> list[TaggedElement]:
    """Pair each value with its input index."""
    return [TaggedElement(v, i) for i, v in enumerate(values)]
