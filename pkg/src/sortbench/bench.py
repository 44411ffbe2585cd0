"""Benchmark harness: run sorts, verify every result, time and count work,
fit complexity constants, and serialize records as CSV or JSON.

A timing is never reported for an unverified run: verification failure raises
:class:`VerificationError` carrying the diagnostic record instead.
"""

from __future__ import annotations

import csv
import io
import json
import math
import time
from collections import Counter
from dataclasses import dataclass, field, asdict
from functools import cmp_to_key
from typing import Any, Sequence

from .comparator import default_compare
from .datagen import Distribution, generate, tag
from .instrumentation import (
    MoveCountingList,
    SortStats,
    counting_comparator,
    key_comparator,
    verify_sorted,
    verify_stable_permutation,
)
from .merge import PhaseTimes
from .sorting import MergeStrategy, mergesort

ALGORITHMS = ("inplace", "buffered", "system")
FORMATS = ("csv", "json")
MODELS = ("nlogn", "nlog2n")

CSV_COLUMNS = (
    "algo",
    "n",
    "dist",
    "seed",
    "rep",
    "seconds",
    "comparisons",
    "moves",
    "max_depth",
    "verified",
    "corank_seconds",
    "rotation_seconds",
)


@dataclass(frozen=True)
class BenchConfig:
    """One benchmark cell: algorithm, input shape, and measurement flags."""

    algorithm: str = "inplace"
    n: int = 0
    dist: Distribution = field(default_factory=lambda: Distribution("uniform"))
    seed: int = 42
    reps: int = 1
    count_mode: bool = False
    output_format: str = "csv"
    attribute_phases: bool = False
    fixed_seed: bool = False
    tagged: bool = False

    def __post_init__(self) -> None:
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {self.algorithm!r}")
        if self.n < 0:
            raise ValueError("n must be nonnegative")
        if self.reps < 1:
            raise ValueError("reps must be >= 1")
        if self.output_format not in FORMATS:
            raise ValueError(f"unknown format {self.output_format!r}")


@dataclass
class BenchRecord:
    """One measured run (or the median summary row of a rep group).

    ``comparisons``/``moves``/``max_depth`` are populated in count mode,
    ``corank_seconds``/``rotation_seconds`` only for the in-place algorithm
    in phase-attribution mode.
    """

    algo: str
    n: int
    dist: str
    seed: int
    rep: int | str
    seconds: float
    comparisons: int = 0
    moves: int = 0
    max_depth: int = 0
    verified: bool = False
    corank_seconds: float | None = None
    rotation_seconds: float | None = None


@dataclass(frozen=True)
class FitResult:
    """Least-squares constant for y = c * x with x derived from the model."""

    c: float
    residual: float
    model: str


class VerificationError(Exception):
    """A sort produced an incorrect result; carries the diagnostic record."""

    def __init__(self, record: BenchRecord):
        super().__init__(
            f"verification failed: {record.algo} n={record.n} dist={record.dist} "
            f"seed={record.seed} rep={record.rep}"
        )
        self.record = record


def run_benchmark(config: BenchConfig) -> list[BenchRecord]:
    """Run every rep of one benchmark cell and append a median summary row.

    Each rep regenerates its input from ``seed ^ rep`` (or the base seed when
    ``fixed_seed`` is set), sorts, verifies, and records counters and wall
    time.  Raises :class:`VerificationError` on an incorrect result and lets
    MemoryError (buffered scratch allocation) propagate.
    """
    records = []
    for rep in range(config.reps):
        rep_seed = config.seed if config.fixed_seed else config.seed ^ rep
        record = _run_once(config, rep, rep_seed)
        if not record.verified:
            raise VerificationError(record)
        records.append(record)
    records.append(_median_summary(records))
    return records


def _run_once(config: BenchConfig, rep: int, rep_seed: int) -> BenchRecord:
    values = generate(config.n, config.dist, rep_seed)
    original: Sequence[Any]
    if config.tagged:
        original = tag(values)
        compare = key_comparator()
    else:
        original = values
        compare = default_compare

    arr: list[Any] = (
        MoveCountingList(original) if config.count_mode else list(original)
    )
    stats = SortStats() if config.count_mode else None
    phases = (
        PhaseTimes()
        if config.attribute_phases and config.algorithm == "inplace"
        else None
    )

    if config.algorithm == "system":
        if stats is not None:
            key = cmp_to_key(counting_comparator(compare, stats))
            t0 = time.perf_counter()
            arr.sort(key=key)
            seconds = time.perf_counter() - t0
        else:
            # timing reference: let the native sort run at full speed
            t0 = time.perf_counter()
            arr.sort()
            seconds = time.perf_counter() - t0
    else:
        strategy = (
            MergeStrategy.INPLACE
            if config.algorithm == "inplace"
            else MergeStrategy.BUFFERED
        )
        if stats is not None:
            mergesort(arr, compare, strategy, stats=stats, phases=phases)
            seconds = stats.wall_seconds
        else:
            t0 = time.perf_counter()
            mergesort(arr, compare, strategy, phases=phases)
            seconds = time.perf_counter() - t0

    if config.tagged:
        verified = verify_stable_permutation(original, arr)
    else:
        verified = verify_sorted(arr, compare) and Counter(arr) == Counter(original)

    return BenchRecord(
        algo=config.algorithm,
        n=config.n,
        dist=config.dist.label(),
        seed=rep_seed,
        rep=rep,
        seconds=seconds,
        comparisons=stats.comparisons if stats is not None else 0,
        moves=stats.moves if stats is not None else 0,
        max_depth=stats.max_merge_depth if stats is not None else 0,
        verified=verified,
        corank_seconds=phases.corank_seconds if phases is not None else None,
        rotation_seconds=phases.rotation_seconds if phases is not None else None,
    )


def _median(values: Sequence[float]) -> float:
    # true median for odd counts, lower median for even counts
    ordered = sorted(values)
    return ordered[(len(ordered) - 1) // 2]


def _median_summary(records: list[BenchRecord]) -> BenchRecord:
    first = records[0]
    has_phases = all(r.corank_seconds is not None for r in records)
    return BenchRecord(
        algo=first.algo,
        n=first.n,
        dist=first.dist,
        seed=first.seed,
        rep="median",
        seconds=_median([r.seconds for r in records]),
        comparisons=int(_median([r.comparisons for r in records])),
        moves=int(_median([r.moves for r in records])),
        max_depth=int(_median([r.max_depth for r in records])),
        verified=all(r.verified for r in records),
        corank_seconds=(
            _median([r.corank_seconds for r in records]) if has_phases else None
        ),
        rotation_seconds=(
            _median([r.rotation_seconds for r in records]) if has_phases else None
        ),
    )


def geometric_sizes(n_min: int, n_max: int, steps: int) -> list[int]:
    """Geometric ladder of ``steps`` sizes from ``n_min`` to ``n_max``,
    rounded to integers and deduplicated."""
    if n_min < 1 or n_max < n_min or steps < 1:
        raise ValueError("need 1 <= n_min <= n_max and steps >= 1")
    if steps == 1 or n_min == n_max:
        return [n_min] if n_min == n_max else [n_min, n_max]
    ratio = (n_max / n_min) ** (1.0 / (steps - 1))
    sizes = {n_min, n_max}
    for t in range(1, steps - 1):
        sizes.add(min(n_max, max(n_min, round(n_min * ratio**t))))
    return sorted(sizes)


def fit_constant(points: Sequence[tuple[int, float]], model: str) -> FitResult:
    """Least-squares fit of y = c * x over (n, y) points.

    x is ``n * log2(n)`` for model "nlogn" and ``n * log2(n)**2`` for
    "nlog2n"; c = sum(y*x) / sum(x*x) and the residual is the RMS of the
    relative errors (y - c*x) / y.
    """
    if model not in MODELS:
        raise ValueError(f"unknown model {model!r}")
    if len(points) < 2:
        raise ValueError("need at least 2 points to fit")
    xs = []
    ys = []
    for n, y in points:
        if n < 2:
            raise ValueError("all n must be >= 2")
        if y <= 0:
            raise ValueError("all y values must be positive")
        lg = math.log2(n)
        xs.append(n * lg if model == "nlogn" else n * lg * lg)
        ys.append(y)
    c = sum(y * x for x, y in zip(xs, ys)) / sum(x * x for x in xs)
    residual = math.sqrt(
        sum(((y - c * x) / y) ** 2 for x, y in zip(xs, ys)) / len(xs)
    )
    return FitResult(c=c, residual=residual, model=model)


def emit_report(records: Sequence[BenchRecord], output_format: str) -> str:
    """Serialize records as CSV (fixed column order) or a JSON array.

    All numbers are rendered in locale-independent form.
    """
    if output_format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        for r in records:
            d = asdict(r)
            writer.writerow(
                [
                    d["algo"],
                    d["n"],
                    d["dist"],
                    d["seed"],
                    d["rep"],
                    repr(d["seconds"]),
                    d["comparisons"],
                    d["moves"],
                    d["max_depth"],
                    "true" if d["verified"] else "false",
                    "" if d["corank_seconds"] is None else repr(d["corank_seconds"]),
                    "" if d["rotation_seconds"] is None else repr(d["rotation_seconds"]),
                ]
            )
        return buf.getvalue()
    if output_format == "json":
        return json.dumps([asdict(r) for r in records], indent=2) + "\n"
    raise ValueError(f"unknown format {output_format!r}")


def parse_report(text: str, output_format: str) -> list[BenchRecord]:
    """Parse a report produced by :func:`emit_report` back into records."""
    if output_format == "json":
        return [BenchRecord(**obj) for obj in json.loads(text)]
    if output_format == "csv":
        reader = csv.DictReader(io.StringIO(text))
        records = []
        for row in reader:
            records.append(
                BenchRecord(
                    algo=row["algo"],
                    n=int(row["n"]),
                    dist=row["dist"],
                    seed=int(row["seed"]),
                    rep=row["rep"] if row["rep"] == "median" else int(row["rep"]),
                    seconds=float(row["seconds"]),
                    comparisons=int(row["comparisons"]),
                    moves=int(row["moves"]),
                    max_depth=int(row["max_depth"]),
                    verified=row["verified"] == "true",
                    corank_seconds=(
                        float(row["corank_seconds"]) if row["corank_seconds"] else None
                    ),
                    rotation_seconds=(
                        float(row["rotation_seconds"])
                        if row["rotation_seconds"]
                        else None
                    ),
                )
            )
        return records
    raise ValueError(f"unknown format {output_format!r}")
