import itertools
import math
import random

from hypothesis import given, strategies as st

import sortbench.sorting as sorting_mod
from sortbench.comparator import default_compare
from sortbench.instrumentation import (
    SortStats,
    TaggedElement,
    key_comparator,
    verify_stable_permutation,
)
from sortbench.sorting import MergeStrategy, insertion_sorted, mergesort

from helpers import stable_merge_oracle


def sort_copy(values, strategy, compare=default_compare, stats=None):
    a = list(values)
    mergesort(a, compare, strategy, stats=stats)
    return a


def test_trivial_inputs():
    for strategy in MergeStrategy:
        assert sort_copy([], strategy) == []
        assert sort_copy([7], strategy) == [7]
        assert sort_copy([3, 1, 2], strategy) == [1, 2, 3]


def test_strategies_agree_with_reference():
    rng = random.Random(5)
    values = [rng.random() for _ in range(10_000)]
    buffered = sort_copy(values, MergeStrategy.BUFFERED)
    inplace = sort_copy(values, MergeStrategy.INPLACE)
    assert buffered == inplace
    assert inplace == sorted(values)


def test_small_sorts_match_insertion_sort():
    rng = random.Random(9)
    for n in range(65):
        values = [rng.randrange(8) for _ in range(n)]
        expected = insertion_sorted(values)
        assert sort_copy(values, MergeStrategy.BUFFERED) == expected
        assert sort_copy(values, MergeStrategy.INPLACE) == expected


def test_stability_on_duplicate_heavy_input():
    rng = random.Random(13)
    tagged = [TaggedElement(float(rng.randrange(8)), t) for t in range(1000)]
    for strategy in MergeStrategy:
        result = sort_copy(tagged, strategy, key_comparator())
        assert verify_stable_permutation(tagged, result)


def test_insertion_sorted_reference():
    assert insertion_sorted([2, 1]) == [1, 2]
    pair = [(1, "a"), (1, "b")]
    assert insertion_sorted(pair, key_comparator()) == pair
    for perm in itertools.permutations([3, 1, 4, 1, 5, 9]):
        assert insertion_sorted(list(perm)) == sorted(perm)


def test_per_merge_scratch_mode_identical():
    rng = random.Random(17)
    values = [rng.randrange(50) for _ in range(997)]
    reused = list(values)
    per_merge = list(values)
    mergesort(reused, strategy=MergeStrategy.BUFFERED)
    mergesort(per_merge, strategy=MergeStrategy.BUFFERED, per_merge_scratch=True)
    assert reused == per_merge == sorted(values)


def test_stats_populated():
    rng = random.Random(19)
    values = [rng.random() for _ in range(2048)]
    stats = SortStats()
    result = sort_copy(values, MergeStrategy.INPLACE, stats=stats)
    assert result == sorted(values)
    assert stats.comparisons > 0
    assert stats.wall_seconds > 0.0
    assert 0 < stats.max_merge_depth <= math.ceil(math.log2(2048)) + 2


def test_comparison_counts_deterministic():
    rng = random.Random(23)
    values = [rng.random() for _ in range(4096)]
    counts = set()
    for _ in range(3):
        stats = SortStats()
        sort_copy(values, MergeStrategy.INPLACE, stats=stats)
        counts.add(stats.comparisons)
    assert len(counts) == 1


def test_buffered_comparisons_classic_bound():
    rng = random.Random(29)
    for n in (2, 3, 100, 1000, 4096):
        values = [rng.random() for _ in range(n)]
        stats = SortStats()
        sort_copy(values, MergeStrategy.BUFFERED, stats=stats)
        assert stats.comparisons <= n * math.ceil(math.log2(n))


def test_counting_wrapper_transparent():
    rng = random.Random(31)
    values = [rng.randrange(6) for _ in range(512)]
    plain = sort_copy(values, MergeStrategy.INPLACE)
    counted = sort_copy(values, MergeStrategy.INPLACE, stats=SortStats())
    assert plain == counted


def test_driver_recursion_depth(monkeypatch):
    real = sorting_mod._sort_inplace
    depth = {"current": 0, "peak": 0}

    def wrapped(a, lo, n, compare, gauge, phases):
        depth["current"] += 1
        depth["peak"] = max(depth["peak"], depth["current"])
        try:
            return real(a, lo, n, compare, gauge, phases)
        finally:
            depth["current"] -= 1

    monkeypatch.setattr(sorting_mod, "_sort_inplace", wrapped)
    rng = random.Random(37)
    values = [rng.random() for _ in range(10_000)]
    mergesort(values)
    assert depth["peak"] <= math.ceil(math.log2(10_000)) + 1


@given(st.lists(st.integers(min_value=0, max_value=7), max_size=64), st.booleans())
def test_sorts_are_stable_permutations(keys, use_inplace):
    tagged = [TaggedElement(k, t) for t, k in enumerate(keys)]
    strategy = MergeStrategy.INPLACE if use_inplace else MergeStrategy.BUFFERED
    result = sort_copy(tagged, strategy, key_comparator())
    assert verify_stable_permutation(tagged, result)
