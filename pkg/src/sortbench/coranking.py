"""Co-ranking: split a rank in the merged view of two sorted sequences.

Given sorted sequences A and B and a rank ``i`` into their (never
materialized) stable merge C, the co-ranks are the unique pair ``(j, k)``
with ``j + k = i`` such that the first ``i`` elements of C are exactly
``A[0:j]`` and ``B[0:k]``.  They satisfy:

* ``j == 0`` or ``k == len(B)`` or ``A[j-1]`` precedes-or-equals ``B[k]``
* ``k == 0`` or ``j == len(A)`` or ``B[k-1]`` strictly precedes ``A[j]``

The asymmetry (``<=`` on the A side, ``<`` on the B side) is what makes the
split stable: equal keys are drawn from A before B.

The search converges in a binary-search fashion, maintaining ``j + k == i``
throughout, and costs at most ``2 * (ceil(log2(nA + nB + 1)) + 2)`` comparator
calls.  Range checks short-circuit ahead of every comparison, so the
comparator is never invoked with an out-of-range index.
"""

from __future__ import annotations

from typing import Any, Sequence

from .comparator import Comparator, default_compare


def co_rank(
    rank: int,
    first: Sequence[Any],
    second: Sequence[Any],
    compare: Comparator = default_compare,
) -> tuple[int, int]:
    """Return the co-ranks ``(j, k)`` of ``rank`` in sorted ``first``/``second``.

    Requires ``0 <= rank <= len(first) + len(second)`` and both inputs sorted
    under ``compare``; raises ValueError for an out-of-range rank.
    """
    na = len(first)
    nb = len(second)
    if not 0 <= rank <= na + nb:
        raise ValueError(f"rank {rank} not in [0, {na + nb}]")
    return _co_rank_spans(rank, first, 0, na, second, 0, nb, compare)


def _co_rank_spans(
    i: int,
    a: Sequence[Any],
    a_lo: int,
    na: int,
    b: Sequence[Any],
    b_lo: int,
    nb: int,
    compare: Comparator,
) -> tuple[int, int]:
    # Search over a[a_lo:a_lo+na] and b[b_lo:b_lo+nb]; indices j, k are
    # relative to the span starts. Callers guarantee 0 <= i <= na + nb.
    j = i if i < na else na
    k = i - j
    j_low = i - nb if i > nb else 0
    k_low = i - na if i > na else 0
    while True:
        if j > 0 and k < nb and compare(a[a_lo + j - 1], b[b_lo + k]) > 0:
            # too many taken from a: give half the slack back
            delta = (j - j_low + 1) >> 1
            k_low = k
            j -= delta
            k += delta
        elif k > 0 and j < na and compare(b[b_lo + k - 1], a[a_lo + j]) >= 0:
            # too many taken from b (ties must come from a first)
            delta = (k - k_low + 1) >> 1
            j_low = j
            j += delta
            k -= delta
        else:
            return j, k


def select_merged(
    rank: int,
    first: Sequence[Any],
    second: Sequence[Any],
    compare: Comparator = default_compare,
) -> Any:
    """Return element ``rank`` of the stable merge of two sorted sequences.

    Runs in O(log n) comparisons: co-rank the split, then pick whichever head
    element comes next (ties go to ``first``).
    """
    na = len(first)
    nb = len(second)
    if not 0 <= rank < na + nb:
        raise ValueError(f"rank {rank} not in [0, {na + nb})")
    j, k = _co_rank_spans(rank, first, 0, na, second, 0, nb, compare)
    if j < na and k < nb:
        return first[j] if compare(first[j], second[k]) <= 0 else second[k]
    return first[j] if j < na else second[k]


def co_rank_by_merge(
    rank: int,
    first: Sequence[Any],
    second: Sequence[Any],
    compare: Comparator = default_compare,
) -> tuple[int, int]:
    """Brute-force co-ranks: walk a stable two-pointer merge for ``rank`` steps
    and count how many elements each input contributed.  O(rank) time, used as
    an independent cross-check of :func:`co_rank`.
    """
    na = len(first)
    nb = len(second)
    if not 0 <= rank <= na + nb:
        raise ValueError(f"rank {rank} not in [0, {na + nb}]")
    j = 0
    k = 0
    while j + k < rank:
        if j < na and (k == nb or compare(first[j], second[k]) <= 0):
            j += 1
        else:
            k += 1
    return j, k
