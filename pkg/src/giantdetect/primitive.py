"""Ruling out block systems from cycle types.

Suppose a transitive group has a block system of ``r`` blocks of size
``s = n/r`` and contains ``x``.  A cycle of ``x`` of length ``l`` then moves
its points through a cycle of ``c`` blocks, where

1. ``c`` divides ``l``, ``l <= c*s`` and ``c <= r``;
2. the remaining points of those ``c`` blocks are covered by other cycles of
   ``x`` whose lengths are multiples of ``c`` and add up to ``c*s - l``.

If some cycle length admits no such ``c``, no block system with ``r`` blocks
exists.  Condition 2 is a subset-sum decision.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from functools import reduce
from typing import Iterable, Sequence

from .cycletype import CycleType
from .numtheory import divisor_tuple

MAX_POOL = 64


def _half_sums(values: Sequence[int], bound: int) -> list[int]:
    sums = {0}
    for v in values:
        sums |= {s + v for s in sums if s + v <= bound}
    return sorted(sums)


def subset_sum_decision(values: Iterable[int], target: int) -> bool:
    """Does some sub-multiset of ``values`` (possibly empty) sum to ``target``?

    Meet in the middle: enumerate the subset sums of each half, then look up
    complements by binary search.
    """
    vals = sorted(values)
    if target == 0:
        return True
    total = sum(vals)
    if target < 0 or target > total:
        return False
    if target == total or target in vals:
        return True
    if target % reduce(math.gcd, vals) != 0:
        return False
    half = len(vals) // 2
    left = _half_sums(vals[:half], target)
    right = _half_sums(vals[half:], target)
    for a in left:
        i = bisect_left(right, target - a)
        if i < len(right) and right[i] == target - a:
            return True
    return False


def exhaustive_subset_sum(values: Sequence[int], target: int) -> bool:
    """Reference decision that lists the sums of all ``2**len(values)`` subsets."""
    sums = [0]
    for v in values:
        sums += [s + v for s in sums]
    return target in sums


def exists_valid_c(
    t: CycleType, l: int, r: int, s: int, *, subset_sum: bool = True
) -> bool:
    """Can an ``l``-cycle of ``t`` sit in a block system of ``r`` blocks of size ``s``?

    With ``subset_sum=False`` only condition 1 is checked (the weaker
    Cameron-Cannon elimination).
    """
    lo = -(-l // s)
    for c in divisor_tuple(l):
        if c > r:
            break
        if c < lo:
            continue
        if not subset_sum:
            return True
        target = s - l // c
        if target == 0:
            return True
        pool = []
        removed = False
        for length, mult in t.parts:
            if length % c:
                continue
            if length == l and not removed:
                mult -= 1
                removed = True
            pool.extend([length // c] * mult)
        if len(pool) > MAX_POOL or subset_sum_decision(pool, target):
            return True
    return False


class BlockFilter:
    """Block counts ``r`` (``1 < r < n``, ``r | n``) not yet ruled out."""

    __slots__ = ("degree", "remaining")

    def __init__(self, degree: int, remaining: Iterable[int] | None = None):
        self.degree = degree
        if remaining is None:
            remaining = divisor_tuple(degree)[1:-1]
        self.remaining = tuple(sorted(remaining))

    def __len__(self) -> int:
        return len(self.remaining)

    def __bool__(self) -> bool:
        return bool(self.remaining)

    def __iter__(self):
        return iter(self.remaining)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BlockFilter):
            return NotImplemented
        return self.degree == other.degree and self.remaining == other.remaining

    def __repr__(self) -> str:
        return f"BlockFilter(n={self.degree}, remaining={list(self.remaining)})"


def is_eliminated(t: CycleType, r: int, *, subset_sum: bool = True) -> bool:
    s = t.degree // r
    return any(
        not exists_valid_c(t, l, r, s, subset_sum=subset_sum) for l, _ in t.parts
    )


def eliminate(f: BlockFilter, t: CycleType, *, subset_sum: bool = True) -> BlockFilter:
    """Filter with every block count that ``t`` rules out removed."""
    if t.degree != f.degree:
        raise ValueError(f"cycle type of degree {t.degree} for filter of degree {f.degree}")
    keep = [r for r in f.remaining if not is_eliminated(t, r, subset_sum=subset_sum)]
    return BlockFilter(f.degree, keep)


def primitive_test(t: CycleType, *, subset_sum: bool = True) -> bool:
    """True when any transitive group containing type ``t`` must be primitive."""
    return not eliminate(BlockFilter(t.degree), t, subset_sum=subset_sum)
