"""Cycle types and the order/power calculus on them.

Everything here works on the multiset of cycle lengths alone.  The order of
an element is kept in factored form (``order_valuations``) because the lcm of
the cycle lengths of a large random permutation does not fit in a machine
word and is never needed as an integer.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from typing import Iterable

from .numtheory import factorize, is_prime


class CycleTypeError(ValueError):
    pass


class CycleType:
    """Multiset of cycle lengths of a degree-``n`` permutation.

    ``parts`` holds ``(length, multiplicity)`` pairs with lengths strictly
    decreasing.  Fixed points are length-1 parts.
    """

    __slots__ = ("degree", "parts", "_hash")

    def __init__(self, degree: int, parts: Iterable[tuple[int, int]]):
        merged: dict[int, int] = {}
        for length, mult in parts:
            if length < 1 or mult < 0:
                raise CycleTypeError(f"bad part {length}^{mult}")
            if mult:
                merged[length] = merged.get(length, 0) + mult
        self.degree = degree
        self.parts = tuple(sorted(merged.items(), reverse=True))
        total = sum(length * mult for length, mult in self.parts)
        if total != degree:
            raise CycleTypeError(f"cycle lengths sum to {total}, not degree {degree}")
        self._hash = hash((degree, self.parts))

    @classmethod
    def from_lengths(cls, lengths: Iterable[int], degree: int | None = None) -> "CycleType":
        lengths = list(lengths)
        counts: dict[int, int] = {}
        for length in lengths:
            counts[length] = counts.get(length, 0) + 1
        return cls(sum(lengths) if degree is None else degree, counts.items())

    @classmethod
    def from_dict(cls, counts: dict[int, int], degree: int | None = None) -> "CycleType":
        if degree is None:
            degree = sum(length * mult for length, mult in counts.items())
        return cls(degree, counts.items())

    def lengths(self) -> list[int]:
        """Every cycle length with repetition, descending."""
        return [length for length, mult in self.parts for _ in range(mult)]

    def as_dict(self) -> dict[int, int]:
        return dict(self.parts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CycleType):
            return NotImplemented
        return self.degree == other.degree and self.parts == other.parts

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"CycleType({format_cycle_type(self)!r})"


@dataclass(frozen=True)
class PrimePowerShape:
    """Type of the order-``p`` power: ``m`` p-cycles and ``k`` fixed points."""

    p: int
    m: int
    k: int


def num_cycles(t: CycleType) -> int:
    return sum(mult for _, mult in t.parts)


def order_valuations(t: CycleType) -> dict[int, int]:
    """Map each prime dividing the element order to its exponent in the order."""
    vals: dict[int, int] = {}
    for length, _ in t.parts:
        for p, e in factorize(length).factors:
            if e > vals.get(p, 0):
                vals[p] = e
    return vals


def prime_power_shape(t: CycleType, p: int) -> PrimePowerShape:
    """Shape of ``x ** (ord(x) // p)`` for an element ``x`` of type ``t``."""
    top = order_valuations(t).get(p, 0)
    if top == 0:
        raise CycleTypeError(f"{p} does not divide the order of {format_cycle_type(t)}")
    moved = sum(
        length * mult for length, mult in t.parts if factorize(length).valuation(p) == top
    )
    m = moved // p
    return PrimePowerShape(p, m, t.degree - m * p)


def single_cycle_power(t: CycleType) -> int | None:
    """Largest ``l`` with ``1 < l < n-2`` such that a power of ``x`` is one l-cycle.

    A power of ``x`` is a single ``l``-cycle plus fixed points exactly when
    ``l`` occurs once and is coprime to every other cycle length.
    """
    n = t.degree
    for length, mult in t.parts:
        if mult != 1 or not 1 < length < n - 2:
            continue
        if all(math.gcd(length, other) == 1 for other, _ in t.parts if other != length):
            return length
    return None


def sign_of_type(t: CycleType) -> str:
    return "even" if (t.degree - num_cycles(t)) % 2 == 0 else "odd"


def has_large_prime_cycle(t: CycleType) -> bool:
    """True iff some cycle length is a prime ``p`` with ``n/2 < p < n-2``."""
    n = t.degree
    return any(2 * length > n and length < n - 2 and is_prime(length) for length, _ in t.parts)


def format_cycle_type(t: CycleType) -> str:
    body = ",".join(f"{length}^{mult}" for length, mult in t.parts)
    return f"n={t.degree}; {body}"


_TYPE_RE = re.compile(r"\s*n\s*=\s*(\d+)\s*;\s*(.*?)\s*")


def parse_cycle_type(text: str) -> CycleType:
    """Inverse of :func:`format_cycle_type`, e.g. ``"n=10; 6^1,4^1"``."""
    m = _TYPE_RE.fullmatch(text)
    if not m:
        raise CycleTypeError(f"malformed cycle type: {text!r}")
    parts = []
    for item in filter(None, (s.strip() for s in m.group(2).split(","))):
        pm = re.fullmatch(r"(\d+)\s*\^\s*(\d+)", item)
        if not pm:
            raise CycleTypeError(f"malformed part {item!r} in {text!r}")
        parts.append((int(pm.group(1)), int(pm.group(2))))
    return CycleType(int(m.group(1)), parts)
