"""One-sided giant detection: AltsymTest and two baselines.

``altsym``
    Jordan-element certification plus block-system elimination with the
    subset-sum criterion.
``cameron_cannon``
    The same loop without the subset-sum criterion.
``large_prime``
    Look for a cycle of prime length ``p`` with ``n/2 < p < n-2``.

A ``True`` verdict always means the group contains A_n.  A ``False`` verdict
claims nothing.
"""

from __future__ import annotations

import enum
import math
import time
from dataclasses import asdict, dataclass, field
from typing import Iterable, Iterator

from .cycletype import CycleType, num_cycles
from .jordan import J14, JordanCertificate, jordan_test
from .numtheory import divisor_tuple, is_prime
from .perm import GeneratorSet, Permutation, cycle_structure, is_transitive
from .primitive import BlockFilter, eliminate
from .sampler import RandomSource, pool_init


class Strategy(str, enum.Enum):
    ALTSYM = "altsym"
    CAMERON_CANNON = "cameron_cannon"
    LARGE_PRIME = "large_prime"


@dataclass
class Verdict:
    giant_proven: bool
    degree: int
    strategy: str = Strategy.ALTSYM.value
    jordan: JordanCertificate | None = None
    remaining_r: list[int] = field(default_factory=list)
    elements_examined: int = 0
    elements_skipped: int = 0
    transitive: bool = True
    analysis_seconds: float = 0.0

    def __post_init__(self):
        if self.giant_proven:
            assert self.transitive and self.jordan is not None and not self.remaining_r

    def __bool__(self) -> bool:
        return self.giant_proven

    def to_dict(self) -> dict:
        d = asdict(self)
        d["jordan"] = str(self.jordan) if self.jordan else None
        return d


def cycle_filter_bound(n: int) -> float:
    """Elements with at least this many cycles are skipped."""
    return 2 * math.log(n)


def _large_prime_length(t: CycleType) -> int | None:
    n = t.degree
    for length, _ in t.parts:
        if 2 * length > n and length < n - 2 and is_prime(length):
            return length
    return None


def _run(
    n: int,
    types: Iterable[CycleType],
    k: int,
    strategy: Strategy,
    early_exit: bool = True,
) -> Verdict:
    strategy = Strategy(strategy)
    if n < 1:
        raise ValueError("degree must be positive")
    if k < 0:
        raise ValueError("k must be non-negative")
    bound = cycle_filter_bound(n)
    jordan = None
    filt = BlockFilter(n)
    examined = skipped = 0
    spent = 0.0
    it = iter(types)
    for _ in range(k):
        if early_exit and jordan is not None and not filt:
            break
        t = next(it, None)
        if t is None:
            break
        if t.degree != n:
            raise ValueError(f"cycle type of degree {t.degree}, expected {n}")
        examined += 1
        start = time.perf_counter()
        if strategy is Strategy.LARGE_PRIME:
            if jordan is None:
                p = _large_prime_length(t)
                if p is not None:
                    jordan = JordanCertificate(J14, n, l=p)
                    filt = BlockFilter(n, ())
        elif num_cycles(t) >= bound:
            skipped += 1
        else:
            if jordan is None:
                jordan = jordan_test(t)
            if filt:
                filt = eliminate(filt, t, subset_sum=strategy is Strategy.ALTSYM)
        spent += time.perf_counter() - start
    return Verdict(
        giant_proven=jordan is not None and not filt,
        degree=n,
        strategy=strategy.value,
        jordan=jordan,
        remaining_r=list(filt.remaining),
        elements_examined=examined,
        elements_skipped=skipped,
        analysis_seconds=spent,
    )


def altsym_core_on_types(n: int, types: Iterable[CycleType], k: int, **kw) -> Verdict:
    """AltsymTest on a stream of cycle types of a group assumed transitive."""
    return _run(n, types, k, Strategy.ALTSYM, **kw)


def cc_core_on_types(n: int, types: Iterable[CycleType], k: int, **kw) -> Verdict:
    return _run(n, types, k, Strategy.CAMERON_CANNON, **kw)


def large_prime_core_on_types(n: int, types: Iterable[CycleType], k: int, **kw) -> Verdict:
    return _run(n, types, k, Strategy.LARGE_PRIME, **kw)


def core_on_types(
    strategy: Strategy | str, n: int, types: Iterable[CycleType], k: int, **kw
) -> Verdict:
    return _run(n, types, k, Strategy(strategy), **kw)


def _random_types(g: GeneratorSet, rng: RandomSource) -> Iterator[CycleType]:
    pool = pool_init(g, rng)
    while True:
        yield cycle_structure(pool.random_element(rng))


def detect(
    g: GeneratorSet | list[Permutation],
    k: int,
    rng: RandomSource,
    strategy: Strategy | str = Strategy.ALTSYM,
    early_exit: bool = True,
) -> Verdict:
    """Run ``strategy`` on up to ``k`` random elements of the group generated by ``g``."""
    if not isinstance(g, GeneratorSet):
        g = GeneratorSet(g)
    strategy = Strategy(strategy)
    if k < 0:
        raise ValueError("k must be non-negative")
    if not is_transitive(g):
        return Verdict(
            giant_proven=False,
            degree=g.degree,
            strategy=strategy.value,
            remaining_r=list(divisor_tuple(g.degree)[1:-1]),
            transitive=False,
        )
    # the pool is built lazily so that k = 0 does no group work
    return _run(g.degree, _random_types(g, rng), k, strategy, early_exit)


def altsym_test(g, k: int, rng: RandomSource, **kw) -> Verdict:
    return detect(g, k, rng, Strategy.ALTSYM, **kw)


def cameron_cannon_test(g, k: int, rng: RandomSource, **kw) -> Verdict:
    return detect(g, k, rng, Strategy.CAMERON_CANNON, **kw)


def large_prime_test(g, k: int, rng: RandomSource, **kw) -> Verdict:
    return detect(g, k, rng, Strategy.LARGE_PRIME, **kw)
