"""Monte Carlo experiments on random cycle types.

Every trial draws its cycle types from its own random stream
``RandomSource(seed, trial)``, so results do not depend on the number of
worker processes or on scheduling.  Running a trial once with a large ``k``
and recording how many types it consumed before succeeding gives the
verdict for every smaller ``k`` at once, because the first ``k`` types of a
trial's stream are the same whatever ``k`` is.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Iterator

from scipy.stats import binomtest

from .altsym import Strategy, core_on_types
from .cycletype import CycleType, has_large_prime_cycle, num_cycles
from .sampler import RandomSource, random_cycle_type, random_type_of_class

K_CAP = 64
CONFIDENCE = 0.95
PROPORTION_BLOCK = 1024

PREDICATES = ("large_prime_order", "odd_cycle_gt_half", "all_even_cycles", "many_cycles")

# N -> k for epsilon = 0.1, 0.05, 0.02, 0.01 (even degrees)
K_TABLE_EPSILONS = (0.1, 0.05, 0.02, 0.01)
K_TABLE = {
    10: (6, 6, 8, 9),
    20: (4, 5, 6, 6),
    30: (4, 4, 5, 6),
    50: (3, 3, 4, 5),
    100: (3, 3, 4, 4),
    1000: (2, 2, 3, 3),
    10**4: (2, 2, 2, 2),
    10**5: (1, 2, 2, 2),
    10**6: (1, 1, 2, 2),
    10**8: (1, 1, 1, 2),
    10**12: (1, 1, 1, 1),
}


def wilson_interval(hits: int, trials: int, confidence: float = CONFIDENCE) -> tuple[float, float]:
    ci = binomtest(hits, trials).proportion_ci(confidence_level=confidence, method="wilson")
    # clamp rounding noise so the interval always contains hits/trials
    rate = hits / trials
    return min(ci.low, rate), max(ci.high, rate)


@dataclass
class TrialReport:
    degree: int
    strategy: str
    k: int
    trials: int
    failures: int
    failure_rate: float
    ci_low: float
    ci_high: float
    cls: str = "sym"

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class KEstimate:
    degree: int
    epsilon: float
    strategy: str
    k: int | None
    trials: int
    failures: int
    failure_rate: float
    ci_high: float
    cls: str = "sym"

    @property
    def found(self) -> bool:
        return self.k is not None

    def to_dict(self) -> dict:
        return asdict(self)


@dataclass
class ProportionReport:
    degree: int
    predicate: str
    trials: int
    hits: int
    estimate: float
    ci_low: float
    ci_high: float

    def to_dict(self) -> dict:
        return asdict(self)


def trial_types(n: int, cls: str, seed: int, trial: int) -> Iterator[CycleType]:
    rng = RandomSource(seed, trial)
    while True:
        yield random_type_of_class(n, cls, rng)


def _needed_chunk(args) -> list[int]:
    n, strategy, kmax, cls, seed, lo, hi = args
    out = []
    for trial in range(lo, hi):
        v = core_on_types(strategy, n, trial_types(n, cls, seed, trial), kmax)
        # kmax + 1 marks "no success within kmax types"
        out.append(v.elements_examined if v.giant_proven else kmax + 1)
    return out


def _chunks(trials: int, workers: int) -> list[tuple[int, int]]:
    size = max(1, math.ceil(trials / (4 * workers)))
    return [(lo, min(lo + size, trials)) for lo in range(0, trials, size)]


def elements_needed(
    n: int,
    strategy: Strategy | str,
    kmax: int,
    trials: int,
    cls: str = "sym",
    seed: int = 0,
    workers: int = 1,
) -> list[int]:
    """Types consumed by each trial before success, ``kmax + 1`` if none."""
    strategy = Strategy(strategy).value
    jobs = [(n, strategy, kmax, cls, seed, lo, hi) for lo, hi in _chunks(trials, workers)]
    if workers <= 1:
        parts = map(_needed_chunk, jobs)
        return [x for part in parts for x in part]
    with ProcessPoolExecutor(workers) as ex:
        return [x for part in ex.map(_needed_chunk, jobs) for x in part]


def _report(n, strategy, k, needed, cls) -> TrialReport:
    failures = sum(1 for x in needed if x > k)
    lo, hi = wilson_interval(failures, len(needed))
    return TrialReport(n, Strategy(strategy).value, k, len(needed), failures,
                       failures / len(needed), lo, hi, cls)


def failure_rate(
    n: int,
    strategy: Strategy | str,
    k: int,
    trials: int,
    cls: str = "sym",
    rng: RandomSource | None = None,
    workers: int = 1,
) -> TrialReport:
    """Fraction of ``trials`` runs on ``k`` random types that fail to prove a giant."""
    if n < 2 or trials < 1:
        raise ValueError("need n >= 2 and trials >= 1")
    seed = rng.seed if rng is not None else 0
    needed = elements_needed(n, strategy, k, trials, cls, seed, workers) if k else [1] * trials
    return _report(n, strategy, k, needed, cls)


def failure_profile(
    n: int,
    strategy: Strategy | str,
    kmax: int,
    trials: int,
    cls: str = "sym",
    rng: RandomSource | None = None,
    workers: int = 1,
) -> list[TrialReport]:
    """Failure reports for ``k = 1..kmax`` from one shared set of trials."""
    seed = rng.seed if rng is not None else 0
    needed = elements_needed(n, strategy, kmax, trials, cls, seed, workers)
    return [_report(n, strategy, k, needed, cls) for k in range(1, kmax + 1)]


def estimate_k(
    n: int,
    epsilon: float,
    strategy: Strategy | str = Strategy.ALTSYM,
    trials: int = 20000,
    cls: str = "sym",
    rng: RandomSource | None = None,
    workers: int = 1,
    kmax: int = K_CAP,
) -> KEstimate:
    """Smallest ``k`` whose failure rate has Wilson upper bound below ``epsilon``."""
    if not 0 < epsilon < 1:
        raise ValueError(f"epsilon must lie in (0, 1), got {epsilon}")
    seed = rng.seed if rng is not None else 0
    needed = elements_needed(n, strategy, kmax, trials, cls, seed, workers)
    return k_from_needed(n, epsilon, needed, kmax, strategy, cls)


def k_from_needed(
    n: int,
    epsilon: float,
    needed: list[int],
    kmax: int,
    strategy: Strategy | str = Strategy.ALTSYM,
    cls: str = "sym",
) -> KEstimate:
    """Pick ``k`` from the output of ``elements_needed(..., kmax, ...)``.

    Lets one set of trials answer several values of ``epsilon``.
    """
    if not needed:
        raise ValueError("no trials")
    rep = None
    for k in range(1, kmax + 1):
        rep = _report(n, strategy, k, needed, cls)
        if rep.ci_high < epsilon:
            return KEstimate(n, epsilon, rep.strategy, k, len(needed), rep.failures,
                             rep.failure_rate, rep.ci_high, cls)
    if rep is None:
        rep = _report(n, strategy, 0, needed, cls)
    return KEstimate(n, epsilon, rep.strategy, None, len(needed), rep.failures,
                     rep.failure_rate, rep.ci_high, cls)


def _predicate(name: str, n: int):
    if name == "large_prime_order":
        return has_large_prime_cycle
    if name == "odd_cycle_gt_half":
        return lambda t: any(length % 2 and 2 * length > n for length, _ in t.parts)
    if name == "all_even_cycles":
        if n % 2:
            raise ValueError("all_even_cycles needs an even degree")
        return lambda t: all(length % 2 == 0 for length, _ in t.parts)
    if name == "many_cycles":
        bound = 2 * math.log(n)
        return lambda t: num_cycles(t) > bound
    raise ValueError(f"unknown predicate {name!r}; choose from {', '.join(PREDICATES)}")


def _count_chunk(args) -> int:
    n, name, seed, block, count = args
    pred = _predicate(name, n)
    rng = RandomSource(seed, block)
    return sum(1 for _ in range(count) if pred(random_cycle_type(n, rng)))


def proportion(
    n: int,
    predicate: str,
    trials: int,
    rng: RandomSource | None = None,
    workers: int = 1,
) -> ProportionReport:
    """Estimate the proportion of elements of S_n with the given cycle-type property.

    Samples are drawn in blocks of ``PROPORTION_BLOCK``; block ``b`` uses
    stream ``b`` of the seed.
    """
    _predicate(predicate, n)
    seed = rng.seed if rng is not None else 0
    jobs = [
        (n, predicate, seed, b, min(PROPORTION_BLOCK, trials - lo))
        for b, lo in enumerate(range(0, trials, PROPORTION_BLOCK))
    ]
    if workers <= 1:
        hits = sum(map(_count_chunk, jobs))
    else:
        with ProcessPoolExecutor(workers) as ex:
            hits = sum(ex.map(_count_chunk, jobs))
    lo, hi = wilson_interval(hits, trials)
    return ProportionReport(n, predicate, trials, hits, hits / trials, lo, hi)


def reference_k(n: int, epsilon: float) -> tuple[int, str]:
    """Heuristic ``k`` for degree ``n`` and error ``epsilon`` from the reference k table.

    Uses the row of the largest tabulated degree not above ``n`` (the first
    row for smaller ``n``) and the least strict tabulated epsilon not above
    the request.  Below 0.01, ``k`` doubles for each factor of 100.
    Returns ``(k, explanation)``.
    """
    if not 0 < epsilon < 1:
        raise ValueError(f"epsilon must lie in (0, 1), got {epsilon}")
    rows = sorted(K_TABLE)
    row = max((d for d in rows if d <= n), default=rows[0])
    if epsilon >= K_TABLE_EPSILONS[-1]:
        col = next(i for i, e in enumerate(K_TABLE_EPSILONS) if e <= epsilon)
        k = K_TABLE[row][col]
        return k, f"k table row N={row}, column eps={K_TABLE_EPSILONS[col]}"
    doublings = math.ceil(math.log(K_TABLE_EPSILONS[-1] / epsilon, 100) - 1e-12)
    k = K_TABLE[row][-1] * 2**doublings
    return k, f"k table row N={row}, column eps=0.01, doubled {doublings} time(s)"
