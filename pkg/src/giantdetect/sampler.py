"""Random group elements (product replacement) and random cycle types."""

from __future__ import annotations

import numpy as np

from .cycletype import CycleType, sign_of_type
from .perm import GeneratorSet, Permutation, PermutationError

MIN_MIXING_STEPS = 60
MIN_POOL = 10

_MASK64 = (1 << 64) - 1
_BUFFER = 512


class RandomSource:
    """Reproducible random stream identified by ``(seed, stream)``.

    Backed by the counter-based Philox generator keyed on both numbers, so
    every stream is independent and its output does not depend on platform
    or on how many other streams are in use.
    """

    def __init__(self, seed: int = 0, stream: int = 0):
        self.seed = seed & _MASK64
        self.stream = stream & _MASK64
        self._bits = np.random.Philox(key=self.seed | (self.stream << 64))
        self._buf: list[int] = []

    def spawn(self, stream: int) -> "RandomSource":
        return RandomSource(self.seed, stream)

    def _word(self) -> int:
        if not self._buf:
            self._buf = self._bits.random_raw(_BUFFER).tolist()
            self._buf.reverse()
        return self._buf.pop()

    def randbelow(self, n: int) -> int:
        """Uniform integer in ``[0, n)`` for ``1 <= n <= 2**64`` (exact, by rejection)."""
        if n < 1:
            raise ValueError("randbelow needs n >= 1")
        if n == 1:
            return 0
        shift = 64 - (n - 1).bit_length()
        while True:
            x = self._word() >> shift
            if x < n:
                return x

    def randint(self, a: int, b: int) -> int:
        """Uniform integer in ``[a, b]``."""
        return a + self.randbelow(b - a + 1)

    def random(self) -> float:
        return (self._word() >> 11) * (1.0 / (1 << 53))


def default_mixing_steps(n: int) -> int:
    """Initial replacement steps for degree ``n``: ``max(60, 20 * ceil(log2 n))``.

    A flat 60 steps leaves elements of S_n generated by a transposition and an
    n-cycle visibly non-uniform from degree 100 up (too few cycles).
    """
    return max(MIN_MIXING_STEPS, 20 * (n - 1).bit_length())


class ReplacementPool:
    """Product replacement state with an accumulator ("rattle" variant)."""

    def __init__(self, g: GeneratorSet, rng: RandomSource, mixing_steps: int | None = None):
        gens = list(g)
        size = max(MIN_POOL, 2 * len(gens))
        self.degree = g.degree
        self.slots = [gens[i % len(gens)].images for i in range(size)]
        self.accumulator = np.arange(g.degree, dtype=np.int64)
        self.steps_taken = 0
        if mixing_steps is None:
            mixing_steps = default_mixing_steps(g.degree)
        for _ in range(mixing_steps):
            self._step(rng)

    def _step(self, rng: RandomSource) -> np.ndarray:
        size = len(self.slots)
        i = rng.randbelow(size)
        j = rng.randbelow(size - 1)
        if j >= i:
            j += 1
        other = self.slots[j]
        if rng.randbelow(2):
            inv = np.empty_like(other)
            inv[other] = np.arange(other.size, dtype=other.dtype)
            other = inv
        # left-to-right product: slot_i * other sends p to other[slot_i[p]]
        self.slots[i] = other[self.slots[i]]
        self.accumulator = self.slots[i][self.accumulator]
        self.steps_taken += 1
        return self.accumulator

    def random_element(self, rng: RandomSource) -> Permutation:
        return Permutation._wrap(self._step(rng).copy())


def pool_init(g: GeneratorSet | list[Permutation], rng: RandomSource) -> ReplacementPool:
    if not isinstance(g, GeneratorSet):
        if not g:
            raise PermutationError("generator set must be non-empty")
        g = GeneratorSet(g)
    return ReplacementPool(g, rng)


def random_element(pool: ReplacementPool, rng: RandomSource) -> Permutation:
    return pool.random_element(rng)


def random_cycle_lengths(n: int, rng: RandomSource) -> list[int]:
    """Stick-breaking: cut a uniform length off the remaining points until none remain."""
    out = []
    r = n
    while r:
        length = rng.randbelow(r) + 1
        out.append(length)
        r -= length
    return out


def random_cycle_type(n: int, rng: RandomSource) -> CycleType:
    """Cycle type distributed as that of a uniform random element of S_n."""
    if n < 1:
        raise ValueError("degree must be positive")
    return CycleType.from_lengths(random_cycle_lengths(n, rng), n)


def random_even_cycle_type(n: int, rng: RandomSource) -> CycleType:
    """Cycle type distributed as that of a uniform random element of A_n."""
    while True:
        t = random_cycle_type(n, rng)
        if sign_of_type(t) == "even":
            return t


def random_type_of_class(n: int, cls: str, rng: RandomSource) -> CycleType:
    if cls == "sym":
        return random_cycle_type(n, rng)
    if cls == "alt":
        return random_even_cycle_type(n, rng)
    raise ValueError(f"unknown class {cls!r} (expected 'sym' or 'alt')")
