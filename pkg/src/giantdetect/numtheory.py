"""Factorization, primality and divisors for integers up to 10**12."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

MAX_VALUE = 10**12
_TRIAL_BOUND = 10**5

# Deterministic Miller-Rabin witnesses for every n < 2**64.
_MR_BASES = (2, 325, 9375, 28178, 450775, 9780504, 1795265022)


def _small_primes(limit: int) -> tuple[int, ...]:
    sieve = bytearray([1]) * limit
    sieve[0:2] = b"\x00\x00"
    for p in range(2, math.isqrt(limit - 1) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, limit, p)))
    return tuple(i for i in range(limit) if sieve[i])


_PRIMES = _small_primes(_TRIAL_BOUND)


@dataclass(frozen=True)
class Factorization:
    value: int
    factors: tuple[tuple[int, int], ...]

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def valuation(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    def num_divisors(self) -> int:
        return math.prod(e + 1 for _, e in self.factors)


def is_prime(m: int) -> bool:
    """Deterministic primality test (Miller-Rabin with a 64-bit witness set)."""
    if m < 2:
        return False
    for p in _PRIMES[:12]:
        if m % p == 0:
            return m == p
    d, s = m - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        a %= m
        if a == 0:
            continue
        x = pow(a, d, m)
        if x == 1 or x == m - 1:
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def _brent_rho(m: int) -> int:
    # m is odd, composite and free of small factors
    for c in range(1, m):
        y, r, q, g = 2, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % m
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(128, r - k)):
                    y = (y * y + c) % m
                    q = q * abs(x - y) % m
                g = math.gcd(q, m)
                k += 128
            r *= 2
        if g == m:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % m
                g = math.gcd(abs(x - ys), m)
        if g != m:
            return g
    raise ArithmeticError(f"rho failed to split {m}")


def _split(m: int, out: dict[int, int]) -> None:
    if m == 1:
        return
    if is_prime(m):
        out[m] = out.get(m, 0) + 1
        return
    d = _brent_rho(m)
    _split(d, out)
    _split(m // d, out)


@lru_cache(maxsize=1 << 16)
def factorize(m: int) -> Factorization:
    """Return the prime factorization of ``1 <= m <= 10**12``."""
    if not 1 <= m <= MAX_VALUE:
        raise ValueError(f"factorize: {m} outside the supported range 1..{MAX_VALUE}")
    found: dict[int, int] = {}
    rest = m
    for p in _PRIMES:
        if p * p > rest:
            break
        if rest % p == 0:
            e = 0
            while rest % p == 0:
                rest //= p
                e += 1
            found[p] = e
    if rest > 1:
        _split(rest, found)
    return Factorization(m, tuple(sorted(found.items())))


@lru_cache(maxsize=1 << 16)
def divisor_tuple(m: int) -> tuple[int, ...]:
    divs = [1]
    for p, e in factorize(m).factors:
        divs = [d * p**i for d in divs for i in range(e + 1)]
    return tuple(sorted(divs))


def divisors(m: int) -> list[int]:
    """All positive divisors of ``m`` in ascending order."""
    return list(divisor_tuple(m))
