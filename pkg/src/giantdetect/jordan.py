"""Recognise Jordan elements from a cycle type.

An element is a Jordan element when every primitive group containing it
contains A_n.  A type is certified when a power of the element is a single
short cycle, or has prime order with a shape covered by one of the classical
criteria (Jordan/Manning/Weiss/Saxl, Manning 1918, Praeger 1979).
"""

from __future__ import annotations

from dataclasses import dataclass

from .cycletype import (
    CycleType,
    order_valuations,
    prime_power_shape,
    single_cycle_power,
)

J14 = "J14"
JMWS = "JMWS"
M18 = "M18"
P79 = "P79"


@dataclass(frozen=True)
class JordanCertificate:
    theorem: str
    n: int
    l: int | None = None
    p: int | None = None
    m: int | None = None
    k: int | None = None

    def is_valid(self) -> bool:
        if self.theorem == J14:
            return self.l is not None and check_j14(self.l, self.n)
        if None in (self.p, self.m, self.k) or self.m * self.p + self.k != self.n:
            return False
        if self.theorem == JMWS:
            return check_jmws(self.m, self.p, self.k)
        if self.theorem == M18:
            return check_m18(self.m, self.p, self.k)
        if self.theorem == P79:
            return check_p79(self.m, self.p, self.k, self.n)
        return False

    def __str__(self) -> str:
        if self.theorem == J14:
            return f"J14 l={self.l}"
        return f"{self.theorem} p={self.p} m={self.m} k={self.k}"


def check_j14(l: int, n: int) -> bool:
    """An l-cycle with ``1 < l < n-2``."""
    return 1 < l < n - 2


# m -> (k bound, p bound, k bound when p exceeds the p bound)
_JMWS_ROWS = {
    2: (3, 3, 2),
    3: (3, None, None),
    4: (5, 5, 4),
    5: (2, None, None),
    6: (7, 7, 6),
    7: (8, None, None),
}


def check_jmws(m: int, p: int, k: int) -> bool:
    if not m < p or m not in _JMWS_ROWS:
        return False
    kb, pb, kb2 = _JMWS_ROWS[m]
    return k > kb or (pb is not None and p > pb and k > kb2)


def check_m18(m: int, p: int, k: int) -> bool:
    # the shared hypothesis m < p is implied by p > 2m - 2 once m > 5
    return m > 5 and p > 2 * m - 2 and k > 4 * m - 4


def check_p79(m: int, p: int, k: int, n: int) -> bool:
    if not (1 < m < p) or p % 2 == 0:
        return False
    c = m + (p + 1) // 2
    # k > 5m/2 - 2, kept in integers
    return 2 * k > 5 * m - 4 and n != 9 and n != c * (c - 1) // 2


def jordan_test(t: CycleType) -> JordanCertificate | None:
    """Certificate that some power of an element of type ``t`` is a Jordan element.

    Single-cycle powers are tried first, then prime-order powers with the
    largest prime first.  Returns ``None`` when no criterion applies.
    """
    n = t.degree
    l = single_cycle_power(t)
    if l is not None and check_j14(l, n):
        return _checked(JordanCertificate(J14, n, l=l))
    for p in sorted(order_valuations(t), reverse=True):
        shape = prime_power_shape(t, p)
        m, k = shape.m, shape.k
        if m == 1:
            if check_j14(p, n):
                return _checked(JordanCertificate(J14, n, l=p))
            continue
        for tag, ok in (
            (JMWS, check_jmws(m, p, k)),
            (M18, check_m18(m, p, k)),
            (P79, check_p79(m, p, k, n)),
        ):
            if ok:
                return _checked(JordanCertificate(tag, n, p=p, m=m, k=k))
    return None


def _checked(cert: JordanCertificate) -> JordanCertificate:
    if not cert.is_valid():
        raise AssertionError(f"unsound certificate {cert}")
    return cert
