"""Generator sets for standard permutation groups (0-based points)."""

from __future__ import annotations

from .perm import GeneratorSet, Permutation


def _cycle(n: int, *pts: int) -> Permutation:
    return Permutation.from_cycles(n, [pts])


def symmetric(n: int) -> GeneratorSet:
    """S_n from the transposition (0 1) and the n-cycle."""
    if n == 1:
        return GeneratorSet([Permutation.identity(1)])
    return GeneratorSet([_cycle(n, 0, 1), _cycle(n, *range(n))])


def alternating(n: int) -> GeneratorSet:
    """A_n from (0 1 2) and an even long cycle."""
    if n < 3:
        return GeneratorSet([Permutation.identity(n)])
    if n % 2:
        return GeneratorSet([_cycle(n, 0, 1, 2), _cycle(n, *range(n))])
    return GeneratorSet([_cycle(n, 0, 1, 2), _cycle(n, *range(1, n))])


def cyclic(n: int) -> GeneratorSet:
    return GeneratorSet([_cycle(n, *range(n))])


def dihedral(n: int) -> GeneratorSet:
    """Symmetries of the n-gon acting on its vertices."""
    reflection = Permutation([(-i) % n for i in range(n)])
    return GeneratorSet([_cycle(n, *range(n)), reflection])


def wreath(b: int, a: int) -> GeneratorSet:
    """S_b wr S_a on a*b points; block ``i`` is ``{i*b, ..., i*b + b - 1}``.

    Imprimitive for ``a, b >= 2`` with block systems of ``a`` blocks (and
    possibly others).
    """
    n = a * b
    gens = [_cycle(n, 0, 1)]
    if b > 2:
        gens.append(_cycle(n, *range(b)))
    swap = list(range(n))
    for j in range(b):
        swap[j], swap[b + j] = b + j, j
    gens.append(Permutation(swap))
    if a > 2:
        gens.append(Permutation([(i + b) % n for i in range(n)]))
    return GeneratorSet(gens)


def mathieu11() -> GeneratorSet:
    # (1,2,...,11), (3,7,11,8)(4,10,5,6) in 1-based points
    return GeneratorSet([
        _cycle(11, *range(11)),
        Permutation.from_cycles(11, [(2, 6, 10, 7), (3, 9, 4, 5)]),
    ])


def mathieu12() -> GeneratorSet:
    # M11 generators plus (1,12)(2,11)(3,6)(4,8)(5,9)(7,10) in 1-based points
    return GeneratorSet([
        _cycle(12, *range(11)),
        Permutation.from_cycles(12, [(2, 6, 10, 7), (3, 9, 4, 5)]),
        Permutation.from_cycles(12, [(0, 11), (1, 10), (2, 5), (3, 7), (4, 8), (6, 9)]),
    ])


def pgl2(q: int) -> GeneratorSet:
    """PGL(2, q) for prime ``q`` on the projective line; point ``q`` is infinity."""
    inf = q
    root = next(g for g in range(2, q) if len({pow(g, i, q) for i in range(q - 1)}) == q - 1)

    def table(f):
        return Permutation([f(x) for x in range(q + 1)])

    translate = table(lambda x: inf if x == inf else (x + 1) % q)
    scale = table(lambda x: inf if x == inf else root * x % q)
    invert = table(lambda x: 0 if x == inf else inf if x == 0 else (-pow(x, -1, q)) % q)
    return GeneratorSet([translate, scale, invert])


FAMILIES = {
    "sym": symmetric,
    "alt": alternating,
    "cyclic": cyclic,
    "dihedral": dihedral,
}
