"""Permutations as image tables, cycle structure, text I/O and transitivity.

Points are 0-based internally and 1-based in every text format.  Products
are applied left to right: ``compose(a, b)`` sends ``i`` to ``b(a(i))``.
"""

from __future__ import annotations

import re
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .cycletype import CycleType


class PermutationError(ValueError):
    """Malformed permutation text or an invalid image table."""


class Permutation:
    """An immutable bijection of ``{0, ..., n-1}`` stored as its image table."""

    __slots__ = ("images",)

    def __init__(self, images, *, check: bool = True):
        arr = np.array(images, dtype=np.int64, copy=True)
        if arr.ndim != 1 or arr.size == 0:
            raise PermutationError("image table must be a non-empty 1-d sequence")
        if check:
            n = arr.size
            if arr.min() < 0 or arr.max() >= n:
                raise PermutationError("image out of range")
            if np.bincount(arr, minlength=n).max() != 1:
                raise PermutationError("image table is not a bijection")
        arr.flags.writeable = False
        self.images = arr

    @classmethod
    def _wrap(cls, arr: np.ndarray) -> "Permutation":
        # trusted constructor for results of arithmetic on valid tables
        obj = cls.__new__(cls)
        arr.flags.writeable = False
        obj.images = arr
        return obj

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._wrap(np.arange(n, dtype=np.int64))

    @classmethod
    def from_cycles(cls, n: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Build from 0-based cycles, e.g. ``from_cycles(4, [(0, 1, 2)])``."""
        images = np.arange(n, dtype=np.int64)
        seen: set[int] = set()
        for cyc in cycles:
            for i, a in enumerate(cyc):
                if not 0 <= a < n:
                    raise PermutationError(f"point {a + 1} out of range 1..{n}")
                if a in seen:
                    raise PermutationError(f"repeated point {a + 1}")
                seen.add(a)
                images[a] = cyc[(i + 1) % len(cyc)]
        return cls._wrap(images)

    @property
    def degree(self) -> int:
        return int(self.images.size)

    def __call__(self, i: int) -> int:
        return int(self.images[i])

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __pow__(self, e: int) -> "Permutation":
        return power(self, e)

    def inverse(self) -> "Permutation":
        inv = np.empty_like(self.images)
        inv[self.images] = np.arange(self.degree, dtype=np.int64)
        return Permutation._wrap(inv)

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.images, np.arange(self.degree)))

    def cycles(self) -> list[tuple[int, ...]]:
        """Non-trivial cycles, each starting at its least point."""
        seen = np.zeros(self.degree, dtype=bool)
        img = self.images.tolist()
        out = []
        for start in range(self.degree):
            if seen[start] or img[start] == start:
                continue
            cyc = [start]
            seen[start] = True
            j = img[start]
            while j != start:
                cyc.append(j)
                seen[j] = True
                j = img[j]
            out.append(tuple(cyc))
        return out

    def __eq__(self, other) -> bool:
        if not isinstance(other, Permutation):
            return NotImplemented
        return bool(np.array_equal(self.images, other.images))

    def __hash__(self) -> int:
        return hash(self.images.tobytes())

    def __repr__(self) -> str:
        if self.degree > 40:
            return f"Permutation(<degree {self.degree}>)"
        return f"Permutation({format_permutation(self)}, n={self.degree})"


def compose(a: Permutation, b: Permutation) -> Permutation:
    """The product that applies ``a`` first, then ``b``."""
    if a.degree != b.degree:
        raise PermutationError(f"degree mismatch: {a.degree} vs {b.degree}")
    return Permutation._wrap(b.images[a.images])


def power(x: Permutation, e: int) -> Permutation:
    if e < 0:
        return power(x.inverse(), -e)
    result = np.arange(x.degree, dtype=np.int64)
    base = x.images
    while e:
        if e & 1:
            result = base[result]
        e >>= 1
        if e:
            base = base[base]
    return Permutation._wrap(result)


def cycle_lengths(x: Permutation) -> np.ndarray:
    """Length of every cycle of ``x``, fixed points included (unordered)."""
    n = x.degree
    graph = csr_matrix(
        (np.ones(n, dtype=np.int8), (np.arange(n), x.images)), shape=(n, n)
    )
    ncomp, labels = connected_components(graph, directed=True, connection="weak")
    return np.bincount(labels, minlength=ncomp)


def cycle_structure(x: Permutation) -> CycleType:
    lengths, mults = np.unique(cycle_lengths(x), return_counts=True)
    return CycleType(x.degree, zip(lengths.tolist(), mults.tolist()))


def sign(x: Permutation) -> str:
    """``"even"`` or ``"odd"``."""
    ncycles = cycle_lengths(x).size
    return "even" if (x.degree - ncycles) % 2 == 0 else "odd"


class UnionFind:
    """Disjoint sets over ``0..n-1`` with union by size and path halving."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n
        self.count = n

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> bool:
        x, y = self.find(x), self.find(y)
        if x == y:
            return False
        if self.size[x] < self.size[y]:
            x, y = y, x
        self.parent[y] = x
        self.size[x] += self.size[y]
        self.count -= 1
        return True


class GeneratorSet:
    """A non-empty list of permutations sharing one degree."""

    def __init__(self, generators: Sequence[Permutation], degree: int | None = None):
        gens = list(generators)
        if not gens:
            raise PermutationError("generator set must be non-empty")
        n = gens[0].degree if degree is None else degree
        if n < 1:
            raise PermutationError("degree must be positive")
        for g in gens:
            if g.degree != n:
                raise PermutationError(f"generator of degree {g.degree}, expected {n}")
        self.degree = n
        self.generators = tuple(gens)

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)


def is_transitive(g: GeneratorSet) -> bool:
    uf = UnionFind(g.degree)
    for gen in g:
        for i, j in enumerate(gen.images.tolist()):
            if uf.union(i, j) and uf.count == 1:
                return True
    return uf.count == 1


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def _points(body: str, n: int) -> list[int]:
    items = [s for s in re.split(r"[,\s]+", body.strip()) if s]
    pts = []
    for s in items:
        if not s.isdigit():
            raise PermutationError(f"not a point: {s!r}")
        p = int(s)
        if not 1 <= p <= n:
            raise PermutationError(f"point {p} out of range 1..{n}")
        pts.append(p - 1)
    return pts


def parse_permutation(text: str, n: int) -> Permutation:
    """Parse 1-based cycle notation ``(1,2,3)(4,5)`` or an image list ``[2,3,1]``."""
    s = text.strip()
    if s.startswith("["):
        if not s.endswith("]"):
            raise PermutationError(f"unterminated image list: {text!r}")
        pts = _points(s[1:-1], n)
        if len(pts) != n:
            raise PermutationError(f"image list has {len(pts)} entries, expected {n}")
        if len(set(pts)) != n:
            raise PermutationError("repeated point in image list")
        return Permutation._wrap(np.array(pts, dtype=np.int64))
    if not s.startswith("("):
        raise PermutationError(f"malformed permutation: {text!r}")
    if _CYCLE_RE.sub("", s).strip():
        raise PermutationError(f"malformed cycle notation: {text!r}")
    cycles = [_points(body, n) for body in _CYCLE_RE.findall(s)]
    return Permutation.from_cycles(n, [c for c in cycles if c])


def format_permutation(x: Permutation) -> str:
    cycles = x.cycles()
    if not cycles:
        return "()"
    return "".join("(" + ",".join(str(p + 1) for p in c) + ")" for c in cycles)


def read_generator_file(path: str | Path) -> GeneratorSet:
    """Read a ``degree <n>`` header followed by one generator per line."""
    lines = Path(path).read_text().splitlines()
    content = [
        (no, ln.strip())
        for no, ln in enumerate(lines, 1)
        if ln.strip() and not ln.strip().startswith("#")
    ]
    if not content:
        raise PermutationError(f"{path}: empty generator file")
    no, header = content[0]
    m = re.fullmatch(r"degree\s+(\d+)", header)
    if not m:
        raise PermutationError(f"{path}:{no}: expected 'degree <n>', got {header!r}")
    n = int(m.group(1))
    if n < 1:
        raise PermutationError(f"{path}:{no}: degree must be positive")
    gens = []
    for no, ln in content[1:]:
        try:
            gens.append(parse_permutation(ln, n))
        except PermutationError as exc:
            raise PermutationError(f"{path}:{no}: {exc}") from None
    return GeneratorSet(gens, degree=n)


def write_generator_file(path: str | Path, g: GeneratorSet) -> None:
    lines = [f"degree {g.degree}"] + [format_permutation(x) for x in g]
    Path(path).write_text("\n".join(lines) + "\n")
