import pytest

from giantdetect import groups
from giantdetect.cycletype import CycleType
from giantdetect.perm import Permutation


def enumerate_group(gens):
    """All elements of the group generated by ``gens`` as image tuples (breadth first)."""
    gens = [tuple(g.images.tolist()) for g in gens]
    n = len(gens[0])
    identity = tuple(range(n))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = tuple(g[i] for i in x)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


def as_perm(images):
    return Permutation(list(images))


def type_of(images):
    """Cycle type of an image tuple, computed directly (no numpy)."""
    n = len(images)
    seen = [False] * n
    lengths = []
    for i in range(n):
        if not seen[i]:
            length, j = 0, i
            while not seen[j]:
                seen[j] = True
                j = images[j]
                length += 1
            lengths.append(length)
    return CycleType.from_lengths(lengths, n)


# (name, generator set, true block counts r of some block system, primitive?)
CORPUS = [
    ("C6", groups.cyclic(6), [2, 3], False),
    ("C12", groups.cyclic(12), [2, 3, 4, 6], False),
    ("C30", groups.cyclic(30), [2, 3, 5, 6, 10, 15], False),
    ("D10", groups.dihedral(10), [2, 5], False),
    ("D12", groups.dihedral(12), [2, 3, 4, 6], False),
    ("D7", groups.dihedral(7), [], True),
    ("S2wrS4", groups.wreath(2, 4), [4], False),
    ("S4wrS2", groups.wreath(4, 2), [2], False),
    ("S3wrS4", groups.wreath(3, 4), [4], False),
    ("M11", groups.mathieu11(), [], True),
    ("M12", groups.mathieu12(), [], True),
    ("PGL(2,11)", groups.pgl2(11), [], True),
]


@pytest.fixture(params=CORPUS, ids=[c[0] for c in CORPUS])
def corpus_group(request):
    return request.param
