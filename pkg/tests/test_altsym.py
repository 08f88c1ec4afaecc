import math

import pytest

from giantdetect import groups
from giantdetect.altsym import (
    Strategy,
    Verdict,
    altsym_core_on_types,
    altsym_test,
    cameron_cannon_test,
    cc_core_on_types,
    core_on_types,
    cycle_filter_bound,
    large_prime_core_on_types,
    large_prime_test,
)
from giantdetect.cycletype import CycleType, num_cycles
from giantdetect.jordan import jordan_test
from giantdetect.perm import GeneratorSet, Permutation, PermutationError
from giantdetect.primitive import BlockFilter, eliminate
from giantdetect.sampler import RandomSource, random_cycle_type

T = CycleType.from_dict
TESTS = [altsym_test, cameron_cannon_test, large_prime_test]


def test_symmetric_100_detected_with_k5():
    g = groups.symmetric(100)
    proven = sum(altsym_test(g, 5, RandomSource(50, i)).giant_proven for i in range(100))
    assert proven >= 90


@pytest.mark.parametrize("test", TESTS)
def test_cyclic_12_never_proven(test):
    g = groups.cyclic(12)
    for i in range(30):
        v = test(g, 30, RandomSource(51, i))
        assert not v.giant_proven and v.transitive


def test_cyclic_12_exhaustive_over_elements():
    c = groups.cyclic(12).generators[0]
    types = [CycleType.from_lengths([12 // math.gcd(j, 12)] * math.gcd(j, 12)) for j in range(12)]
    assert all(jordan_test(t) is None for t in types)
    f = BlockFilter(12)
    for t in types:
        f = eliminate(f, t)
    assert f.remaining == (2, 3, 4, 6)
    v = altsym_core_on_types(12, types * 3, 36)
    assert not v.giant_proven and v.remaining_r == [2, 3, 4, 6]
    assert c.degree == 12


@pytest.mark.parametrize("test", TESTS)
def test_intransitive_group(test):
    g = GeneratorSet([Permutation.from_cycles(4, [(0, 1)])])
    v = test(g, 10, RandomSource(1))
    assert not v.giant_proven and not v.transitive
    assert v.elements_examined == 0


@pytest.mark.parametrize("test", TESTS)
def test_k_zero(test):
    v = test(groups.symmetric(5), 0, RandomSource(1))
    assert not v.giant_proven and v.elements_examined == 0


def test_errors():
    with pytest.raises(PermutationError):
        altsym_test([], 3, RandomSource(1))
    with pytest.raises(ValueError):
        altsym_core_on_types(10, [T({6: 1, 4: 1})], -1)
    with pytest.raises(ValueError):
        altsym_core_on_types(12, [T({6: 1, 4: 1})], 1)


def test_core_examples():
    # 5 < n - 2 = 4 fails, so the 5-cycle is not a certified Jordan element at n = 6
    v = altsym_core_on_types(6, [T({5: 1, 1: 1})], 1)
    assert not v.giant_proven and v.jordan is None and v.remaining_r == []
    v = altsym_core_on_types(20, [T({17: 1, 3: 1})], 1)
    assert v.giant_proven and str(v.jordan) == "J14 l=17" and v.remaining_r == []
    v = altsym_core_on_types(12, [], 0)
    assert not v.giant_proven and v.remaining_r == [2, 3, 4, 6]


def test_cameron_cannon_misses_subset_sum_elimination():
    t = T({5: 1, 4: 1, 3: 1})
    assert 2 in cc_core_on_types(12, [t], 1).remaining_r
    assert 2 not in altsym_core_on_types(12, [t], 1).remaining_r


def test_cameron_cannon_eliminates_two_with_odd_long_cycle():
    n = 40
    t = T({23: 1, 9: 1, 8: 1})
    assert 2 not in cc_core_on_types(n, [t], 1).remaining_r
    # no odd cycle longer than n/2: r = 2 survives Cameron-Cannon
    t = T({20: 1, 13: 1, 7: 1})
    assert 2 in cc_core_on_types(n, [t], 1).remaining_r


def test_large_prime_core():
    assert large_prime_core_on_types(12, [T({7: 1, 5: 1})], 1).giant_proven
    assert not large_prime_core_on_types(12, [T({7: 1, 5: 1})], 0).giant_proven
    assert not large_prime_core_on_types(13, [T({13: 1})], 5).giant_proven
    for n in (12, 30, 60):
        types = [CycleType.from_lengths([n // math.gcd(j, n)] * math.gcd(j, n)) for j in range(n)]
        assert not large_prime_core_on_types(n, types, n).giant_proven


def test_skip_filter():
    n = 20
    many = T({1: 20})                 # 20 cycles >= 2 ln 20 ~ 5.99
    assert num_cycles(many) >= cycle_filter_bound(n)
    good = T({17: 1, 3: 1})
    v = altsym_core_on_types(n, [many, many, good], 3)
    assert v.giant_proven and v.elements_skipped == 2 and v.elements_examined == 3
    # a skipped type contributes nothing, even one that would certify
    six_cycles = T({13: 1, 3: 1, 1: 4})  # 6 cycles, 6 >= 5.99
    assert jordan_test(six_cycles) is not None
    v = altsym_core_on_types(n, [six_cycles], 1)
    assert v.jordan is None and v.remaining_r == [2, 4, 5, 10] and v.elements_skipped == 1


def test_skip_is_strict_inequality():
    n = 3  # 2 ln 3 ~ 2.197: types with 2 cycles are kept, 3 cycles skipped
    assert altsym_core_on_types(n, [T({2: 1, 1: 1})], 1).elements_skipped == 0
    assert altsym_core_on_types(n, [T({1: 3})], 1).elements_skipped == 1


def test_early_exit_does_not_change_verdict():
    for strategy in Strategy:
        for trial in range(200):
            n = [30, 100, 128][trial % 3]
            types = [random_cycle_type(n, RandomSource(52, trial)) for _ in range(6)]
            a = core_on_types(strategy, n, types, 6)
            b = core_on_types(strategy, n, types, 6, early_exit=False)
            assert a.giant_proven == b.giant_proven
            assert a.elements_examined <= 6 and b.elements_examined == 6


@pytest.mark.parametrize("n", [100, 1000])
def test_dominance_over_baselines(n):
    rng = RandomSource(53, n)
    f = BlockFilter(n)
    for _ in range(10_000):
        t = random_cycle_type(n, rng)
        strong = set(eliminate(f, t).remaining)
        weak = set(eliminate(f, t, subset_sum=False).remaining)
        assert strong <= weak
        if large_prime_core_on_types(n, [t], 1).giant_proven:
            assert jordan_test(t) is not None


def test_verdict_invariants():
    with pytest.raises(AssertionError):
        Verdict(giant_proven=True, degree=5)
    v = altsym_core_on_types(20, [T({17: 1, 3: 1})], 1)
    d = v.to_dict()
    assert d["jordan"] == "J14 l=17" and d["giant_proven"] is True


def test_same_seed_same_verdict():
    g = groups.symmetric(200)
    a = altsym_test(g, 3, RandomSource(54))
    b = altsym_test(g, 3, RandomSource(54))
    assert (a.giant_proven, a.jordan, a.remaining_r, a.elements_examined) == (
        b.giant_proven, b.jordan, b.remaining_r, b.elements_examined)
