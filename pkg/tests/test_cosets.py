import random
from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from constacode.cosets import (
    coset_table,
    cyclotomic_coset,
    defining_set_c,
    defining_set_cprime,
    digits,
    gamma_one,
    multiplicative_order,
    normalize_ell,
    order_via_lemma,
    weight_arrays,
    wt,
    wt_q,
)
from constacode.errors import BadDivisor, EllOutOfRange, NotCoprime, OutOfRange

SMALL = [(3, 2, 2), (3, 3, 2), (3, 4, 2), (4, 3, 3), (5, 2, 2), (5, 2, 4), (5, 3, 2), (7, 2, 3), (7, 2, 6), (9, 2, 4)]


def test_coset_examples():
    assert cyclotomic_coset(0, 3, 80) == (0,)
    assert cyclotomic_coset(1, 3, 80) == (1, 3, 9, 27)
    with pytest.raises(NotCoprime):
        cyclotomic_coset(1, 3, 81)


def test_orbit_property():
    rng = random.Random(1)
    for _ in range(100):
        i = rng.randrange(80)
        assert cyclotomic_coset(i, 3, 80) == cyclotomic_coset(i * 3 % 80, 3, 80)


@pytest.mark.parametrize("q,M", [(3, 80), (2, 63), (5, 124), (4, 255), (7, 48), (3, 728), (2, 1023), (9, 6560)])
def test_partition(q, M):
    t = coset_table(q, M)
    seen = sorted(i for c in t.cosets for i in c)
    assert seen == list(range(M))
    o = multiplicative_order(q, M)
    for c in t.cosets:
        assert {i * q % M for i in c} == set(c)
        assert o % len(c) == 0
        assert c[0] == min(c)
    assert list(t.leaders) == sorted(t.leaders)


def test_gamma_one():
    g = gamma_one(3, 80, 2)
    assert 1 in g and 0 not in g
    t = coset_table(3, 80)
    assert sum(t.size(i) for i in g) == 40
    t = coset_table(5, 24)
    assert sum(t.size(i) for i in gamma_one(5, 24, 2)) == 12
    with pytest.raises(BadDivisor):
        gamma_one(3, 80, 3)


def test_weight_examples():
    assert wt(13, 3, 3) == 3 and wt_q(13, 3, 3) == 3
    assert digits(13, 3, 3) == [1, 1, 1]
    for q, m in [(3, 4), (5, 2), (4, 3)]:
        N = q**m - 1
        assert wt_q(N, q, m) == (q - 1) * m
        assert wt(N, q, m) == m
    with pytest.raises(OutOfRange):
        wt(81, 3, 4)
    with pytest.raises(OutOfRange):
        wt_q(-1, 3, 4)


def test_wt_q_complement():
    rng = random.Random(7)
    for q, m in [(3, 4), (5, 3), (7, 2)]:
        N = q**m - 1
        for _ in range(100):
            i = rng.randrange(N + 1)
            assert wt_q(N - i, q, m) == (q - 1) * m - wt_q(i, q, m)


@given(st.sampled_from(SMALL), st.data())
def test_wt_q_congruence(qmr, data):
    q, m, r = qmr
    i = data.draw(st.integers(0, q**m - 1))
    assert wt_q(i, q, m) % r == i % r
    w, s = weight_arrays(q, m)
    assert w[i] == wt(i, q, m) and s[i] == wt_q(i, q, m)


def test_cprime_examples():
    assert len(defining_set_cprime(3, 4, 2, 1)) == 4
    assert len(defining_set_cprime(5, 2, 2, 1)) == 4
    full = defining_set_cprime(3, 4, 2, 4)
    assert set(full) == {i for i in range(80) if i % 2 == 1}
    with pytest.raises(EllOutOfRange):
        defining_set_cprime(3, 4, 2, 0)
    with pytest.raises(BadDivisor):
        defining_set_cprime(3, 4, 3, 1)
    with pytest.raises(BadDivisor):
        defining_set_cprime(3, 4, 1, 1)


@pytest.mark.parametrize("q,m,r", SMALL)
def test_cprime_size_formula(q, m, r):
    for ell in range(1, m):
        expect = sum(comb(m, i) * (q - 1) ** i for i in range(1, ell + 1)) // r
        assert len(defining_set_cprime(q, m, r, ell)) == expect


def test_c_examples():
    assert 13 - len(defining_set_c(3, 3, 2, 3)) == 10
    for q, m, r in SMALL:
        zero = {i for i in range(q**m - 1) if wt_q(i, q, m) % r == 1 % r}
        for ell in range(0, r - 1):
            assert set(defining_set_c(q, m, r, ell)) == zero
    assert set(defining_set_c(3, 4, 2, 4)) == set(defining_set_c(3, 4, 2, 3))
    with pytest.raises(EllOutOfRange):
        defining_set_c(3, 4, 2, 7)


@pytest.mark.parametrize("q,m,r", SMALL)
def test_closure_and_congruence(q, m, r):
    N = q**m - 1
    sets = [defining_set_cprime(q, m, r, l) for l in range(1, m + 1)]
    sets += [defining_set_c(q, m, r, l) for l in range((q - 1) * m - 1)]
    for D in sets:
        for i in D:
            assert i % r == 1
            assert i * q % N in D


@pytest.mark.parametrize("q,m,r", SMALL)
def test_ell_normalization(q, m, r):
    for ell in range(r - 1, (q - 1) * m - 1):
        l1, l0 = divmod(ell, r)
        if l0 == r - 1:
            assert normalize_ell(q, m, r, ell) == ell
            continue
        l2 = l1 - 1
        assert normalize_ell(q, m, r, ell) == r * l2 + r - 1
        assert set(defining_set_c(q, m, r, ell)) == set(defining_set_c(q, m, r, r * l2 + r - 1))
    for ell in range(r - 1):
        assert normalize_ell(q, m, r, ell) is None


def test_order_lemma_grid():
    for q in (3, 4, 5, 7, 9, 11, 13, 16):
        for r in range(2, q):
            if (q - 1) % r:
                continue
            for n in range(1, 60):
                from math import gcd

                if gcd(n, q) != 1:
                    continue
                assert order_via_lemma(q, n, r) == multiplicative_order(q, r * n)


@settings(max_examples=50)
@given(st.integers(0, 10**6))
def test_leaders_are_minimal(i):
    M = 728
    c = cyclotomic_coset(i, 3, M)
    t = coset_table(3, M)
    assert t.leader_of[i % M] == min(c)
