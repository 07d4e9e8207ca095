from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from constacode.algebra import Polynomial, get_field
from constacode.analysis import (
    enumerate_weights,
    is_distance_optimal,
    krawtchouk_column,
    macwilliams,
    min_distance,
    self_dual_check,
    sphere_packing_check,
    table1_table2_check,
    weight_distribution,
)
from constacode.codes import GeneratorMatrix, dual, from_generator, generator_matrix
from constacode.errors import HypothesisViolated, InvalidDistribution, TooLargeToEnumerate
from constacode.families import cfamily, cprime, cprime_dimension
from constacode.weights import WeightDistribution

FIELDS = {3: get_field(3, 4), 4: get_field(2, 4), 5: get_field(5, 2), 7: get_field(7, 2), 2: get_field(2, 4), 8: get_field(2, 3)}


def _random_matrix(q, k, n, seed):
    rng = np.random.default_rng(seed)
    sub = FIELDS[q].subfield_of_size(q)
    return GeneratorMatrix(rng.integers(0, q, size=(k, n)), sub), sub


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([2, 3, 4, 5, 7, 8]), st.integers(1, 6), st.integers(1, 14), st.integers(0, 10**6))
def test_kernel_matches_oracle(q, k, n, seed):
    if q**k > 50000:
        k = 2
    G, sub = _random_matrix(q, k, n, seed)
    B = G.basis()
    got = enumerate_weights(B, sub)
    assert list(got.counts) == oracles.weight_counts(B, sub, n)


@pytest.mark.parametrize("table_bytes", [64, 512, 1 << 22])
def test_kernel_table_split(table_bytes):
    # small tables force the outer-combination path
    for q, k, n in [(3, 6, 20), (4, 5, 17), (5, 4, 9), (2, 10, 70)]:
        G, sub = _random_matrix(q, k, n, 11)
        B = G.basis()
        assert list(enumerate_weights(B, sub, table_bytes=table_bytes).counts) == oracles.weight_counts(B, sub, n)


def test_krawtchouk_recurrence():
    for n, q in [(5, 4), (12, 5), (20, 3), (9, 2)]:
        for x in range(n + 1):
            assert krawtchouk_column(n, q, x) == [oracles.krawtchouk(n, q, j, x) for j in range(n + 1)]


def test_full_space_and_macwilliams():
    n, q = 7, 3
    full = WeightDistribution(n, q, tuple(comb(n, w) * (q - 1) ** w for w in range(n + 1)))
    sub = FIELDS[3].subfield(1)
    C = from_generator(Polynomial.one(sub), FIELDS[3].neg(1), n)
    assert weight_distribution(C) == full
    z = macwilliams(full)
    assert z.counts == (1,) + (0,) * n
    assert macwilliams(z) == full


@settings(max_examples=20, deadline=None)
@given(st.sampled_from([2, 3, 4, 5]), st.integers(1, 5), st.integers(2, 12), st.integers(0, 10**6))
def test_macwilliams_involution(q, k, n, seed):
    G, sub = _random_matrix(q, min(k, n), n, seed)
    W = enumerate_weights(G.basis(), sub)
    T = macwilliams(W)
    assert T.total == q ** (n - G.k)
    assert macwilliams(T) == W


def test_macwilliams_errors():
    with pytest.raises(InvalidDistribution):
        macwilliams(WeightDistribution(3, 2, (1, 1, 0, 0)), k=2)
    with pytest.raises(InvalidDistribution):
        macwilliams(WeightDistribution(3, 3, (1, 1, 0, 0)))
    with pytest.raises(InvalidDistribution):
        macwilliams(WeightDistribution(3, 2, (0, 2, 0, 0)))
    with pytest.raises(InvalidDistribution):
        WeightDistribution(3, 2, (1, 1))


@pytest.mark.parametrize("make", [lambda: cprime(3, 3, 2, 1), lambda: cfamily(4, 2, 3, 2), lambda: cfamily(5, 2, 4, 3), lambda: dual(cprime(5, 2, 2, 1)), lambda: cfamily(3, 3, 2, 3)])
def test_sides_agree(make):
    C = make()
    a = weight_distribution(C, side="code")
    b = weight_distribution(C, side="dual")
    assert a == b
    assert list(a.counts) == oracles.weight_counts(generator_matrix(C).rows, C.sub, C.n)


def test_paper_distributions():
    D = dual(cprime(5, 2, 2, 1))
    W = weight_distribution(D)
    assert W.nonzero() == {0: 1, 6: 8, 8: 144, 9: 144, 10: 168, 11: 96, 12: 64}
    W = weight_distribution(cfamily(4, 3, 3, 2))
    assert W.nonzero() == {0: 1, 12: 630, 16: 3087, 20: 378}
    assert W.enumerator() == "1+630z^12+3087z^16+378z^20"
    assert W.to_json() == {"0": "1", "12": "630", "16": "3087", "20": "378"}


def test_macwilliams_from_dual_cprime_5_3():
    C = cprime(5, 3, 2, 1)
    assert (C.n, C.k) == (62, 56)
    Wd = weight_distribution(dual(C), side="code")
    assert Wd.total == 5**6
    W = macwilliams(Wd, 62, 6, 5)
    assert W.total == 5**56
    assert W.min_distance == 4
    assert W == weight_distribution(C)


def test_too_large():
    C = cfamily(5, 3, 2, 5)
    with pytest.raises(TooLargeToEnumerate) as ei:
        weight_distribution(C, cap=1000)
    assert ei.value.code_size == 5**31 and ei.value.dual_size == 5**31


def test_cap_env(monkeypatch):
    from constacode.analysis import default_cap

    monkeypatch.setenv("CONSTACODE_CAP", "17")
    assert default_cap() == 17
    with pytest.raises(TooLargeToEnumerate):
        weight_distribution(cprime(3, 3, 2, 1))


def test_min_distance_examples():
    sub = FIELDS[3].subfield(1)
    zero = from_generator(Polynomial.x_n_minus(sub, 5, 1), 1, 5)
    r = min_distance(zero)
    assert r.kind == "undefined" and r.value is None and str(r) == "-"
    r = min_distance(cprime(3, 4, 2, 1))
    assert r.is_exact and r.value == 3
    r = min_distance(cfamily(5, 3, 2, 5))
    assert r.is_exact and r.value == 10
    assert "enumeration" not in r.certificates
    assert r.certificates["bch"]["delta"] == 10 and r.certificates["witness"] == 10


@pytest.mark.parametrize("q,m,r", [(3, 3, 2), (4, 2, 3), (5, 2, 2), (5, 2, 4), (7, 2, 3), (7, 2, 6), (4, 3, 3), (3, 4, 2)])
def test_certificates_agree_with_enumeration(q, m, r):
    for ell in range((q - 1) * m - 1):
        C = cfamily(q, m, r, ell)
        if C.k == 0 or min(q**C.k, q ** (C.n - C.k)) > 10**6:
            continue
        cert = min_distance(C, strategy="certificates", samples=0)
        full = min_distance(C, strategy="enumerate")
        assert cert.lo <= full.value <= cert.hi
        if cert.is_exact:
            assert cert.value == full.value


@pytest.mark.parametrize("q,m,r", [(3, 3, 2), (5, 2, 2), (5, 2, 4), (7, 2, 3), (3, 4, 2), (4, 3, 3)])
def test_cprime_dual_distance_lower_bound(q, m, r):
    for ell in range(1, m):
        D = dual(cprime(q, m, r, ell))
        if min(q**D.k, q ** (D.n - D.k)) > 10**6:
            continue
        assert min_distance(D).value >= q ** (m - ell)


def test_sphere_packing_examples():
    s = sphere_packing_check(40, 36, 3, 3)
    assert s.satisfies and s.is_perfect
    assert not sphere_packing_check(12, 8, 5, 5).satisfies
    s4 = sphere_packing_check(12, 8, 4, 5)
    assert s4.satisfies and s4.even_refinement
    assert is_distance_optimal(12, 8, 4, 5)
    for n, q in [(1, 2), (10, 3), (30, 7)]:
        assert sphere_packing_check(n, n, 1, q).satisfies


def test_self_dual():
    assert self_dual_check(cfamily(5, 3, 2, 5))
    assert self_dual_check(cfamily(5, 2, 2, 3))
    sub = FIELDS[3].subfield(1)
    full = from_generator(Polynomial.one(sub), 1, 4)
    assert not self_dual_check(full)
    assert not self_dual_check(cprime(3, 4, 2, 1))
    assert self_dual_check(generator_matrix(cfamily(5, 2, 2, 3)))


# even m: seven table rows, but the top row has count (q^((m-2)/2) - 1)(...) = 0 at m = 2
@pytest.mark.parametrize("q,m,weights", [(5, 2, 6), (5, 3, 3), (7, 2, 6)])
def test_weight_tables(q, m, weights):
    rep = table1_table2_check(q, m)
    assert rep["match"]
    W = rep["enumerated"]
    r = (q - 1) // 2
    assert W.total == q**W.k
    assert W.k == (q**m - 1) // r - cprime_dimension(q, m, r, 1)
    assert len(W.nonzero()) - 1 == weights
    if (q, m) == (5, 3):
        assert W.nonzero() == {0: 1, 45: 3720, 50: 9424, 55: 2480}


def test_table_hypothesis():
    with pytest.raises(HypothesisViolated):
        table1_table2_check(3, 3)
    with pytest.raises(HypothesisViolated):
        table1_table2_check(9, 2)
