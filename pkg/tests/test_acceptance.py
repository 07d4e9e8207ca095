"""Acceptance criteria 1-10, one pass/fail line each.

Criterion 10 enumerates 4^15 codewords; it runs only when
CONSTACODE_EXTENDED=1 is set.
"""

import os
import sys
import time

import numpy as np
import pytest

import conftest
from constacode import analysis as A
from constacode import codes as K
from constacode import families as Fm
from constacode.algebra import Polynomial, field_for, minimal_poly
from constacode.cosets import (
    coset_table,
    defining_set_c,
    multiplicative_order,
    normalize_ell,
)
from constacode.verify import divisors_r, field_grid, find_weight_word


def report(num, desc, fn):
    """Run one criterion; record a single PASS/FAIL line and re-raise failures."""
    t0 = time.perf_counter()
    try:
        detail = fn()
    except Exception as e:
        line = f"criterion {num:>2}: FAIL  {desc}  ({type(e).__name__}: {e})"
        conftest.ACCEPTANCE_LINES.append(line)
        print(line)
        raise
    dt = time.perf_counter() - t0
    line = f"criterion {num:>2}: PASS  {desc}  [{dt:.1f}s]" + (f"  {detail}" if detail else "")
    conftest.ACCEPTANCE_LINES.append(line)
    print(line)


def params(code):
    """(n, k, d, dual_d) with the smaller side enumerated and MacWilliams for the other."""
    W = A.weight_distribution(code)
    Wd = A.macwilliams(W)
    return code.n, code.k, W.min_distance, Wd.min_distance


# ---------------------------------------------------------------------------


def test_criterion_01_cprime_examples():
    expected = {
        (3, 4, 2, 1): ((40, 36, 3), (40, 4, 27)),
        (3, 4, 2, 2): ((40, 24, 8), (40, 16, 12)),
        (3, 4, 2, 3): ((40, 8, 21), (40, 32, 4)),
        (4, 3, 3, 2): ((21, 9, 8), (21, 12, 6)),
        (5, 2, 2, 1): ((12, 8, 4), (12, 4, 6)),
        (5, 3, 2, 1): ((62, 56, 4), (62, 6, 45)),
        (7, 2, 2, 1): ((24, 18, 5), None),
    }

    def fn():
        for args, (exp, exp_dual) in expected.items():
            C = Fm.cprime(*args)
            n, k, d, dd = params(C)
            assert (n, k, d) == exp, f"C'{args}: got {(n, k, d)}"
            if exp_dual:
                assert (n, n - k, dd) == exp_dual, f"dual C'{args}: got {(n, n - k, dd)}"
        assert A.sphere_packing_check(40, 36, 3, 3).is_perfect

    report(1, "family C' examples and duals (exact)", fn)


def test_criterion_02_weight_enumerators():
    expected = [
        (lambda: K.dual(Fm.cprime(5, 2, 2, 1)), "1+8z^6+144z^8+144z^9+168z^10+96z^11+64z^12"),
        (lambda: K.dual(Fm.cprime(5, 3, 2, 1)), "1+3720z^45+9424z^50+2480z^55"),
        (lambda: Fm.cfamily(4, 2, 3, 2), "1+30z^3+15z^4+18z^5"),
        (lambda: Fm.cfamily(4, 3, 3, 2), "1+630z^12+3087z^16+378z^20"),
        (lambda: Fm.cfamily(4, 4, 3, 2), "1+10710z^48+411264z^60+257295z^64+362880z^68+6426z^80"),
    ]

    def fn():
        for make, enum in expected:
            got = A.weight_distribution(make()).enumerator()
            assert got == enum, f"{got} != {enum}"

    report(2, "weight enumerators (exact integers)", fn)


def test_criterion_03_weight_tables():
    def fn():
        for q, m in [(5, 2), (5, 3), (7, 2)]:
            rep = A.table1_table2_check(q, m)
            assert rep["match"], f"({q},{m}): {rep['enumerated'].enumerator()} vs {rep['closed_form'].enumerator()}"

    report(3, "closed-form dual weight tables vs enumeration", fn)


def test_criterion_04_cfamily_examples():
    def fn():
        cases = {
            (3, 3, 2, 3): ((13, 10, 3), None),
            (5, 2, 2, 3): ((12, 6, 5), None),
            (3, 4, 2, 1): ((40, 4, 27), None),
            (4, 3, 3, 5): ((21, 18, 3), (21, 3, 16)),
            (4, 3, 3, 4): ((21, 6, 12), (21, 15, 4)),
            (5, 3, 4, 3): ((31, 10, 15), (31, 21, 5)),
        }
        for args, (exp, exp_dual) in cases.items():
            C = Fm.cfamily(*args)
            n, k, d, dd = params(C)
            assert (n, k, d) == exp, f"C{args}: got {(n, k, d)}"
            if exp_dual:
                assert (n, n - k, dd) == exp_dual, f"dual C{args}: got {(n, n - k, dd)}"
        assert A.self_dual_check(Fm.cfamily(5, 2, 2, 3))

        S = Fm.cfamily(5, 3, 2, 5)
        r = A.min_distance(S, strategy="certificates", samples=0)
        assert (S.n, S.k, r.kind, r.value) == (62, 31, "exact", 10)
        assert "enumeration" not in r.certificates
        assert A.self_dual_check(S) and K.code_equal(S, K.dual(S))

        # the recorded [30,28,3] has the wrong length: (5^3-1)/4 = 31
        T = Fm.cfamily(5, 3, 4, 7)
        n, k, d, dd = params(T)
        assert (n, k, d) == (31, 28, 3)
        assert (n, n - k, dd) == (31, 3, 25)
        return "flagged: C(5,3,4,7) is [31,28,3], not [30,28,3]; dual [31,3,25]"

    report(4, "family C examples, self-duality, certified d=10", fn)


def test_criterion_05_dimension_grid():
    def fn():
        count = 0
        for q, m in field_grid(1024):
            for r in divisors_r(q):
                for ell in range(1, m):
                    assert Fm.cprime(q, m, r, ell).k == Fm.cprime_dimension(q, m, r, ell), (q, m, r, ell)
                    count += 1
                for ell in range((q - 1) * m - 1):
                    assert Fm.cfamily(q, m, r, ell).k == Fm.cfamily_dimension(q, m, r, ell), (q, m, r, ell)
                    count += 1
        assert count > 300
        return f"{count} instances"

    report(5, "dimension formulas vs deg g, q^m <= 1024", fn)


def test_criterion_06_evaluation_codes():
    def fn():
        count = 0
        for q, m in field_grid(243):
            for r in divisors_r(q):
                for ell in range((q - 1) * m - 1):
                    assert K.code_equal(Fm.gc_code(q, m, r, ell), Fm.cfamily(q, m, r, ell)), ("GC", q, m, r, ell)
                    count += 1
                for ell in range(r - 1, (q - 1) * (m - 1), r):
                    assert K.code_equal(Fm.projective_tilde_code(q, m, r, ell), Fm.hat_code(q, m, ell)), ("hat", q, m, r, ell)
                    assert Fm.concatenation_identity(q, m, r, ell), ("concat", q, m, r, ell)
                    count += 1
        return f"{count} instances"

    report(6, "GC = C, hat = P(C~), concatenation identity, q^m <= 243", fn)


def test_criterion_07_restriction_example():
    def fn():
        F = field_for(3, 4)
        sub = F.subfield_of_size(3)
        Mb = minimal_poly(1, 3, F)
        x = Polynomial.monomial(sub, 1)
        choices = [
            (Mb, (80, 76, 2)),
            ((x - Polynomial.one(sub)) * Mb, (80, 75, 3)),
            (Polynomial.x_n_minus(sub, 40, 1) * Mb, (80, 36, 6)),
        ]
        for g, exp in choices:
            cyc = K.cyclic_code(g)
            con = K.restriction_code(g, 2)
            _, ind = K.restrict_cyclic(g, 2)
            assert K.code_equal(K.residue_code(cyc, 2), con)
            d_con = A.weight_distribution(con).min_distance
            assert (con.n, con.k, d_con) == (40, 36, 3)
            if min(cyc.k, cyc.n - cyc.k) <= 5:
                d_cyc = A.weight_distribution(cyc).min_distance
            else:
                # BCH lower bound matched by the explicit word (-c, c), c of weight 3
                lo = K.bch_lower_bound(cyc)
                c = find_weight_word(con, d_con)
                word = np.concatenate([sub.neg[c], c])
                assert K.contains(cyc, word)
                assert lo == np.count_nonzero(word)
                d_cyc = lo
            assert (cyc.n, cyc.k, d_cyc) == exp
            assert d_cyc <= len(ind) * d_con
            r = 2
            if 1 <= len(ind) <= r - 1:
                assert 2 <= d_cyc <= len(ind) + 1

    report(7, "cyclic length-80 to negacyclic length-40 example", fn)


def test_criterion_08_reference_codes():
    def fn():
        got = []
        for h in range(4):
            G = Fm.ngrm(3, 4, 2, h)
            got.append((G.n, G.k, A.weight_distribution(G).min_distance))
        assert got == [(40, 1, 40), (40, 11, 13), (40, 30, 4), (40, 40, 1)], got
        assert [Fm.prm_params(3, 4, h)[2] for h in range(1, 7)] == [27, 18, 9, 6, 3, 2]
        for h in range(1, 4):
            assert Fm.dilix(3, 4, h).k == 2 * Fm.cprime(3, 4, 2, h).k

    report(8, "NGRM sweep, PRM distances, dilix dimension relation", fn)


def test_criterion_09_properties():
    def fn():
        from itertools import product

        small = [(q, m) for q, m in field_grid(256)]
        n_codes = 0
        for q, m in small:
            for r in divisors_r(q):
                for ell in range(r - 1, (q - 1) * m - 1, r):
                    C = Fm.cfamily(q, m, r, ell)
                    D = K.dual(C)
                    assert C.generator * C.check == Polynomial.x_n_minus(C.sub, C.n, C.lam)
                    assert D.generator * D.check == Polynomial.x_n_minus(D.sub, D.n, D.lam)
                    G, H = K.generator_matrix(C).rows, K.generator_matrix(D).rows
                    if G.size and H.size:
                        from constacode.linalg import matmul

                        assert not matmul(G, H.T, C.sub).any()
                    if C.k and min(q**C.k, q ** (C.n - C.k)) <= 1 << 18:
                        W = A.weight_distribution(C)
                        assert A.macwilliams(A.macwilliams(W)) == W
                        assert K.bch_lower_bound(C) <= W.min_distance
                    n_codes += 1
        # counting lemmas vs brute force
        for q in (3, 4, 5, 7, 9):
            for r in divisors_r(q):
                for t in range(1, 5):
                    brute = sum(1 for v in product(range(1, q), repeat=t) if sum(v) % r == 1)
                    assert brute == Fm.residue_solution_count(t, q, r)
        for t, m, s in product(range(7), range(1, 7), range(7)):
            if (s + 1) ** m <= 50000:
                brute = sum(1 for v in product(range(s + 1), repeat=m) if sum(v) == t)
                assert brute == Fm.n_placements(t, m, s)
        # coset partitions and the order lemma
        for q in (2, 3, 4, 5, 7, 9):
            for M in range(1, 400):
                if np.gcd(q, M) != 1:
                    continue
                t = coset_table(q, M)
                assert sorted(i for c in t.cosets for i in c) == list(range(M))
                o = multiplicative_order(q, M)
                assert all(o % len(c) == 0 for c in t.cosets)
        # defining-set normalization
        for q, m in field_grid(1024):
            for r in divisors_r(q):
                for ell in range(r - 1, (q - 1) * m - 1):
                    canon = normalize_ell(q, m, r, ell)
                    if canon != ell:
                        assert defining_set_c(q, m, r, ell).indices == defining_set_c(q, m, r, canon).indices
        return f"{n_codes} family codes"

    report(9, "property suites (g h, orthogonality, MacWilliams, BCH, counting, cosets)", fn)


def test_criterion_10_extended():
    if os.environ.get("CONSTACODE_EXTENDED") != "1":
        conftest.ACCEPTANCE_LINES.append("criterion 10: SKIP  opt-in; set CONSTACODE_EXTENDED=1 (about 30 s)")
        pytest.skip("set CONSTACODE_EXTENDED=1 to run the 4^15 enumeration")

    def fn():
        C = Fm.cfamily(4, 5, 3, 2)
        assert C.k == 15
        W = A.weight_distribution(C, cap=1 << 31)
        assert W.enumerator() == "1+173910z^192+140241024z^240+809480463z^256+123742080z^272+104346z^320", W.enumerator()

    report(10, "C(4,5,3,2) full enumeration of 4^15 codewords", fn)


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
