"""The two constacyclic families C'(q,m,r,l) and C(q,m,r,l), the reference
codes (Dilix, NGRM, PRM), companion-matrix evaluation codes and closed-form
parameter predictors."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from math import comb
from typing import Iterable

import numpy as np

from .algebra import FiniteField, Polynomial, field_for, minimal_poly
from .codes import ConstacyclicCode, GeneratorMatrix, from_generator
from .cosets import DefiningSet, coset_table, defining_set_c, defining_set_cprime, normalize_ell, weight_arrays
from .errors import (
    BadDivisor,
    BadEllDecomposition,
    CountTooLarge,
    EllNotCanonical,
    EllNotDecomposable,
    EllOutOfRange,
    FieldMismatch,
    HOutOfRange,
    OutOfTheoremRange,
    ShapeMismatch,
)
from .weights import WeightDistribution


def _ambient(q: int, m: int, field: FiniteField | None):
    F = field if field is not None else field_for(q, m)
    if F.order != q**m:
        raise FieldMismatch(f"field of order {F.order} is not GF({q}^{m})")
    return F, F.subfield_of_size(q)


def product_of_minimal_polys(F: FiniteField, q: int, leaders: Iterable[int]) -> Polynomial:
    sub = F.subfield_of_size(q)
    g = Polynomial.one(sub)
    for i in leaders:
        g = g * minimal_poly(i, q, F)
    return g


def _code_from_defining_set(F, q, r, ds: DefiningSet, label: str) -> ConstacyclicCode:
    N = F.Q
    n = N // r
    g = product_of_minimal_polys(F, q, ds.leaders(q))
    lam = F.exp(n)
    return from_generator(g, lam, n, root_log=1, defining_set=ds, label=label)


def cprime(q: int, m: int, r: int, ell: int, field: FiniteField | None = None) -> ConstacyclicCode:
    """C'(q,m,r,l): zeros b^i, i = 1 mod r, coset leader of Hamming weight 1..l."""
    F, _ = _ambient(q, m, field)
    ds = defining_set_cprime(q, m, r, ell)
    return _code_from_defining_set(F, q, r, ds, f"C'({q},{m},{r},{ell})")


def cfamily(q: int, m: int, r: int, ell: int, field: FiniteField | None = None) -> ConstacyclicCode:
    """C(q,m,r,l): zeros b^i with wt_q(i) < (q-1)m - l, wt_q(i) = 1 mod r."""
    F, _ = _ambient(q, m, field)
    ds = defining_set_c(q, m, r, ell)
    return _code_from_defining_set(F, q, r, ds, f"C({q},{m},{r},{ell})")


def cfamily_dual_generator(q: int, m: int, r: int, ell: int, field: FiniteField | None = None) -> Polynomial:
    """Product of minimal polys of b^i over leaders with wt_q(i) = r-1 mod r, wt_q(i) <= l."""
    if r <= 1 or (q - 1) % r:
        raise BadDivisor(f"need r > 1 and r | q - 1, got r = {r}")
    if ell % r != r - 1:
        raise EllNotCanonical(f"l = {ell} is not of the form r*l1 + r - 1")
    if not 0 <= ell < (q - 1) * m - 1:
        raise EllOutOfRange(f"l = {ell} outside [0, {(q - 1) * m - 1})")
    F, _ = _ambient(q, m, field)
    _, s = weight_arrays(q, m)
    t = coset_table(q, F.Q)
    leaders = [i for i in t.leaders if s[i] % r == r - 1 and s[i] <= ell]
    return product_of_minimal_polys(F, q, leaders)


def dilix(q: int, m: int, h: int, field: FiniteField | None = None) -> ConstacyclicCode:
    """Punctured Dilix cyclic code: zeros b^a with 1 <= wt(a) <= h."""
    if not 1 <= h <= m - 1:
        raise HOutOfRange(f"h = {h} outside [1, {m - 1}]")
    F, _ = _ambient(q, m, field)
    N = F.Q
    w, _ = weight_arrays(q, m)
    idx = tuple(int(a) for a in range(1, N) if 1 <= w[a] <= h)
    ds = DefiningSet(idx, N, "dilix", (q, m, h))
    g = product_of_minimal_polys(F, q, ds.leaders(q))
    return from_generator(g, 1, N, root_log=1, defining_set=ds, label=f"Omega({q},{m},{h})")


# ---------------------------------------------------------------------------
# companion matrix and evaluation codes


@dataclass
class CompanionSequence:
    """Companion matrix M of the minimal polynomial of b and the points e M^i."""

    sub: object
    matrix: np.ndarray
    points: np.ndarray

    @property
    def q(self) -> int:
        return self.sub.q

    @property
    def m(self) -> int:
        return self.matrix.shape[0]


def companion_sequence(field: FiniteField, q: int, m: int, count: int) -> CompanionSequence:
    if field.order != q**m:
        raise FieldMismatch(f"field of order {field.order} is not GF({q}^{m})")
    if not 0 <= count <= q**m - 1:
        raise CountTooLarge(f"count {count} exceeds q^m - 1 = {q**m - 1}")
    sub = field.subfield_of_size(q)
    mp = minimal_poly(1, q, field).symbols(m + 1)
    neg = sub.neg
    M = np.zeros((m, m), dtype=np.int64)
    for i in range(m - 1):
        M[i, i + 1] = 1
    M[m - 1] = neg[mp[:m]]
    add = sub.add.tolist()
    mul = sub.mul.tolist()
    last = M[m - 1].tolist()
    pts = np.zeros((count, m), dtype=np.int64)
    v = [1] + [0] * (m - 1)
    for i in range(count):
        pts[i] = v
        c = v[-1]
        v = [0] + v[:-1]
        if c:
            v = [add[a][mul[c][b]] for a, b in zip(v, last)]
    return CompanionSequence(sub, M, pts)


@dataclass(frozen=True)
class MonomialSpace:
    """Span of monomials x_1^i_1 ... x_m^i_m given by their exponent tuples."""

    variant: str
    q: int
    m: int
    exponents: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.exponents)


def _capped_exponents(q, m):
    return product(range(q), repeat=m)


def monomials_M(q: int, m: int, r: int, ell: int) -> MonomialSpace:
    ex = tuple(e for e in _capped_exponents(q, m) if sum(e) % r == r - 1 and sum(e) <= ell)
    return MonomialSpace("M", q, m, ex)


def monomials_tilde(q: int, m: int, r: int, ell: int) -> MonomialSpace:
    ex = tuple(e for e in _capped_exponents(q, m) if (sum(e) - ell) % (q - 1) == 0 and sum(e) <= ell)
    return MonomialSpace("tildeM", q, m, ex)


def monomials_ngrm(q: int, m: int, r: int, ell: int) -> MonomialSpace:
    ex = tuple(e for e in _capped_exponents(q, m) if sum(e) % r == 0 and sum(e) <= ell)
    return MonomialSpace("NGRM-P", q, m, ex)


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for a in range(total + 1):
        for rest in _compositions(total - a, parts - 1):
            yield (a,) + rest


def t_reduce(e: tuple[int, ...], q: int) -> tuple[int, ...]:
    """Exponent reduction x^i -> x^i' with i' in [1, q-1], i' = i mod q-1 (i > 0)."""
    return tuple(0 if i == 0 else (i - 1) % (q - 1) + 1 for i in e)


def monomials_homogeneous(q: int, m: int, ell: int) -> MonomialSpace:
    """All degree-l monomials, T-reduced and deduplicated."""
    seen = dict.fromkeys(t_reduce(e, q) for e in _compositions(ell, m))
    return MonomialSpace("homogeneous-A", q, m, tuple(sorted(seen)))


def evaluate_monomials(exponents, points: np.ndarray, sub) -> np.ndarray:
    """Matrix of monomial values: row per monomial, column per point (symbols)."""
    q = sub.q
    E = np.asarray(exponents, dtype=np.int64).reshape(-1, points.shape[1])
    P = np.asarray(points, dtype=np.int64)
    if E.shape[0] == 0:
        return np.zeros((0, P.shape[0]), dtype=np.int64)
    L = np.where(P > 0, P - 1, 0)
    if q == 2:
        logs = np.zeros((E.shape[0], P.shape[0]), dtype=np.int64)
    else:
        logs = (E @ L.T) % (q - 1)
    zero = ((E > 0).astype(np.int64) @ (P == 0).astype(np.int64).T) > 0
    return np.where(zero, 0, logs + 1)


def evaluate_terms(terms, points: np.ndarray, sub) -> np.ndarray:
    """Evaluate sum of coeff * monomial; terms = [(coeff_symbol, exponents), ...]."""
    out = np.zeros(points.shape[0], dtype=np.int64)
    for c, e in terms:
        vals = evaluate_monomials([e], points, sub)[0]
        out = sub.add[out, sub.mul[c, vals]]
    return out


def evaluation_code(space: MonomialSpace, points: CompanionSequence, label: str | None = None) -> GeneratorMatrix:
    if space.q != points.q or space.m != points.m:
        raise ShapeMismatch(f"monomials over ({space.q},{space.m}) vs points over ({points.q},{points.m})")
    rows = evaluate_monomials(space.exponents, points.points, points.sub)
    return GeneratorMatrix(rows, points.sub, label)


def gc_code(q, m, r, ell, field=None) -> GeneratorMatrix:
    F, _ = _ambient(q, m, field)
    pts = companion_sequence(F, q, m, (q**m - 1) // r)
    return evaluation_code(monomials_M(q, m, r, ell), pts, f"GC({q},{m},{r},{ell})")


def tilde_code(q, m, r, ell, field=None) -> GeneratorMatrix:
    F, _ = _ambient(q, m, field)
    pts = companion_sequence(F, q, m, (q**m - 1) // r)
    return evaluation_code(monomials_tilde(q, m, r, ell), pts, f"Ctilde({q},{m},{r},{ell})")


def projective_tilde_code(q, m, r, ell, field=None) -> GeneratorMatrix:
    F, _ = _ambient(q, m, field)
    pts = companion_sequence(F, q, m, (q**m - 1) // (q - 1))
    return evaluation_code(monomials_tilde(q, m, r, ell), pts, f"P(Ctilde({q},{m},{r},{ell}))")


def hat_code(q, m, ell, field=None) -> GeneratorMatrix:
    F, _ = _ambient(q, m, field)
    pts = companion_sequence(F, q, m, (q**m - 1) // (q - 1))
    return evaluation_code(monomials_homogeneous(q, m, ell), pts, f"Chat({q},{m},{ell})")


def concatenation_identity(q, m, r, ell, field=None) -> bool:
    """Every basis word of C~ equals (c | w^l c | ... ) with c its projective part."""
    F, sub = _ambient(q, m, field)
    nbar = (q**m - 1) // (q - 1)
    n = (q**m - 1) // r
    pts = companion_sequence(F, q, m, n)
    rows = evaluate_monomials(monomials_tilde(q, m, r, ell).exponents, pts.points, sub)
    blocks = (q - 1) // r
    for row in rows:
        head = row[:nbar]
        for j in range(blocks):
            scale = 1 + (j * ell) % (q - 1) if q > 2 else 1
            if not np.array_equal(row[j * nbar : (j + 1) * nbar], sub.mul[scale, head]):
                return False
    return True


def ngrm(q: int, m: int, r: int, h: int, ell0: int = 0, field: FiniteField | None = None) -> GeneratorMatrix:
    """NGRM(q,m,r,h): monomials with sum = 0 mod r, sum <= (q-1)h + l0, on n points."""
    ell = ngrm_ell(q, m, r, h, ell0)
    F, _ = _ambient(q, m, field)
    pts = companion_sequence(F, q, m, (q**m - 1) // r)
    return evaluation_code(monomials_ngrm(q, m, r, ell), pts, f"NGRM({q},{m},{r},{h})")


def ngrm_ell(q, m, r, h, ell0=0) -> int:
    ell = (q - 1) * h + ell0
    if not (0 <= ell0 <= q - 2 and ell0 % r == 0 and h >= 0 and ell < (q - 1) * m):
        raise BadEllDecomposition(f"need l = (q-1)h + l0 < (q-1)m with 0 <= l0 <= q-2, r | l0; got h={h}, l0={ell0}")
    return ell


def ngrm_params(q, m, r, h, ell0=0) -> tuple[int, int, int]:
    ell = ngrm_ell(q, m, r, h, ell0)
    n = (q**m - 1) // r
    _, s = weight_arrays(q, m)
    k = sum(1 for j in range(n + 1) if s[j * r] <= ell)
    d = ((q - ell0) * q ** (m - h - 1) - 1) // r
    return n, k, d


# ---------------------------------------------------------------------------
# counting lemmas and dimension formulas


def n_placements(t: int, m: int, s: int) -> int:
    """Ways to place t objects in m cells with at most s per cell."""
    total = 0
    for j in range(m + 1):
        a = t - j * (s + 1)
        if a < 0:
            break
        total += (-1) ** j * comb(m, j) * comb(a + m - 1, a)
    return total


def residue_solution_count(t: int, q: int, r: int) -> Fraction:
    """Number of (x_1..x_t) in [1, q-1]^t with sum = 1 mod r, closed form."""
    return Fraction((q - 1) ** t, r)


def cprime_dimension(q, m, r, ell) -> int:
    return (q**m - sum(comb(m, i) * (q - 1) ** i for i in range(ell + 1))) // r


def cprime_dual_dimension(q, m, r, ell) -> int:
    return sum(comb(m, i) * (q - 1) ** i for i in range(1, ell + 1)) // r


def cfamily_dimension(q, m, r, ell) -> int:
    """Closed-form dimension; non-canonical l is normalized first."""
    canon = normalize_ell(q, m, r, ell)
    if canon is None:
        return 0
    l1 = (canon - (r - 1)) // r
    return sum(n_placements(t * r + r - 1, m, q - 1) for t in range(l1 + 1))


def cfamily_dimension_upper(q, m, r, ell) -> Fraction:
    if ell % r != r - 1:
        raise EllNotCanonical(f"l = {ell} is not of the form r*l1 + r - 1")
    l2 = -(-(ell + 1) // (q - 1))
    s = sum(comb(m, t) * (q - 1) ** t for t in range(0, m - l2 + 1))
    return Fraction(q**m - s, r)


def dilix_dimension(q, m, h) -> int:
    return q**m - sum(comb(m, i) * (q - 1) ** i for i in range(h + 1))


def prm_dimension(q, m, h) -> int:
    return sum(n_placements(t, m, q - 1) for t in range(1, h + 1) if (t - h) % (q - 1) == 0)


def prm_params(q: int, m: int, h: int) -> tuple[int, int, int]:
    if not 1 <= h <= (m - 1) * (q - 1):
        raise HOutOfRange(f"h = {h} outside [1, {(m - 1) * (q - 1)}]")
    u, v = divmod(h - 1, q - 1)
    return (q**m - 1) // (q - 1), prm_dimension(q, m, h), (q - v) * q ** (m - 2 - u)


def _ratio(num_range, den_range, q):
    num = 1
    for i in num_range:
        num *= q**i - 1
    den = 1
    for i in den_range:
        den *= q ** (2 * i) - 1
    return Fraction(num, den)


def prm2_weight_distribution(q: int, m: int) -> WeightDistribution:
    """Closed-form weight distribution of PRM(q, m, 2)."""
    if m < 2:
        raise HOutOfRange("need m >= 2")
    n = (q**m - 1) // (q - 1)
    A = {0: Fraction(1)}
    w0 = q ** (m - 1)
    A[w0] = Fraction(q**m - 1)
    for j in range(1, (m - 1) // 2 + 1):
        A[w0] += q ** (j * j + j) * _ratio(range(m - 2 * j, m + 1), range(1, j + 1), q)
    for j in range(1, m // 2 + 1):
        for tau in (1, -1):
            w = w0 - tau * q ** (m - 1 - j)
            val = Fraction(q ** (j * j) * (q**j + tau), 2) * _ratio(range(m - 2 * j + 1, m + 1), range(1, j + 1), q)
            A[w] = A.get(w, 0) + val
    counts = {}
    for w, a in A.items():
        if a.denominator != 1:
            raise ValueError(f"non-integral count at weight {w}")
        if a:
            counts[w] = int(a)
    return WeightDistribution.from_dict(n, q, counts)


def cprime_dual_table(q: int, m: int) -> WeightDistribution:
    """Closed-form weight distribution of C'(q,m,(q-1)/2,1)^perp, q an odd prime."""
    n = 2 * (q**m - 1) // (q - 1)
    Q = q**m - 1
    if m % 2:
        s = q ** ((m - 1) // 2)
        d = {
            0: 1,
            2 * q ** (m - 1) - s: s * (s + 1) * Q,
            2 * q ** (m - 1): Q * (q**m - 2 * q ** (m - 1) + 1),
            2 * q ** (m - 1) + s: s * (s - 1) * Q,
        }
    else:
        a = q ** ((m - 2) // 2)
        b = q ** (m // 2)
        w = 2 * q ** (m - 1)
        raw = {
            0: Fraction(1),
            w - (q - 1) * a: Fraction((a + 1) * (b - 1) * Q, q * q - 1),
            w - 2 * a: Fraction((b + 1) ** 2 * (q - 1) * Q, 4 * (q + 1)),
            w - a: Fraction(a * (b + 1) * Q),
            w: Fraction((q ** (m + 1) - 3 * q**m + q + 1) * Q, 2 * (q - 1)),
            w + a: Fraction(a * (b - 1) * Q),
            w + 2 * a: Fraction((b - 1) ** 2 * (q - 1) * Q, 4 * (q + 1)),
            w + (q - 1) * a: Fraction((a - 1) * (b + 1) * Q, q * q - 1),
        }
        d = {}
        for wt, c in raw.items():
            if c.denominator != 1:
                raise ValueError(f"non-integral table entry at weight {wt}")
            if c:
                d[wt] = d.get(wt, 0) + int(c)
    return WeightDistribution.from_dict(n, q, d)


# ---------------------------------------------------------------------------
# distance witness


def decompose_ell(q: int, r: int, ell: int) -> tuple[int, int]:
    """l = (q-1) l1 + l0 with 0 <= l0 <= q-2."""
    return divmod(ell, q - 1)


def distance_witness(q: int, m: int, r: int, ell: int, field: FiniteField | None = None):
    """Codeword of C(q,m,r,l) of weight (q-l0+r-2) q^(m-1-l1) / r.

    Evaluates f = prod_{i<=l1}(1 - x_i^(q-1)) * y^(r-1) * prod_i (y^r - w^(ri)),
    y = x_{l1+1}, at the first n companion points.
    """
    l1, l0 = decompose_ell(q, r, ell)
    if l0 % r != r - 1 or not 0 <= ell < (q - 1) * m - 1:
        raise EllNotDecomposable(f"l = {ell} is not (q-1)l1 + l0 with l0 = r-1 mod r")
    F, sub = _ambient(q, m, field)
    n = (q**m - 1) // r
    P = companion_sequence(F, q, m, n).points
    ok = np.ones(n, dtype=bool)
    for i in range(l1):
        ok &= P[:, i] == 0
    y = P[:, l1]
    ok &= y != 0
    ylog = y - 1
    forbidden = set()
    for i in range(1, (l0 - r + 1) // r + 1):
        # y^r = w^(ri)  <=>  r*log(y) = r*i mod q-1
        forbidden.add((r * i) % (q - 1))
    ok &= ~np.isin((r * ylog) % (q - 1), list(forbidden))
    # value: (-1)^0 ... compute exactly with symbol arithmetic
    terms = _witness_terms(q, m, r, l1, l0, sub)
    word = evaluate_terms(terms, P, sub)
    weight = int(np.count_nonzero(word))
    assert np.array_equal(word != 0, ok), "witness support mismatch"
    return word, weight


def _witness_terms(q, m, r, l1, l0, sub):
    """Expand f into (coeff_symbol, exponent tuple) terms."""
    one, neg_one = 1, int(sub.neg[1])
    poly = {tuple([0] * m): one}

    def mul_by(factor):
        out = {}
        for e1, c1 in poly.items():
            for e2, c2 in factor.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                c = int(sub.mul[c1, c2])
                out[e] = int(sub.add[out.get(e, 0), c])
        return {e: c for e, c in out.items() if c}

    def mono(idx, power):
        e = [0] * m
        e[idx] = power
        return tuple(e)

    for i in range(l1):
        poly = mul_by({tuple([0] * m): one, mono(i, q - 1): neg_one})
    poly = mul_by({mono(l1, r - 1): one})
    for i in range(1, (l0 - r + 1) // r + 1):
        w_ri = 1 + (r * i) % (q - 1) if q > 2 else 1
        poly = mul_by({mono(l1, r): one, tuple([0] * m): int(sub.neg[w_ri])})
    return [(c, e) for e, c in sorted(poly.items())]


# ---------------------------------------------------------------------------
# parameter prediction


@dataclass(frozen=True)
class Exact:
    value: int

    @property
    def lo(self):
        return self.value

    @property
    def hi(self):
        return self.value

    def __str__(self):
        return str(self.value)


@dataclass(frozen=True)
class Range:
    lo: int
    hi: int

    def __str__(self):
        return f"[{self.lo},{self.hi}]"


@dataclass
class Prediction:
    family: str
    params: tuple
    n: int
    k: int
    d: Exact | Range | None
    dual_k: int
    dual_d: Exact | Range | None
    sources: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    def to_json(self) -> dict:
        def enc(x):
            if x is None:
                return None
            if isinstance(x, Exact):
                return {"exact": x.value}
            return {"lo": x.lo, "hi": x.hi}

        return {
            "family": self.family,
            "params": list(self.params),
            "n": self.n,
            "k": self.k,
            "d": enc(self.d),
            "dual_k": self.dual_k,
            "dual_d": enc(self.dual_d),
            "sources": {k: v for k, v in self.sources.items()},
            "notes": list(self.notes),
        }


def sphere_packing_max_d(n: int, k: int, q: int) -> int:
    """Largest d allowed by the sphere-packing bound and its even-d refinement."""
    from .analysis import sphere_packing_admissible

    d = n - k + 1  # Singleton
    while d > 1 and not sphere_packing_admissible(n, k, d, q):
        d -= 1
    return d


def _combine(lows: dict, highs: dict, exacts: dict, notes: list):
    lo = max(lows.values()) if lows else 1
    hi = min(highs.values()) if highs else None
    if exacts:
        vals = set(exacts.values())
        if len(vals) > 1:
            notes.append(f"conflicting exact values {exacts}")
        v = min(vals)
        if v < lo or (hi is not None and v > hi):
            notes.append(f"exact value {v} outside [{lo},{hi}]")
        return Exact(v)
    if hi is not None and lo == hi:
        return Exact(lo)
    return Range(lo, hi if hi is not None else lo)


def predict_params(family: str, q: int, m: int, r: int, ell: int) -> Prediction:
    family = family.lower()
    if family in ("cprime", "c'"):
        return _predict_cprime(q, m, r, ell)
    if family in ("c", "cfamily"):
        return _predict_c(q, m, r, ell)
    if family == "dilix":
        h = ell
        if not 1 <= h <= m - 1:
            raise OutOfTheoremRange("dilix-parameters", f"h = {h} outside [1, m-1]")
        n, k = q**m - 1, dilix_dimension(q, m, h)
        lo = (q ** (h + 1) - 1) // (q - 1)
        return Prediction("dilix", (q, m, h), n, k, Range(lo, n - k + 1), n - k, None, {"dilix-lower": lo})
    raise OutOfTheoremRange("family", f"unknown family {family!r}")


def _check_rq(q, r, theorem):
    if r <= 1 or (q - 1) % r:
        raise OutOfTheoremRange(theorem, f"need r > 1 and r | q - 1 (q={q}, r={r})")


def _predict_cprime(q, m, r, ell) -> Prediction:
    _check_rq(q, r, "cprime-dimension")
    if not 1 <= ell <= m - 1:
        raise OutOfTheoremRange("cprime-dimension", f"l = {ell} outside [1, m-1]")
    n = (q**m - 1) // r
    k = cprime_dimension(q, m, r, ell)
    kd = n - k
    lows, highs, exacts, notes = {}, {}, {}, []
    lows["cprime-bch"] = (q ** (ell + 1) - 1 - 2 * (q - 1)) // (r * (q - 1)) + 2
    highs["sphere-packing"] = sphere_packing_max_d(n, k, q)
    dlows, dhighs, dexacts = {}, {}, {}
    if q >= 3:
        dlows["cprime-dual-bch"] = q ** (m - ell)
    dhighs["sphere-packing"] = sphere_packing_max_d(n, kd, q)
    if ell == 1 and r == q - 1:
        exacts["hamming-parameters"] = 3
        dexacts["simplex-parameters"] = q ** (m - 1)
    if ell == 1 and q % 2 == 1 and r == (q - 1) // 2:
        exacts["cprime-half-distance-optimal"] = 4
        from .algebra import is_prime

        if is_prime(q):
            if m % 2 == 1 and m >= 3:
                dexacts["cprime-dual-odd-m-table"] = 2 * q ** (m - 1) - q ** ((m - 1) // 2)
            elif m % 2 == 0:
                dexacts["cprime-dual-even-m-table"] = 2 * q ** (m - 1) - (q - 1) * q ** ((m - 2) // 2)
    if ell == 1 and (q - 1) % 3 == 0 and r == (q - 1) // 3 and r > 1:
        lows["cprime-third"] = 5
        highs["cprime-third"] = 6
    d = _combine(lows, highs, exacts, notes)
    dd = _combine(dlows, dhighs, dexacts, notes)
    src = {**lows, **{f"{k}-upper": v for k, v in highs.items()}, **exacts}
    src.update({f"dual:{k}": v for k, v in {**dlows, **dexacts}.items()})
    return Prediction("cprime", (q, m, r, ell), n, k, d, kd, dd, src, notes)


def _predict_c(q, m, r, ell) -> Prediction:
    _check_rq(q, r, "c-dimension")
    if not 0 <= ell < (q - 1) * m - 1:
        raise OutOfTheoremRange("c-dimension", f"l = {ell} outside [0, (q-1)m - 1)")
    n = (q**m - 1) // r
    canon = normalize_ell(q, m, r, ell)
    notes = []
    if canon is None:
        return Prediction("c", (q, m, r, ell), n, 0, None, n, Exact(1), {"zero-code": True}, notes)
    if canon != ell:
        notes.append(f"l normalized to {canon}")
    ell = canon
    k = cfamily_dimension(q, m, r, ell)
    kd = n - k
    L1, L0 = divmod(ell, q - 1)
    lows, highs, exacts = {}, {}, {}
    lows["c-bch"] = ((q - L0) * q ** (m - L1 - 1) - 2) // r + 1
    highs["c-witness"] = (q - L0 + r - 2) * q ** (m - L1 - 1) // r
    if r > 2 and L1 <= m - 2:
        highs["c-subcode"] = (q - 1) // r * (q - L0 + 1) * q ** (m - 2 - L1)
    highs["sphere-packing"] = sphere_packing_max_d(n, k, q)
    if r == 2:
        exacts["c-r2"] = (q - L0) // 2 * q ** (m - 1 - L1)
    if L1 == m - 1:
        exacts["c-top-layer"] = (q - L0 + r - 2) // r
    if r == q - 1 and L1 <= m - 2:
        exacts["c-projective"] = 3 * q ** (m - 2 - L1)
    if L1 == m - 2 and L0 == r - 1:
        exacts["c-second-layer"] = (q - 1) * (q - r + 2) // r
    if ell == (q - 1) * m - r - 1:
        exacts["c-single-coset"] = 2 if r < q - 1 else 3
    d = _combine(lows, highs, exacts, notes)

    dlows, dhighs, dexacts = {}, {}, {}
    dlows["c-dual-bch"] = (L0 + 1) * q**L1 // r + 1
    dhighs["sphere-packing"] = sphere_packing_max_d(n, kd, q)
    if r == 2:
        dexacts["c-dual-r2"] = (3 + L0) // 2 * q**L1 if L0 < q - 2 else q ** (L1 + 1)
    if r == q - 1 and q > 2:
        dexacts["c-dual-projective"] = q ** (L1 + 1)
    if ell == (q - 1) * m - r - 1:
        dexacts["c-dual-single-coset"] = (q - 1) // r * q ** (m - 1)
    dd = _combine(dlows, dhighs, dexacts, notes)

    if r == 2 and q % 2 == 1 and (q**m) % 4 == 1 and ell == (q - 1) * m // 2 - 1:
        notes.append("self-dual")
    src = {**lows, **{f"{k}-upper": v for k, v in highs.items()}, **exacts}
    src.update({f"dual:{k}": v for k, v in {**dlows, **dexacts}.items()})
    return Prediction("c", (q, m, r, ell), n, k, d, kd, dd, src, notes)


def special_case_dimensions(q: int, m: int, r: int) -> dict[int, int]:
    """Dimensions from the explicit generator-polynomial theorems, keyed by l."""
    n = (q**m - 1) // r
    out = {}
    # l = (q-1)m - r - 1: g is the minimal polynomial of b
    if (q - 1) * m - r - 1 >= 0:
        out[(q - 1) * m - r - 1] = n - m
    # l = (q-1)(m-1) + l0, l0 < q-2, l0 = r-1 mod r
    for l0 in range(r - 1, q - 2, r):
        t_max = (q - 2 - l0) // r - 1
        out[(q - 1) * (m - 1) + l0] = n - sum(comb(m + r * t, r * t + 1) for t in range(t_max + 1))
    # l = (q-1)(m-2) + r - 1
    if m >= 2:
        top = 2 * (q - 1 - r) // r
        kappa = sum(comb(m + r * t, r * t + 1) for t in range(top + 1))
        if 2 <= r <= (q - 1) // 2:
            kappa -= m * sum(comb(t * r - q + m, t * r - q + 1) for t in range((q - 1) // r, top + 1))
        out[(q - 1) * (m - 2) + r - 1] = n - kappa
    if r == q - 1 and q >= 3:
        if m >= 3:
            out[(q - 1) * (m - 3) + q - 2] = n - comb(m + q - 1, q)
        out[q - 2] = comb(m + q - 3, q - 2)
    if r == 2 and q >= 5 and m >= 2:
        for l0 in range(1, q - 1, 2):
            if l0 < q - 2:
                top = (2 * q - 5 - l0) // 2
                kappa = sum(comb(2 * t + m, 2 * t + 1) for t in range(top + 1))
                kappa -= m * sum(comb(2 * t - q + m, 2 * t - q + 1) for t in range((q - 1) // 2, top + 1))
            else:
                kappa = sum(comb(2 * t + m, 2 * t + 1) for t in range((q - 3) // 2 + 1))
            out[(q - 1) * (m - 2) + l0] = n - kappa
    return {ell: k for ell, k in out.items() if 0 <= ell < (q - 1) * m - 1}
