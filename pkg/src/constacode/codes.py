"""Constacyclic codes: generator/check polynomials, duals, the BCH bound,
encoding and membership, restriction of cyclic codes, trace codewords and
code equality."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from typing import Sequence

import numpy as np

from .algebra import FieldElement, FiniteField, Polynomial, Subfield, poly_gcd, reciprocal_check_poly
from .cosets import DefiningSet, coset_table
from .errors import (
    FieldMismatch,
    LengthMismatch,
    LengthNotDivisible,
    NotADivisor,
    NotADivisorOfXnMinusLambda,
    ShapeMismatch,
    WrongSubfield,
)
from .linalg import in_row_space, matmul, rref


def _as_int(x) -> int:
    return x.value if isinstance(x, FieldElement) else int(x)


def element_order(F: FiniteField, a: int) -> int:
    return F.Q // gcd(F.log(a), F.Q)


def choose_root(F: FiniteField, lam: int, n: int) -> int | None:
    """log of a primitive rn-th root of unity xi with xi^n = lam, or None."""
    r = element_order(F, lam)
    N = r * n
    if F.Q % N:
        return None
    base = F.Q // N
    u = F.log(lam) // (F.Q // r)
    s = u
    while gcd(s, N) != 1:
        s += r
    return base * s % F.Q


class GeneratorMatrix:
    """Rows spanning a linear code over GF(q) (rows need not be independent)."""

    def __init__(self, rows, sub: Subfield, label: str | None = None):
        rows = np.asarray(rows, dtype=np.int64)
        if rows.ndim != 2:
            raise ShapeMismatch("generator matrix must be two-dimensional")
        self.rows = rows
        self.sub = sub
        self.label = label

    @property
    def q(self) -> int:
        return self.sub.q

    @property
    def n(self) -> int:
        return self.rows.shape[1]

    @cached_property
    def _rref(self):
        return rref(self.rows, self.sub)

    def rref(self) -> np.ndarray:
        return self._rref[0]

    @property
    def pivots(self) -> list[int]:
        return self._rref[1]

    @property
    def k(self) -> int:
        return len(self._rref[1])

    def basis(self) -> np.ndarray:
        return self._rref[0]

    def contains(self, word) -> bool:
        word = np.asarray(word, dtype=np.int64)
        if word.shape != (self.n,):
            raise LengthMismatch(f"word length {word.shape} != {self.n}")
        return in_row_space(self._rref[0], self._rref[1], word, self.sub)

    def encode(self, message) -> np.ndarray:
        B = self.basis()
        message = np.asarray(message, dtype=np.int64)
        if message.shape != (B.shape[0],):
            raise LengthMismatch(f"message length {message.shape} != {B.shape[0]}")
        return matmul(message[None, :], B, self.sub)[0]

    def __repr__(self):
        return f"GeneratorMatrix(q={self.q}, n={self.n}, k={self.k})"


@dataclass(frozen=True, eq=False)
class ConstacyclicCode:
    """lam-constacyclic code of length n over GF(q) with g(x) h(x) = x^n - lam.

    ``root_log`` is the discrete log of a primitive rn-th root xi with
    xi^n = lam; ``defining_set`` holds the exponents i with g(xi^i) = 0.
    """

    sub: Subfield
    n: int
    lam: int
    generator: Polynomial
    check: Polynomial
    root_log: int | None = None
    defining_set: DefiningSet | None = None
    label: str | None = None
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def field(self) -> FiniteField:
        return self.sub.field

    @property
    def q(self) -> int:
        return self.sub.q

    @property
    def k(self) -> int:
        return self.n - self.generator.degree

    @property
    def r(self) -> int:
        return element_order(self.field, self.lam)

    @property
    def N(self) -> int:
        return self.r * self.n

    @property
    def lambda_log(self) -> int:
        return self.field.log(self.lam)

    @property
    def zeros(self) -> frozenset:
        if self.defining_set is None:
            return frozenset()
        return frozenset(self.defining_set.indices)

    def is_zero_code(self) -> bool:
        return self.k == 0

    def __repr__(self):
        name = self.label or "ConstacyclicCode"
        return f"{name}[q={self.q}, n={self.n}, k={self.k}, lam=b^{self.lambda_log}]"


def x_n_minus_lambda(sub: Subfield, n: int, lam: int) -> Polynomial:
    return Polynomial.x_n_minus(sub, n, lam)


def compute_defining_set(sub: Subfield, g: Polynomial, n: int, lam: int, root_log: int) -> DefiningSet:
    """Exponents i = 1 mod r (mod rn) with g(xi^i) = 0, found coset by coset."""
    F = sub.field
    r = element_order(F, lam)
    N = r * n
    t = coset_table(sub.q, N)
    idx = []
    for lead, coset in zip(t.leaders, t.cosets):
        if lead % r != 1 % r:
            continue
        if g.eval(F.exp(root_log * lead)) == 0:
            idx.extend(coset)
    return DefiningSet(tuple(sorted(idx)), N)


def from_generator(
    g: Polynomial,
    lam,
    n: int,
    root_log: int | None = None,
    defining_set: DefiningSet | None = None,
    label: str | None = None,
    meta: dict | None = None,
) -> ConstacyclicCode:
    sub = g.sub
    F = sub.field
    lam = _as_int(lam)
    if not lam or not sub.contains(lam):
        raise FieldMismatch(f"lambda must be a nonzero element of GF({sub.q})")
    g = g.monic()
    quo, rem = divmod(x_n_minus_lambda(sub, n, lam), g) if not g.is_zero() else (None, g)
    if g.is_zero() or not rem.is_zero():
        raise NotADivisorOfXnMinusLambda(f"g does not divide x^{n} - lambda")
    if root_log is None:
        root_log = choose_root(F, lam, n)
    if defining_set is None and root_log is not None and gcd(n, sub.q) == 1:
        defining_set = compute_defining_set(sub, g, n, lam, root_log)
    return ConstacyclicCode(sub, n, lam, g, quo, root_log, defining_set, label, dict(meta or {}))


def dual(code: ConstacyclicCode) -> ConstacyclicCode:
    """lam^{-1}-constacyclic dual generated by the reciprocal of h."""
    F = code.field
    lam_inv = F.inv(code.lam)
    ghat = reciprocal_check_poly(code.check)
    root = None if code.root_log is None else (-code.root_log) % F.Q
    ds = None
    if code.defining_set is not None and root is not None:
        r, N = code.r, code.N
        ones = (i for i in range(N) if i % r == 1 % r)
        ds = DefiningSet(tuple(i for i in ones if i not in code.defining_set), N, "dual")
    label = f"dual({code.label})" if code.label else None
    return from_generator(ghat, lam_inv, code.n, root_log=root, defining_set=ds, label=label)


# ---------------------------------------------------------------------------
# BCH bound


@dataclass(frozen=True)
class BCHCertificate:
    """xi^(1 + r e (h + j)) = 0 for j < run, giving d >= delta."""

    delta: int
    e: int
    h: int
    run: int


def _longest_circular_run(b: np.ndarray) -> tuple[int, int]:
    n = b.size
    if b.all():
        return n, 0
    if not b.any():
        return 0, 0
    shift = int(np.argmin(b))  # first False
    rolled = np.roll(b, -shift)
    padded = np.concatenate(([False], rolled, [False])).astype(np.int8)
    d = np.diff(padded)
    starts = np.nonzero(d == 1)[0]
    ends = np.nonzero(d == -1)[0]
    lengths = ends - starts
    j = int(np.argmax(lengths))
    return int(lengths[j]), int((starts[j] + shift) % n)


def bch_bound(code: ConstacyclicCode, e_cap: int | None = None) -> BCHCertificate:
    """Best BCH run over all units e mod n (optionally e <= e_cap)."""
    n = code.n
    if code.defining_set is None:
        raise ValueError("BCH bound needs a known defining set")
    if code.k == 0:
        return BCHCertificate(n, 1, 0, n)
    r, N = code.r, code.N
    x = np.arange(n, dtype=np.int64)
    z = code.defining_set.bitset[(1 + r * x) % N]
    if not z.any():
        return BCHCertificate(1, 1, 0, 0)
    best = BCHCertificate(1, 1, 0, 0)
    limit = n if e_cap is None else min(n, e_cap + 1)
    for e in range(1, max(limit, 2)):
        if gcd(e, n) != 1:
            continue
        seq = z[(e * x) % n]
        run, start = _longest_circular_run(seq)
        if run > best.run:
            best = BCHCertificate(min(run + 1, n), e, start, run)
            if run >= n - 1:
                break
    return best


def bch_lower_bound(code: ConstacyclicCode, e_cap: int | None = None) -> int:
    return bch_bound(code, e_cap).delta


# ---------------------------------------------------------------------------
# encoding and membership


def generator_matrix(code: ConstacyclicCode) -> GeneratorMatrix:
    g = code.generator.symbols()
    k, n = code.k, code.n
    rows = np.zeros((k, n), dtype=np.int64)
    for i in range(k):
        rows[i, i : i + g.size] = g
    return GeneratorMatrix(rows, code.sub, code.label)


def encode(code: ConstacyclicCode, message) -> np.ndarray:
    message = np.asarray(message, dtype=np.int64)
    if message.shape != (code.k,):
        raise LengthMismatch(f"message length {message.shape} != k = {code.k}")
    c = Polynomial.from_symbols(code.sub, message) * code.generator
    return c.symbols(code.n) if not c.is_zero() else np.zeros(code.n, dtype=np.int64)


def word_poly(code: ConstacyclicCode, word) -> Polynomial:
    word = np.asarray(word, dtype=np.int64)
    if word.shape != (code.n,):
        raise LengthMismatch(f"word length {word.shape} != n = {code.n}")
    return Polynomial.from_symbols(code.sub, word)


def contains(code: ConstacyclicCode, word) -> bool:
    return (word_poly(code, word) % code.generator).is_zero()


def constacyclic_shift(code: ConstacyclicCode, word) -> np.ndarray:
    word = np.asarray(word, dtype=np.int64)
    lam_sym = code.sub.to_symbol(code.lam)
    out = np.roll(word, 1)
    out[0] = code.sub.mul[lam_sym, word[-1]]
    return out


def _as_matrix(c) -> GeneratorMatrix:
    if isinstance(c, GeneratorMatrix):
        return c
    if isinstance(c, ConstacyclicCode):
        return generator_matrix(c)
    raise TypeError(f"not a code: {c!r}")


def code_equal(a, b) -> bool:
    """Row-space equality of the two generator matrices."""
    A, B = _as_matrix(a), _as_matrix(b)
    if A.q != B.q or A.n != B.n:
        raise ShapeMismatch(f"codes over GF({A.q})^{A.n} and GF({B.q})^{B.n}")
    if A.sub.field is not B.sub.field:
        # symbols of different ambient fields are only comparable for prime q
        if A.sub.e != 1:
            raise FieldMismatch("codes built over different ambient fields")
    Ra, Rb = A.rref(), B.rref()
    return Ra.shape == Rb.shape and bool(np.array_equal(Ra, Rb))


# ---------------------------------------------------------------------------
# cyclic -> constacyclic restriction


def restrict_cyclic(g_N: Polynomial, r: int, field: FiniteField | None = None, N: int | None = None):
    """(g_1, Ind) where g_i = gcd(g_N, x^n - lam^i) and Ind = {i : g_i != 1}.

    N defaults to |GF(q^m)^*| and lam = b^(N/r); g_N must divide x^N - 1.
    """
    sub = g_N.sub
    F = field or sub.field
    if F is not sub.field:
        raise FieldMismatch("polynomial is not over the given field")
    N = F.Q if N is None else N
    if N % r or F.Q % N:
        raise NotADivisor(f"r = {r} does not divide N = {N}")
    xN1 = Polynomial.x_n_minus(sub, N, 1)
    if g_N.is_zero() or not (xN1 % g_N).is_zero():
        raise NotADivisor("g_N does not divide x^N - 1")
    n = N // r
    lam = F.exp(F.Q // N * n)
    parts = restriction_parts(g_N, r, n, lam)
    ind = frozenset(i for i, gi in enumerate(parts) if gi.degree > 0)
    return parts[1 % r], ind


def restriction_parts(g_N: Polynomial, r: int, n: int, lam: int) -> list[Polynomial]:
    F = g_N.field
    return [poly_gcd(g_N, Polynomial.x_n_minus(g_N.sub, n, F.pow(lam, i))) for i in range(r)]


def cyclic_code(g_N: Polynomial, N: int | None = None, label: str | None = None) -> ConstacyclicCode:
    F = g_N.field
    N = F.Q if N is None else N
    return from_generator(g_N, 1, N, root_log=F.Q // N, label=label)


def restriction_code(g_N: Polynomial, r: int, N: int | None = None) -> ConstacyclicCode:
    """The lam-constacyclic code generated by gcd(g_N, x^n - lam)."""
    F = g_N.field
    N = F.Q if N is None else N
    g1, _ = restrict_cyclic(g_N, r, F, N)
    n = N // r
    lam = F.exp(F.Q // N * n)
    return from_generator(g1, lam, n, root_log=F.Q // N)


def residue_code(cyclic: ConstacyclicCode, r: int) -> ConstacyclicCode:
    """{c(x) mod (x^n - lam)} for c in a cyclic code of length rn."""
    if cyclic.lam != 1:
        raise ValueError("residue_code expects a cyclic code")
    if cyclic.n % r:
        raise LengthNotDivisible(f"length {cyclic.n} is not divisible by r = {r}")
    F, sub = cyclic.field, cyclic.sub
    n = cyclic.n // r
    if cyclic.root_log is None:
        raise ValueError("cyclic code without a root of unity")
    lam = F.exp(cyclic.root_log * n)
    mod = Polynomial.x_n_minus(sub, n, lam)
    G = generator_matrix(cyclic)
    reduced = [Polynomial.from_symbols(sub, row) % mod for row in G.rows]
    g = mod
    for p in reduced:
        g = poly_gcd(g, p)
    root = cyclic.root_log
    return from_generator(g, lam, n, root_log=root if F.exp(root * n) == lam else None)


# ---------------------------------------------------------------------------
# trace representation


def trace(F: FiniteField, x: int, q: int, deg: int) -> int:
    """Tr_{q^deg / q}(x)."""
    acc, y = 0, x
    for _ in range(deg):
        acc = F.add(acc, y)
        y = F.pow(y, q)
    return acc


def check_nonzeros(code: ConstacyclicCode) -> list[tuple[int, int]]:
    """(leader, coset size) for each conjugacy class of zeros of h(x)."""
    if code.defining_set is None:
        raise ValueError("defining set unknown")
    r, N = code.r, code.N
    t = coset_table(code.q, N)
    return [
        (lead, len(c))
        for lead, c in zip(t.leaders, t.cosets)
        if lead % r == 1 % r and lead not in code.defining_set
    ]


def trace_codeword(code: ConstacyclicCode, coeffs: Sequence) -> np.ndarray:
    """c_t = sum_j Tr(a_j xi^(-t i_j)) over the nonzeros of the code."""
    F, q = code.field, code.q
    nz = check_nonzeros(code)
    if len(coeffs) != len(nz):
        raise LengthMismatch(f"expected {len(nz)} coefficients, got {len(coeffs)}")
    a = [_as_int(c) for c in coeffs]
    for (lead, size), x in zip(nz, a):
        if x and F.log(x) % (F.Q // (q**size - 1)):
            raise WrongSubfield(f"coefficient for nonzero {lead} is not in GF({q}^{size})")
    word = []
    for t in range(code.n):
        acc = 0
        for (lead, size), x in zip(nz, a):
            if x:
                y = F.mul(x, F.exp(-t * lead * code.root_log))
                acc = F.add(acc, trace(F, y, q, size))
        word.append(code.sub.to_symbol(acc))
    return np.array(word, dtype=np.int64)


# ---------------------------------------------------------------------------
# serialization


def to_json(code: ConstacyclicCode) -> dict:
    return {
        "q": code.q,
        "n": code.n,
        "r": code.r,
        "k": code.k,
        "lambda_log": code.lambda_log,
        "field_spec": code.field.spec_string(),
        "generator_coeffs": [int(s) for s in code.generator.symbols()],
        "root_log": code.root_log,
        "label": code.label,
    }


def dumps(code: ConstacyclicCode) -> str:
    return json.dumps(to_json(code), sort_keys=True)


def from_json(obj: dict | str) -> ConstacyclicCode:
    """Inverse of ``to_json``; generator_coeffs are symbols (0, or s for w^(s-1))."""
    from .algebra import parse_field_spec

    if isinstance(obj, str):
        obj = json.loads(obj)
    F = parse_field_spec(obj["field_spec"])
    sub = F.subfield_of_size(int(obj["q"]))
    g = Polynomial.from_symbols(sub, obj["generator_coeffs"])
    lam = F.exp(int(obj["lambda_log"]))
    return from_generator(g, lam, int(obj["n"]), root_log=obj.get("root_log"), label=obj.get("label"))
