"""Cyclotomic cosets, digit weights and the defining sets of both families."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

import numpy as np

from .errors import BadDivisor, EllOutOfRange, NotCoprime, OutOfRange


def cyclotomic_coset(i: int, q: int, M: int) -> tuple[int, ...]:
    """C_i = {i, iq, iq^2, ...} mod M, sorted."""
    if gcd(q, M) != 1:
        raise NotCoprime(f"gcd({q}, {M}) != 1")
    i %= M
    out = [i]
    j = i * q % M
    while j != i:
        out.append(j)
        j = j * q % M
    return tuple(sorted(out))


class CosetTable:
    """Partition of Z_M into q-cyclotomic cosets, ordered by leader."""

    def __init__(self, q: int, M: int):
        if gcd(q, M) != 1:
            raise NotCoprime(f"gcd({q}, {M}) != 1")
        self.q = q
        self.M = M
        leader_of = np.full(M, -1, dtype=np.int64)
        cosets = []
        for i in range(M):
            if leader_of[i] >= 0:
                continue
            c = cyclotomic_coset(i, q, M)
            leader_of[list(c)] = i
            cosets.append(c)
        self.cosets = tuple(cosets)
        self.leaders = tuple(c[0] for c in cosets)
        self.leader_of = leader_of
        self._by_leader = {c[0]: c for c in cosets}

    def coset(self, i: int) -> tuple[int, ...]:
        return self._by_leader[int(self.leader_of[i % self.M])]

    def size(self, i: int) -> int:
        return len(self.coset(i))

    def __len__(self):
        return len(self.cosets)


@lru_cache(maxsize=64)
def coset_table(q: int, M: int) -> CosetTable:
    return CosetTable(q, M)


def multiplicative_order(q: int, M: int) -> int:
    if M == 1:
        return 1
    if gcd(q, M) != 1:
        raise NotCoprime(f"gcd({q}, {M}) != 1")
    k, x = 1, q % M
    while x != 1:
        x = x * q % M
        k += 1
    return k


def order_via_lemma(q: int, n: int, r: int) -> int:
    """ord_{rn}(q) = r / gcd((q^l - 1)/n, r) * l with l = ord_n(q), when r | q - 1."""
    ell = multiplicative_order(q, n)
    return r // gcd((q**ell - 1) // n, r) * ell


def gamma_one(q: int, N: int, r: int) -> tuple[int, ...]:
    """Coset leaders mod N that are congruent to 1 mod r."""
    if r < 1 or (q - 1) % r:
        raise BadDivisor(f"r = {r} does not divide q - 1 = {q - 1}")
    return tuple(i for i in coset_table(q, N).leaders if i % r == 1 % r)


def _check_range(i: int, q: int, m: int):
    if not 0 <= i <= q**m - 1:
        raise OutOfRange(f"{i} is outside [0, {q}^{m} - 1]")


def digits(i: int, q: int, m: int) -> list[int]:
    _check_range(i, q, m)
    out = []
    for _ in range(m):
        i, d = divmod(i, q)
        out.append(d)
    return out


def wt(i: int, q: int, m: int) -> int:
    """Number of nonzero base-q digits."""
    return sum(1 for d in digits(i, q, m) if d)


def wt_q(i: int, q: int, m: int) -> int:
    """Sum of base-q digits."""
    return sum(digits(i, q, m))


@lru_cache(maxsize=32)
def weight_arrays(q: int, m: int) -> tuple[np.ndarray, np.ndarray]:
    """(wt, wt_q) for every i in [0, q^m - 1]."""
    idx = np.arange(q**m, dtype=np.int64)
    w = np.zeros_like(idx)
    s = np.zeros_like(idx)
    for _ in range(m):
        idx, d = np.divmod(idx, q)
        w += d != 0
        s += d
    w.setflags(write=False)
    s.setflags(write=False)
    return w, s


@dataclass(frozen=True)
class DefiningSet:
    """Exponents i (relative to the chosen root) of the generator's zeros."""

    indices: tuple[int, ...]
    N: int
    family: str = "custom"
    params: tuple = ()
    bitset: np.ndarray = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.bitset is None:
            b = np.zeros(self.N, dtype=bool)
            b[list(self.indices)] = True
            object.__setattr__(self, "bitset", b)

    def __contains__(self, i: int) -> bool:
        return bool(self.bitset[i % self.N])

    def __len__(self):
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def leaders(self, q: int) -> tuple[int, ...]:
        t = coset_table(q, self.N)
        return tuple(sorted({int(t.leader_of[i]) for i in self.indices}))


def _check_family(q: int, r: int):
    if r <= 1 or (q - 1) % r:
        raise BadDivisor(f"need r > 1 and r | q - 1, got r = {r}, q = {q}")


def defining_set_cprime(q: int, m: int, r: int, ell: int) -> DefiningSet:
    """Union of cosets C_i, i = 1 mod r, whose leader has 1 <= wt(i) <= ell."""
    _check_family(q, r)
    if not 1 <= ell <= m:
        raise EllOutOfRange(f"ell = {ell} outside [1, {m}]")
    N = q**m - 1
    w, _ = weight_arrays(q, m)
    t = coset_table(q, N)
    idx = np.arange(N)
    lead_w = w[t.leader_of]
    mask = (idx % r == 1) & (lead_w >= 1) & (lead_w <= ell)
    return DefiningSet(tuple(int(i) for i in np.nonzero(mask)[0]), N, "cprime", (q, m, r, ell))


def defining_set_c(q: int, m: int, r: int, ell: int) -> DefiningSet:
    """{i : wt_q(i) < (q-1)m - ell, wt_q(i) = 1 mod r}."""
    _check_family(q, r)
    if not 0 <= ell < (q - 1) * m - 1:
        raise EllOutOfRange(f"ell = {ell} outside [0, {(q - 1) * m - 1})")
    N = q**m - 1
    _, s = weight_arrays(q, m)
    s = s[:N]
    mask = (s < (q - 1) * m - ell) & (s % r == 1)
    return DefiningSet(tuple(int(i) for i in np.nonzero(mask)[0]), N, "c", (q, m, r, ell))


def normalize_ell(q: int, m: int, r: int, ell: int) -> int | None:
    """Canonical r*l2 + r - 1 giving the same family-C code; None for the zero code."""
    l1, l0 = divmod(ell, r)
    if l1 == 0 and l0 <= r - 2:
        return None
    l2 = l1 if l0 == r - 1 else l1 - 1
    return r * l2 + r - 1
