"""Weight distributions (exhaustive enumeration + MacWilliams), minimum
distance with certificates, sphere-packing checks and self-duality."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from math import comb

import numpy as np

from .codes import ConstacyclicCode, GeneratorMatrix, bch_bound, code_equal, dual, generator_matrix
from .errors import HypothesisViolated, InvalidDistribution, TooLargeToEnumerate
from .linalg import nullspace
from .weights import WeightDistribution

DEFAULT_CAP = 1 << 26


def default_cap() -> int:
    env = os.environ.get("CONSTACODE_CAP")
    if env:
        return int(env)
    return DEFAULT_CAP


# ---------------------------------------------------------------------------
# enumeration kernel


def _combination_table(rows: np.ndarray, sub) -> np.ndarray:
    """All q^t combinations of the t rows; the last row is the least significant
    digit, so the first q^f entries only involve the last f rows."""
    q = sub.q
    n = rows.shape[1]
    T = np.zeros((1, n), dtype=np.uint8)
    add, mul = sub.add.astype(np.uint8), sub.mul.astype(np.uint8)
    for row in rows[::-1]:
        parts = [T] + [add[T, mul[a, row][None, :]] for a in range(1, q)]
        T = np.concatenate(parts, axis=0)
    return T


def _to_planes(words: np.ndarray, sub) -> np.ndarray:
    """Characteristic 2: pack each XOR-encoded word into e bit planes of uint64."""
    enc = sub.additive[words]
    e = sub.e
    planes = []
    for b in range(e):
        bits = ((enc >> b) & 1).astype(np.uint8)
        packed = np.packbits(bits, axis=-1, bitorder="little")
        pad = (-packed.shape[-1]) % 8
        if pad:
            packed = np.concatenate([packed, np.zeros(packed.shape[:-1] + (pad,), dtype=np.uint8)], axis=-1)
        planes.append(packed.view(np.uint64))
    return np.stack(planes, axis=-2)  # (..., e, words)


def _weights_bitsliced(T: np.ndarray, v: np.ndarray) -> np.ndarray:
    x = T ^ v
    acc = x[:, 0]
    for b in range(1, x.shape[1]):
        acc = acc | x[:, b]
    return np.bitwise_count(acc).sum(axis=1, dtype=np.int64)


def enumerate_weights(basis: np.ndarray, sub, table_bytes: int = 1 << 22) -> WeightDistribution:
    """Exact weight distribution of the row space of ``basis`` (rows independent).

    Only words whose first nonzero message coordinate is 1 are visited; the
    other nonzero words are scalar multiples with equal weight.
    """
    basis = np.asarray(basis, dtype=np.int64)
    k, n = basis.shape if basis.ndim == 2 else (0, 0)
    q = sub.q
    counts = np.zeros(n + 1, dtype=np.int64)
    if k == 0:
        return WeightDistribution.from_dict(n, q, {0: 1})
    bits = sub.p == 2
    per_word = 8 * sub.e * ((n + 63) // 64) if bits else n
    t1 = 0
    while t1 < k - 1 and q ** (t1 + 1) * per_word <= table_bytes:
        t1 += 1
    tail = basis[k - t1 :] if t1 else basis[:0]
    T = _combination_table(tail, sub)
    if bits:
        TP = _to_planes(T, sub)
    neg = sub.neg.astype(np.uint8)
    for j in range(k):
        f = k - 1 - j
        base = basis[j]
        if f <= t1:
            size = q**f
            V = base[None, :].astype(np.uint8)
            tab, tabp = T[:size], (TP[:size] if bits else None)
        else:
            outer = basis[j + 1 : k - t1]
            V = _combination_table(outer, sub)
            V = sub.add.astype(np.uint8)[V, base.astype(np.uint8)[None, :]]
            tab, tabp = T, (TP if bits else None)
        if bits:
            VP = _to_planes(V, sub)
            for vp in VP:
                w = _weights_bitsliced(tabp, vp)
                counts += np.bincount(w, minlength=n + 1)
        else:
            for v in V:
                eq = tab == neg[v][None, :]
                w = n - np.count_nonzero(eq, axis=1)
                counts += np.bincount(w, minlength=n + 1)
    out = [int(c) * (q - 1) for c in counts]
    out[0] += 1
    return WeightDistribution(n, q, tuple(out))


# ---------------------------------------------------------------------------
# MacWilliams


def krawtchouk_column(n: int, q: int, x: int) -> list[int]:
    """[K_0(x), ..., K_n(x)] via the three-term recurrence (exact)."""
    K = [1]
    if n == 0:
        return K
    K.append((q - 1) * n - q * x)
    for j in range(1, n):
        nxt = (j + (q - 1) * (n - j) - q * x) * K[j] - (q - 1) * (n - j + 1) * K[j - 1]
        K.append(nxt // (j + 1))
    return K


def macwilliams(dist: WeightDistribution, n: int | None = None, k: int | None = None, q: int | None = None) -> WeightDistribution:
    n = dist.n if n is None else n
    q = dist.q if q is None else q
    if n != dist.n or q != dist.q:
        raise InvalidDistribution("n or q disagrees with the distribution")
    if dist.counts[0] != 1:
        raise InvalidDistribution("A_0 must be 1")
    size = dist.total
    if k is not None and size != q**k:
        raise InvalidDistribution(f"counts sum to {size}, not {q}^{k}")
    dist.k  # raises if not a power of q
    B = [0] * (n + 1)
    for x, a in enumerate(dist.counts):
        if a:
            col = krawtchouk_column(n, q, x)
            for j in range(n + 1):
                B[j] += a * col[j]
    out = []
    for b in B:
        v, rem = divmod(b, size)
        if rem or v < 0:
            raise InvalidDistribution("transform is not a valid distribution")
        out.append(v)
    return WeightDistribution(n, q, tuple(out))


# ---------------------------------------------------------------------------
# distributions of codes


def _bases(code):
    """(basis of code, callable giving basis of dual, k, n, sub)."""
    if isinstance(code, ConstacyclicCode):
        G = generator_matrix(code)
        return G.rows, (lambda: generator_matrix(dual(code)).rows), code.k, code.n, code.sub
    if isinstance(code, GeneratorMatrix):
        B = code.basis()
        return B, (lambda: nullspace(B, code.sub) if B.shape[0] else np.eye(code.n, dtype=np.int64)), code.k, code.n, code.sub
    raise TypeError(f"not a code: {code!r}")


def weight_distribution(code, cap: int | None = None, side: str = "auto") -> WeightDistribution:
    """Enumerate the smaller of code and dual (side='auto'), or force a side."""
    cap = default_cap() if cap is None else cap
    B, dual_basis, k, n, sub = _bases(code)
    q = sub.q
    size, dsize = q**k, q ** (n - k)
    if side == "auto":
        side = "code" if size <= dsize else "dual"
    if side == "code":
        if size > cap:
            raise TooLargeToEnumerate(size, dsize, cap)
        return enumerate_weights(B, sub)
    if dsize > cap:
        raise TooLargeToEnumerate(size, dsize, cap)
    W = enumerate_weights(dual_basis(), sub)
    return macwilliams(W, n, n - k, q)


# ---------------------------------------------------------------------------
# sphere packing


@dataclass(frozen=True)
class SpherePacking:
    satisfies: bool
    is_perfect: bool
    even_refinement: bool | None  # None when d is odd

    @property
    def admissible(self) -> bool:
        return self.satisfies and self.even_refinement is not False


def _ball(n, t, q):
    return sum(comb(n, i) * (q - 1) ** i for i in range(t + 1))


def sphere_packing_check(n: int, k: int, d: int, q: int) -> SpherePacking:
    if d < 1:
        raise ValueError("d must be positive")
    vol = _ball(n, (d - 1) // 2, q)
    cap = q ** (n - k)
    even = None
    if d % 2 == 0:
        even = k < n and _ball(n - 1, (d - 2) // 2, q) <= q ** (n - 1 - k)
    return SpherePacking(vol <= cap, vol == cap, even)


def sphere_packing_admissible(n: int, k: int, d: int, q: int) -> bool:
    return sphere_packing_check(n, k, d, q).admissible


def is_distance_optimal(n: int, k: int, d: int, q: int) -> bool:
    """True when [n, k, d+1] is ruled out by Singleton or sphere packing."""
    return d + 1 > n - k + 1 or not sphere_packing_admissible(n, k, d + 1, q)


# ---------------------------------------------------------------------------
# minimum distance


@dataclass
class DistanceResult:
    kind: str  # "exact" | "range" | "undefined"
    lo: int | None
    hi: int | None
    certificates: dict = field(default_factory=dict)
    distribution: WeightDistribution | None = None

    @property
    def value(self) -> int | None:
        return self.lo if self.kind == "exact" else None

    @property
    def is_exact(self) -> bool:
        return self.kind == "exact"

    def __str__(self):
        if self.kind == "undefined":
            return "-"
        if self.kind == "exact":
            return str(self.lo)
        return f"[{self.lo},{self.hi}]"

    def to_json(self) -> dict:
        return {"kind": self.kind, "lo": self.lo, "hi": self.hi, "certificates": self.certificates}


def _witness_upper(code: ConstacyclicCode):
    ds = code.defining_set
    if ds is None or ds.family != "c":
        return None
    from .codes import contains
    from .cosets import normalize_ell
    from .families import distance_witness

    q, m, r, ell = ds.params
    canon = normalize_ell(q, m, r, ell)
    if canon is None:
        return None
    word, w = distance_witness(q, m, r, canon, code.field)
    if not contains(code, word):
        return None
    return w


def _sample_upper(B: np.ndarray, sub, samples: int, seed: int) -> int | None:
    k, n = B.shape
    if k == 0 or samples <= 0:
        return None
    rng = np.random.default_rng(seed)
    best = None
    add, mul = sub.add, sub.mul
    chunk = 4096
    done = 0
    while done < samples:
        b = min(chunk, samples - done)
        M = rng.integers(0, sub.q, size=(b, k))
        W = np.zeros((b, n), dtype=np.int64)
        for i in range(k):
            W = add[W, mul[M[:, i][:, None], B[i][None, :]]]
        w = np.count_nonzero(W, axis=1)
        w = w[w > 0]
        if w.size:
            m = int(w.min())
            best = m if best is None else min(best, m)
        done += b
    return best


def min_distance(code, strategy: str = "auto", cap: int | None = None, samples: int = 100_000, seed: int = 0) -> DistanceResult:
    """Combine BCH / witness / sphere-packing certificates with enumeration.

    strategy: 'auto' (certificates, then enumeration if the gap stays open),
    'enumerate' (always enumerate when feasible), 'certificates' (never enumerate).
    """
    cap = default_cap() if cap is None else cap
    B, dual_basis, k, n, sub = _bases(code)
    q = sub.q
    if k == 0:
        return DistanceResult("undefined", None, None, {"zero_code": True})
    certs: dict = {}
    lo, hi = 1, n - k + 1
    certs["singleton"] = hi
    sp = n - k + 1
    while sp > 1 and not sphere_packing_admissible(n, k, sp, q):
        sp -= 1
    certs["sphere_packing"] = sp
    hi = min(hi, sp)
    if isinstance(code, ConstacyclicCode) and code.defining_set is not None:
        c = bch_bound(code)
        certs["bch"] = {"delta": c.delta, "e": c.e, "h": c.h, "run": c.run}
        lo = max(lo, c.delta)
        w = _witness_upper(code)
        if w is not None:
            certs["witness"] = w
            hi = min(hi, w)
    if lo == hi and strategy != "enumerate":
        return DistanceResult("exact", lo, hi, certs)
    if strategy != "certificates" and min(q**k, q ** (n - k)) <= cap:
        W = weight_distribution(code, cap)
        certs["enumeration"] = True
        d = W.min_distance
        return DistanceResult("exact", d, d, certs, W)
    if samples:
        s = _sample_upper(B, sub, samples, seed)
        if s is not None:
            certs["random_sample_witness"] = s
            hi = min(hi, s)
    kind = "exact" if lo == hi else "range"
    return DistanceResult(kind, lo, hi, certs)


# ---------------------------------------------------------------------------
# duality


def self_dual_check(code) -> bool:
    if isinstance(code, ConstacyclicCode):
        if 2 * code.k != code.n:
            return False
        D = dual(code)
        return D.lam == code.lam and D.generator == code.generator
    if isinstance(code, GeneratorMatrix):
        if 2 * code.k != code.n:
            return False
        return code_equal(code, GeneratorMatrix(nullspace(code.basis(), code.sub), code.sub))
    raise TypeError(f"not a code: {code!r}")


def table1_table2_check(q: int, m: int, field=None) -> dict:
    """Enumerated distribution of C'(q,m,(q-1)/2,1)^perp vs the closed-form table."""
    from .algebra import is_prime
    from .families import cprime, cprime_dual_table

    if q % 2 == 0 or not is_prime(q) or q < 5:
        raise HypothesisViolated(f"need an odd prime q >= 5, got {q}")
    r = (q - 1) // 2
    D = dual(cprime(q, m, r, 1, field))
    enumerated = enumerate_weights(generator_matrix(D).rows, D.sub)
    closed = cprime_dual_table(q, m)
    return {
        "q": q,
        "m": m,
        "table": "odd-m" if m % 2 else "even-m",
        "enumerated": enumerated,
        "closed_form": closed,
        "match": enumerated == closed,
    }
