"""Finite fields GF(p^K) built from a primitive modulus, subfield views and
polynomials over an embedded subfield GF(q).

Elements of GF(p^K) are stored as "vector ints": the coefficient vector of
the polynomial basis 1, b, ..., b^(K-1) packed in base p.  Multiplication goes
through exp/log tables, addition through a Zech-logarithm table.  For the prime
subfield the vector int of c*1 is just c, so prime-field constants can be used
as elements directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DivisionByZeroPoly,
    FieldMismatch,
    FieldTooLarge,
    NotADivisor,
    NotIrreducible,
    NotMonic,
    NotPrime,
    NotPrimitive,
    SpecParseError,
    ZeroConstantTerm,
)

MAX_FIELD_ORDER = 1 << 20

# primitive moduli used for the reference examples, ascending coefficients
REGISTRY = {
    (3, 4): (2, 0, 0, 2, 1),  # x^4 + 2x^3 + 2 (= x^4 - x^3 - 1 over GF(3))
    (5, 2): (2, 4, 1),
    (5, 3): (3, 3, 0, 1),
    (3, 3): (1, 2, 0, 1),
    (7, 2): (3, 6, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (2, 8): (1, 0, 1, 1, 1, 0, 0, 0, 1),
    (2, 10): (1, 1, 1, 1, 0, 1, 1, 0, 0, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Return (p, e) with q = p^e, or raise NotPrime."""
    if q < 2:
        raise NotPrime(f"{q} is not a prime power")
    p = prime_factors(q)
    if len(p) != 1:
        raise NotPrime(f"{q} is not a prime power")
    p = p[0]
    e = 0
    while q > 1:
        q //= p
        e += 1
    return p, e


# ---------------------------------------------------------------------------
# dense polynomial helpers over the prime field (lists of ints, ascending)


def _ptrim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _pmod(a, f, p):
    a = list(a)
    df = len(f) - 1
    inv = pow(f[-1], -1, p)
    for i in range(len(a) - 1, df - 1, -1):
        c = a[i] * inv % p
        if c:
            for j in range(df + 1):
                a[i - df + j] = (a[i - df + j] - c * f[j]) % p
    return _ptrim(a[:df] if len(a) > df else a)


def _pmulmod(a, b, f, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pmod(out, f, p)


def _ppowmod(a, e, f, p):
    result = [1]
    base = _pmod(a, f, p)
    while e:
        if e & 1:
            result = _pmulmod(result, base, f, p)
        base = _pmulmod(base, base, f, p)
        e >>= 1
    return result


def _pgcd(a, b, p):
    a, b = _ptrim(list(a)), _ptrim(list(b))
    while b:
        a, b = b, _pmod(a, b, p)
    return a


def is_irreducible_mod_p(f: Sequence[int], p: int) -> bool:
    """Ben-Or test: gcd(x^(p^i) - x, f) = 1 for i <= deg f / 2."""
    f = [c % p for c in f]
    d = len(f) - 1
    if d <= 0:
        return False
    if d == 1:
        return True
    if f[0] == 0:
        return False
    xp = [0, 1]
    for _ in range(d // 2):
        xp = _ppowmod(xp, p, f, p)
        t = list(xp) + [0] * max(0, 2 - len(xp))
        t[1] = (t[1] - 1) % p
        if len(_pgcd(f, _ptrim(t), p)) > 1:
            return False
    return True


def is_primitive_mod_p(f: Sequence[int], p: int) -> bool:
    f = [c % p for c in f]
    if not is_irreducible_mod_p(f, p):
        return False
    order = p ** (len(f) - 1) - 1
    if len(f) == 2:
        root = [(-f[0] * pow(f[1], -1, p)) % p]
    else:
        root = [0, 1]
    for ell in prime_factors(order):
        if _ppowmod(root, order // ell, f, p) == [1]:
            return False
    return True


def find_primitive_modulus(p: int, K: int) -> tuple[int, ...]:
    """Lexicographically first (c0, ..., c_{K-1}) monic primitive modulus."""
    for tail in product(range(p), repeat=K):
        f = list(tail) + [1]
        if f[0] and is_primitive_mod_p(f, p):
            return tuple(f)
    raise NotPrimitive(f"no primitive polynomial of degree {K} over GF({p})")


# ---------------------------------------------------------------------------


class FiniteField:
    """GF(p^K) with primitive element b (a root of ``modulus``)."""

    def __init__(self, p: int, K: int, modulus: Sequence[int]):
        if not is_prime(p):
            raise NotPrime(f"characteristic {p} is not prime")
        modulus = tuple(int(c) for c in modulus)
        if len(modulus) != K + 1 or K < 1:
            raise NotMonic(f"modulus must have degree {K}: got {len(modulus) - 1}")
        if any(c < 0 or c >= p for c in modulus):
            raise NotMonic("modulus coefficients must be integers in [0, p)")
        if modulus[-1] != 1:
            raise NotMonic("modulus is not monic")
        if p**K > MAX_FIELD_ORDER:
            raise FieldTooLarge(f"GF({p}^{K}) exceeds the cap of 2^20 elements")
        if not is_irreducible_mod_p(modulus, p):
            raise NotIrreducible(f"modulus {modulus} is reducible over GF({p})")

        self.p = p
        self.K = K
        self.modulus = modulus
        self.order = p**K
        self.Q = self.order - 1
        Q = self.Q

        exp = [0] * Q
        log = [-1] * self.order
        if p == 2:
            top = 1 << K
            mod_int = sum(c << j for j, c in enumerate(modulus))
            x = 1
            for i in range(Q):
                if log[x] != -1:
                    raise NotPrimitive(f"modulus {modulus} is not primitive (b has order {i})")
                exp[i] = x
                log[x] = i
                x <<= 1
                if x & top:
                    x ^= mod_int
        else:
            v = [1] + [0] * (K - 1)
            weights = [p**j for j in range(K)]
            for i in range(Q):
                x = sum(c * w for c, w in zip(v, weights))
                if log[x] != -1:
                    raise NotPrimitive(f"modulus {modulus} is not primitive (b has order {i})")
                exp[i] = x
                log[x] = i
                carry = v[-1]
                v = [0] + v[:-1]
                if carry:
                    v = [(a - carry * m) % p for a, m in zip(v, modulus)]
        self._exp = exp
        self._log = log

        # zech[d] = log(1 + b^d), -1 when 1 + b^d = 0
        zech = [-1] * Q
        for d in range(Q):
            x = exp[d]
            d0 = x % p
            y = x - d0 + (d0 + 1) % p
            zech[d] = log[y] if y else -1
        self._zech = zech
        self.exp_table = np.array(exp, dtype=np.int64)
        self.log_table = np.array(log, dtype=np.int64)
        self._minpoly_cache: dict = {}
        self._subfields: dict = {}

    # -- scalar arithmetic on vector ints --------------------------------
    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if not a:
            return b
        if not b:
            return a
        la = self._log[a]
        z = self._zech[(self._log[b] - la) % self.Q]
        if z < 0:
            return 0
        return self._exp[(la + z) % self.Q]

    def neg(self, a: int) -> int:
        if self.p == 2 or not a:
            return a
        return self._exp[(self._log[a] + self.Q // 2) % self.Q]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if not a or not b:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % self.Q]

    def inv(self, a: int) -> int:
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return self._exp[(-self._log[a]) % self.Q]

    def pow(self, a: int, e: int) -> int:
        if not a:
            if e < 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 if e == 0 else 0
        return self._exp[(self._log[a] * e) % self.Q]

    def exp(self, i: int) -> int:
        return self._exp[i % self.Q]

    def log(self, a: int) -> int:
        if not a:
            raise ValueError("log of zero")
        return self._log[a]

    def element(self, value: int) -> "FieldElement":
        return FieldElement(self, value)

    def beta(self) -> "FieldElement":
        return FieldElement(self, self._exp[1 % self.Q])

    def in_subfield(self, a: int, e: int) -> bool:
        if not a:
            return True
        return self._log[a] % (self.Q // (self.p**e - 1)) == 0

    def subfield(self, e: int) -> "Subfield":
        if e < 1 or self.K % e:
            raise NotADivisor(f"{e} does not divide the extension degree {self.K}")
        if e not in self._subfields:
            self._subfields[e] = Subfield(self, e)
        return self._subfields[e]

    def subfield_of_size(self, q: int) -> "Subfield":
        p, e = prime_power(q)
        if p != self.p:
            raise FieldMismatch(f"GF({q}) is not a subfield of GF({self.p}^{self.K})")
        return self.subfield(e)

    def spec_string(self) -> str:
        return f"{self.p}^{self.K}:" + ",".join(str(c) for c in self.modulus)

    def __repr__(self):
        return f"FiniteField({self.spec_string()})"

    def minimal_poly(self, i: int, q: int) -> "Polynomial":
        return minimal_poly(i, q, self)


def build_field(p: int, K: int, modulus: Sequence[int] | None = None) -> FiniteField:
    """Construct GF(p^K); modulus defaults to the registry, then to a search."""
    if modulus is None:
        return get_field(p, K)
    return FiniteField(p, K, modulus)


@lru_cache(maxsize=None)
def _cached_field(p: int, K: int, modulus: tuple) -> FiniteField:
    return FiniteField(p, K, modulus)


@lru_cache(maxsize=None)
def default_modulus(p: int, K: int) -> tuple[int, ...]:
    if (p, K) in REGISTRY:
        return REGISTRY[(p, K)]
    if not is_prime(p):
        raise NotPrime(f"characteristic {p} is not prime")
    if p**K > MAX_FIELD_ORDER:
        raise FieldTooLarge(f"GF({p}^{K}) exceeds the cap of 2^20 elements")
    return find_primitive_modulus(p, K)


def get_field(p: int, K: int, modulus: Sequence[int] | None = None) -> FiniteField:
    """Shared (cached) field instance."""
    if modulus is None:
        modulus = default_modulus(p, K)
    return _cached_field(p, K, tuple(int(c) for c in modulus))


def field_for(q: int, m: int, modulus: Sequence[int] | None = None) -> FiniteField:
    """The ambient field GF(q^m) for codes over GF(q)."""
    p, e = prime_power(q)
    return get_field(p, e * m, modulus)


def parse_field_spec(text: str) -> FiniteField:
    """Parse ``p^K:c0,c1,...,cK`` (ascending modulus coefficients)."""
    try:
        head, coeffs = text.strip().split(":")
        p, K = (int(t) for t in head.split("^"))
        modulus = [int(c) for c in coeffs.split(",")]
    except ValueError as exc:
        raise SpecParseError(f"bad field spec {text!r}; expected p^K:c0,...,cK") from exc
    return get_field(p, K, modulus)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class FieldElement:
    field: FiniteField
    value: int

    def _coerce(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field:
                raise FieldMismatch("elements of different fields")
            return other.value
        if isinstance(other, (int, np.integer)):
            return int(other) % self.field.p
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, self.field.sub(o, self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        return FieldElement(self.field, self.field.mul(self.value, self.field.inv(o)))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field is other.field and self.value == other.value
        if isinstance(other, (int, np.integer)) and 0 <= other < self.field.p:
            return self.value == int(other)
        return NotImplemented

    def __hash__(self):
        return hash((id(self.field), self.value))

    def __bool__(self):
        return self.value != 0

    @property
    def log(self) -> int | None:
        return None if not self.value else self.field._log[self.value]

    def in_subfield(self, e: int) -> bool:
        return self.field.in_subfield(self.value, e)

    def __repr__(self):
        return "0" if not self.value else f"b^{self.log}"

    def subfield_repr(self, sub: "Subfield") -> str:
        if not self.value:
            return "0"
        return f"w^{sub.log_of(self.value)}"


class Subfield:
    """GF(q) inside GF(p^K), q = p^e, with generator w = b^((p^K-1)/(q-1)).

    Code symbols are small ints: 0 is zero and s >= 1 stands for w^(s-1), so
    the symbol 1 is the identity.  ``add``, ``mul``, ``neg``, ``inv`` are
    numpy tables on symbols; ``additive`` maps symbols to an encoding where
    addition is XOR (p = 2) or addition mod p (e = 1).
    """

    def __init__(self, field: FiniteField, e: int):
        self.field = field
        self.e = e
        self.p = field.p
        self.q = field.p**e
        q = self.q
        self.step = field.Q // (q - 1)
        self.elements = [0] + [field._exp[(self.step * j) % field.Q] for j in range(q - 1)]
        self._symbol = {x: s for s, x in enumerate(self.elements)}
        self.omega = self.elements[2] if q > 2 else 1

        els = np.array(self.elements, dtype=np.int64)
        lookup = np.full(field.order, -1, dtype=np.int64)
        lookup[els] = np.arange(q)
        s = np.arange(q)
        self.mul = np.where((s[:, None] > 0) & (s[None, :] > 0), 1 + (s[:, None] + s[None, :] - 2) % (q - 1), 0)
        if field.p == 2:
            sums = els[:, None] ^ els[None, :]
        else:
            sums = np.zeros((q, q), dtype=np.int64)
            rest_a, rest_b = els[:, None].copy(), els[None, :].copy()
            place = 1
            for _ in range(field.K):
                sums = sums + ((rest_a % field.p + rest_b % field.p) % field.p) * place
                rest_a //= field.p
                rest_b //= field.p
                place *= field.p
        self.add = lookup[sums]
        self.neg = np.argmin(self.add, axis=1)  # the column holding symbol 0
        self.inv = np.zeros(q, dtype=np.int64)
        self.inv[1:] = 1 + (-(s[1:] - 1)) % (q - 1)
        self.sub = self.add[:, self.neg]

        # additive coordinates with respect to the basis 1, w, ..., w^(e-1)
        self.additive = np.zeros(q, dtype=np.int64)
        basis = [field.pow(self.omega, j) for j in range(e)]
        for digits in product(range(self.p), repeat=e):
            x = 0
            for d, b in zip(digits, basis):
                for _ in range(d):
                    x = field.add(x, b)
            self.additive[self._symbol[x]] = sum(d * self.p**j for j, d in enumerate(digits))
        self.from_additive = np.argsort(self.additive)

    # conversions between big-field vector ints and symbols
    def to_symbol(self, x: int) -> int:
        try:
            return self._symbol[x]
        except KeyError:
            raise FieldMismatch(f"{x} is not in GF({self.q})") from None

    def from_symbol(self, s: int) -> int:
        return self.elements[s]

    def contains(self, x: int) -> bool:
        return x in self._symbol

    def log_of(self, x: int) -> int:
        """Exponent j with x = w^j."""
        return self.to_symbol(x) - 1

    def symbols_to_field(self, syms) -> list[int]:
        return [self.elements[int(s)] for s in syms]

    def field_to_symbols(self, xs) -> np.ndarray:
        return np.array([self.to_symbol(int(x)) for x in xs], dtype=np.int64)

    def symbol_str(self, s: int) -> str:
        return "0" if s == 0 else f"w^{s - 1}"

    def __repr__(self):
        return f"GF({self.q}) in {self.field!r}"


# ---------------------------------------------------------------------------


class Polynomial:
    """Dense polynomial with coefficients in a subfield GF(q) of the field.

    Coefficients are stored ascending as big-field vector ints; the zero
    polynomial has no coefficients.
    """

    __slots__ = ("sub", "_c")

    def __init__(self, sub: Subfield, coeffs: Iterable[int] = (), check: bool = True):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        if check:
            for x in c:
                if not sub.contains(x):
                    raise FieldMismatch(f"coefficient {x} is not in GF({sub.q})")
        self.sub = sub
        self._c = tuple(c)

    # constructors
    @classmethod
    def from_symbols(cls, sub: Subfield, symbols: Iterable[int]) -> "Polynomial":
        return cls(sub, (sub.elements[int(s)] for s in symbols), check=False)

    @classmethod
    def monomial(cls, sub: Subfield, deg: int, coeff: int = 1) -> "Polynomial":
        return cls(sub, [0] * deg + [coeff])

    @classmethod
    def one(cls, sub: Subfield) -> "Polynomial":
        return cls(sub, [1], check=False)

    @classmethod
    def zero(cls, sub: Subfield) -> "Polynomial":
        return cls(sub, (), check=False)

    @classmethod
    def x_n_minus(cls, sub: Subfield, n: int, lam: int) -> "Polynomial":
        """x^n - lam."""
        c = [0] * (n + 1)
        c[n] = 1
        c[0] = sub.field.sub(c[0], lam)
        return cls(sub, c)

    @property
    def field(self) -> FiniteField:
        return self.sub.field

    @property
    def raw(self) -> tuple:
        return self._c

    @property
    def coeffs(self) -> list[FieldElement]:
        return [FieldElement(self.field, x) for x in self._c]

    def symbols(self, length: int | None = None) -> np.ndarray:
        s = [self.sub.to_symbol(x) for x in self._c]
        if length is not None:
            if len(s) > length:
                raise ValueError("polynomial longer than requested length")
            s += [0] * (length - len(s))
        return np.array(s, dtype=np.int64)

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def is_zero(self) -> bool:
        return not self._c

    @property
    def lead(self) -> int:
        return self._c[-1] if self._c else 0

    def __getitem__(self, i: int) -> int:
        return self._c[i] if 0 <= i < len(self._c) else 0

    def _same(self, other: "Polynomial"):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.sub.field is not self.sub.field:
            raise FieldMismatch("polynomials over different fields")
        return other.sub if other.sub.q > self.sub.q else self.sub

    # arithmetic
    def __add__(self, other):
        sub = self._same(other)
        F = self.field
        a, b = self._c, other._c
        n = max(len(a), len(b))
        c = [F.add(a[i] if i < len(a) else 0, b[i] if i < len(b) else 0) for i in range(n)]
        return Polynomial(sub, c, check=False)

    def __neg__(self):
        F = self.field
        return Polynomial(self.sub, [F.neg(x) for x in self._c], check=False)

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, np.integer)):
            return self.scale(int(other) % self.field.p)
        sub = self._same(other)
        a, b = self._c, other._c
        if not a or not b:
            return Polynomial(sub, (), check=False)
        if other.sub is self.sub and sub.q <= 1024 and min(len(a), len(b)) > 1:
            S = self.sub
            x, y = self.symbols(), other.symbols()
            if x.size > y.size:
                x, y = y, x
            out = np.zeros(x.size + y.size - 1, dtype=np.int64)
            for i, c in enumerate(x):
                if c:
                    out[i : i + y.size] = S.add[out[i : i + y.size], S.mul[c, y]]
            return Polynomial.from_symbols(S, out)
        F = self.field
        Q, exp, log, add = F.Q, F._exp, F._log, F.add
        out = [0] * (len(a) + len(b) - 1)
        lb = [(j, log[y]) for j, y in enumerate(b) if y]
        for i, x in enumerate(a):
            if not x:
                continue
            lx = log[x]
            for j, ly in lb:
                out[i + j] = add(out[i + j], exp[(lx + ly) % Q])
        return Polynomial(sub, out, check=False)

    def scale(self, c: int) -> "Polynomial":
        F = self.field
        return Polynomial(self.sub, [F.mul(c, x) for x in self._c], check=False)

    def shift(self, k: int) -> "Polynomial":
        return Polynomial(self.sub, [0] * k + list(self._c), check=False)

    def __divmod__(self, other):
        sub = self._same(other)
        if other.is_zero():
            raise DivisionByZeroPoly("division by the zero polynomial")
        F = self.field
        r = list(self._c)
        d = other.degree
        if len(r) <= d:
            return Polynomial(sub, (), check=False), Polynomial(sub, r, check=False)
        if other.sub is self.sub and sub.q <= 1024:
            return self._divmod_symbols(other)
        b = other._c
        inv = F.inv(b[-1])
        quo = [0] * (len(r) - d)
        for i in range(len(r) - 1, d - 1, -1):
            c = F.mul(r[i], inv)
            if not c:
                continue
            quo[i - d] = c
            for j in range(d + 1):
                if b[j]:
                    r[i - d + j] = F.sub(r[i - d + j], F.mul(c, b[j]))
        return Polynomial(sub, quo, check=False), Polynomial(sub, r[:d], check=False)

    def _divmod_symbols(self, other):
        # long division on subfield symbols with numpy table lookups
        S = self.sub
        r = self.symbols()
        b = other.symbols()
        d = b.size - 1
        inv = S.inv[b[-1]]
        quo = np.zeros(r.size - d, dtype=np.int64)
        for i in range(r.size - 1, d - 1, -1):
            c = S.mul[r[i], inv]
            if c:
                quo[i - d] = c
                r[i - d : i + 1] = S.sub[r[i - d : i + 1], S.mul[c, b]]
        return Polynomial.from_symbols(S, quo), Polynomial.from_symbols(S, r[:d])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def monic(self) -> "Polynomial":
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.lead))

    def eval(self, x: int) -> int:
        F = self.field
        acc = 0
        for c in reversed(self._c):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def reciprocal(self) -> "Polynomial":
        """x^deg * f(1/x), not normalized."""
        return Polynomial(self.sub, reversed(self._c), check=False)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field is other.field and self._c == other._c

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        if not self._c:
            return "0"
        terms = []
        for i, c in enumerate(self._c):
            if not c:
                continue
            cs = FieldElement(self.field, c).subfield_repr(self.sub) if self.sub.contains(c) else repr(FieldElement(self.field, c))
            mono = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
            if mono and c == 1:
                terms.append(mono)
            elif mono:
                terms.append(f"{cs}*{mono}")
            else:
                terms.append(cs)
        return " + ".join(terms)


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def poly_divmod(a: Polynomial, b: Polynomial):
    return divmod(a, b)


def poly_mul(a: Polynomial, b: Polynomial) -> Polynomial:
    return a * b


def reciprocal_check_poly(h: Polynomial) -> Polynomial:
    """h0^{-1} x^k h(1/x): the reversed polynomial scaled to be monic."""
    if h.is_zero() or h[0] == 0:
        raise ZeroConstantTerm("reciprocal needs a nonzero constant term")
    return h.reciprocal().monic()


def minimal_poly(i: int, q: int, field: FiniteField) -> Polynomial:
    """Minimal polynomial of b^i over GF(q)."""
    sub = field.subfield_of_size(q)
    Q = field.Q
    i %= Q
    # canonical representative: smallest element of the q-cyclotomic coset mod Q
    coset = []
    j = i
    while True:
        coset.append(j)
        j = j * q % Q
        if j == i:
            break
    key = (q, min(coset))
    cached = field._minpoly_cache.get(key)
    if cached is not None:
        return cached
    full = field.subfield(field.K)
    f = Polynomial.one(full)
    for j in coset:
        f = f * Polynomial(full, [field.neg(field._exp[j]), 1], check=False)
    result = Polynomial(sub, f.raw)  # membership check on every coefficient
    field._minpoly_cache[key] = result
    return result
