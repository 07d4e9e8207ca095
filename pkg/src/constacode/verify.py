"""Verification suites: worked examples, theorem grids and the long opt-in
enumeration.  Each check yields one record in a RunReport."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from itertools import product
from math import comb

import numpy as np

from . import analysis as A
from . import codes as K
from . import families as Fm
from .algebra import Polynomial, field_for, minimal_poly, prime_power
from .cosets import coset_table, normalize_ell
from .errors import ConstacodeError
from .linalg import matmul

PASS, FAIL, FLAGGED = "pass", "fail", "flagged"


@dataclass
class CheckRecord:
    id: str
    anchor: str
    expected: object
    computed: object
    status: str
    seconds: float = 0.0

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "anchor": self.anchor,
            "expected": _jsonable(self.expected),
            "computed": _jsonable(self.computed),
            "status": self.status,
            "seconds": round(self.seconds, 3),
        }


def _jsonable(x):
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return str(x)


@dataclass
class RunReport:
    suite: str
    records: list = field(default_factory=list)

    def add(self, rec: CheckRecord):
        if any(r.id == rec.id for r in self.records):
            raise ValueError(f"duplicate check id {rec.id}")
        self.records.append(rec)

    def summary(self) -> dict:
        out = {PASS: 0, FAIL: 0, FLAGGED: 0}
        for r in self.records:
            out[r.status] += 1
        out["total"] = len(self.records)
        return out

    @property
    def failed(self) -> bool:
        return any(r.status == FAIL for r in self.records)

    def to_json(self) -> dict:
        return {"suite": self.suite, "summary": self.summary(), "records": [r.to_json() for r in self.records]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True)

    def render(self) -> str:
        rows = [("id", "status", "expected", "computed", "s")]
        for r in self.records:
            rows.append((r.id, r.status, _short(r.expected), _short(r.computed), f"{r.seconds:.2f}"))
        widths = [max(len(row[i]) for row in rows) for i in range(5)]
        lines = ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in rows]
        lines.insert(1, "  ".join("-" * w for w in widths))
        s = self.summary()
        lines.append(f"\n{s['total']} checks: {s[PASS]} passed, {s[FAIL]} failed, {s[FLAGGED]} flagged")
        return "\n".join(lines)


def _short(x, width=60) -> str:
    s = str(x)
    return s if len(s) <= width else s[: width - 3] + "..."


# ---------------------------------------------------------------------------
# helpers


def params_str(n, k, d) -> str:
    return f"[{n},{k},{'-' if d is None else d}]"


def code_and_dual_params(code):
    """Exact [n,k,d] of code and dual from one enumeration + MacWilliams."""
    W = A.weight_distribution(code)
    Wd = A.macwilliams(W)
    n, k = code.n, code.k
    return params_str(n, k, W.min_distance), params_str(n, n - k, Wd.min_distance), W, Wd


class Suite:
    def __init__(self, name: str, seed: int = 0):
        self.report = RunReport(name)
        self.seed = seed

    def check(self, cid: str, anchor: str, fn):
        t = time.perf_counter()
        try:
            out = fn()
        except ConstacodeError as e:  # a construction error is a failed check
            out = ("no error", f"{type(e).__name__}: {e}", FAIL)
        if len(out) == 2:
            exp, got = out
            status = PASS if exp == got else FAIL
        else:
            exp, got, status = out
        self.report.add(CheckRecord(cid, anchor, exp, got, status, time.perf_counter() - t))


# ---------------------------------------------------------------------------
# worked examples

CPRIME_EXAMPLES = [
    ((3, 4, 2, 1), "[40,36,3]", "[40,4,27]"),
    ((3, 4, 2, 2), "[40,24,8]", "[40,16,12]"),
    ((3, 4, 2, 3), "[40,8,21]", "[40,32,4]"),
    ((4, 3, 3, 2), "[21,9,8]", "[21,12,6]"),
    ((5, 2, 2, 1), "[12,8,4]", "[12,4,6]"),
    ((5, 3, 2, 1), "[62,56,4]", "[62,6,45]"),
    ((7, 2, 2, 1), "[24,18,5]", "[24,6,14]"),
]

ENUMERATORS = [
    ("cprime-dual", (5, 2, 2, 1), "1+8z^6+144z^8+144z^9+168z^10+96z^11+64z^12"),
    ("cprime-dual", (5, 3, 2, 1), "1+3720z^45+9424z^50+2480z^55"),
    ("c", (4, 2, 3, 2), "1+30z^3+15z^4+18z^5"),
    ("c", (4, 3, 3, 2), "1+630z^12+3087z^16+378z^20"),
    ("c", (4, 4, 3, 2), "1+10710z^48+411264z^60+257295z^64+362880z^68+6426z^80"),
]

C_EXAMPLES = [
    ((3, 3, 2, 3), "[13,10,3]", None, False),
    ((5, 2, 2, 3), "[12,6,5]", None, True),
    ((3, 4, 2, 1), "[40,4,27]", None, False),
    ((4, 3, 3, 5), "[21,18,3]", "[21,3,16]", False),
    ((4, 3, 3, 4), "[21,6,12]", "[21,15,4]", False),
    ((5, 3, 4, 3), "[31,10,15]", "[31,21,5]", False),
]

EXTENDED_ENUMERATOR = "1+173910z^192+140241024z^240+809480463z^256+123742080z^272+104346z^320"


def example_checks(s: Suite):
    for a, exp, dexp in CPRIME_EXAMPLES:
        tag = "-".join(map(str, a))

        def fn(a=a, exp=exp, dexp=dexp):
            got, dgot, _, _ = code_and_dual_params(Fm.cprime(*a))
            return f"{exp} dual {dexp}", f"{got} dual {dgot}"

        s.check(f"cprime-{tag}", "family C' worked example", fn)

    def perfect():
        sp = A.sphere_packing_check(40, 36, 3, 3)
        return "perfect", "perfect" if sp.is_perfect else "not perfect"

    s.check("cprime-3-4-2-1-perfect", "family C' worked example, perfect code", perfect)

    def dist_opt():
        return (False, True), (A.sphere_packing_check(12, 8, 5, 5).satisfies, A.is_distance_optimal(12, 8, 4, 5))

    s.check("cprime-5-2-2-1-optimal", "distance-optimality via both sphere-packing lemmas", dist_opt)

    for fam, a, exp in ENUMERATORS:
        tag = "-".join(map(str, a))

        def fn(fam=fam, a=a, exp=exp):
            code = K.dual(Fm.cprime(*a)) if fam == "cprime-dual" else Fm.cfamily(*a)
            return exp, A.weight_distribution(code).enumerator()

        s.check(f"enumerator-{fam}-{tag}", "reference weight enumerator", fn)

    for q, m in [(5, 2), (5, 3), (7, 2)]:

        def fn(q=q, m=m):
            rep = A.table1_table2_check(q, m)
            return rep["closed_form"].enumerator(), rep["enumerated"].enumerator()

        s.check(f"table-dual-{q}-{m}", "closed-form dual weight tables", fn)

    for a, exp, dexp, sd in C_EXAMPLES:
        tag = "-".join(map(str, a))

        def fn(a=a, exp=exp, dexp=dexp, sd=sd):
            C = Fm.cfamily(*a)
            got, dgot, _, _ = code_and_dual_params(C)
            e, g = [exp], [got]
            if dexp:
                e.append(f"dual {dexp}")
                g.append(f"dual {dgot}")
            if sd:
                e.append("self-dual")
                g.append("self-dual" if A.self_dual_check(C) else "not self-dual")
            return " ".join(e), " ".join(g)

        s.check(f"c-{tag}", "family C worked example", fn)

    def c5325():
        C = Fm.cfamily(5, 3, 2, 5)
        r = A.min_distance(C, strategy="certificates", samples=0)
        sd = A.self_dual_check(C)
        return "[62,31,10] self-dual certified", f"{params_str(C.n, C.k, r)} {'self-dual' if sd else 'not self-dual'} {'certified' if r.is_exact else 'open'}"

    s.check("c-5-3-2-5", "family C self-dual example, certificates only", c5325)

    def c5347():
        C = Fm.cfamily(5, 3, 4, 7)
        got, dgot, _, _ = code_and_dual_params(C)
        exp = "[30,28,3] dual [31,3,25]"
        comp = f"{got} dual {dgot}"
        if dgot == "[31,3,25]" and got == "[31,28,3]":
            return exp, comp + " (recorded length 30 disagrees with dual length 31)", FLAGGED
        return exp, comp, FAIL

    s.check("c-5-3-4-7", "family C example with inconsistent recorded length", c5347)

    section3_checks(s)
    reference_code_checks(s)


def section3_checks(s: Suite):
    """Cyclic codes of length 80 over GF(3) restricted to negacyclic length 40."""
    F = field_for(3, 4)
    sub = F.subfield_of_size(3)
    Mb = minimal_poly(1, 3, F)
    x = Polynomial.monomial(sub, 1)
    one = Polynomial.one(sub)
    choices = [
        ("g=M", Mb, "[80,76,2]"),
        ("g=(x-1)M", (x - one) * Mb, "[80,75,3]"),
        ("g=(x^40-1)M", Polynomial.x_n_minus(sub, 40, 1) * Mb, "[80,36,6]"),
    ]
    for name, g, exp in choices:

        def fn(g=g, exp=exp, name=name):
            cyc = K.cyclic_code(g)
            con = K.restriction_code(g, 2)
            _, ind = K.restrict_cyclic(g, 2)
            res = K.residue_code(cyc, 2)
            same = K.code_equal(res, con)
            d_con = A.weight_distribution(con).min_distance
            if min(3**cyc.k, 3 ** (cyc.n - cyc.k)) <= 3**5:
                d_cyc = A.weight_distribution(cyc).min_distance
            else:
                # BCH lower bound plus an explicit word c(x)(x^40 - 1)
                lo = K.bch_lower_bound(cyc)
                c = find_weight_word(con, d_con)
                word = np.concatenate([sub.neg[c], c])
                assert K.contains(cyc, word)
                hi = int(np.count_nonzero(word))
                d_cyc = lo if lo == hi else f"[{lo},{hi}]"
            # d(C) <= |Ind| d(C_1); 2 <= d(C) <= |Ind| + 1 when |Ind| <= r - 1
            ok = d_cyc <= len(ind) * d_con
            if 1 <= len(ind) <= 2 - 1:
                ok = ok and 2 <= d_cyc <= len(ind) + 1
            got = f"{params_str(cyc.n, cyc.k, d_cyc)} -> {params_str(con.n, con.k, d_con)}"
            got += f" residue={'equal' if same else 'different'} bounds={'ok' if ok else 'violated'}"
            return f"{exp} -> [40,36,3] residue=equal bounds=ok", got

        s.check(f"restriction-3-4-2-{name}", "cyclic-to-constacyclic worked example", fn)


def find_weight_word(code, w: int):
    """A codeword of weight exactly w, found by support search (small w only)."""
    from itertools import combinations

    from .linalg import nullspace

    H = K.generator_matrix(K.dual(code)).rows
    n = code.n
    for S in combinations(range(n), w):
        N = nullspace(H[:, list(S)], code.sub)
        for v in N:
            if np.all(v != 0):
                word = np.zeros(n, dtype=np.int64)
                word[list(S)] = v
                return word
    return None


def reference_code_checks(s: Suite):
    def sweep():
        out = []
        for h in range(4):
            G = Fm.ngrm(3, 4, 2, h)
            d = A.weight_distribution(G).min_distance
            n, k, dform = Fm.ngrm_params(3, 4, 2, h)
            if (n, k, dform) != (G.n, G.k, d):
                out.append(f"formula {params_str(n, k, dform)} vs")
            out.append(params_str(G.n, G.k, d))
        return "[40,1,40] [40,11,13] [40,30,4] [40,40,1]", " ".join(out)

    s.check("ngrm-3-4-2-sweep", "nonprimitive generalized Reed-Muller example", sweep)

    def prm():
        return [27, 18, 9, 6, 3, 2], [Fm.prm_params(3, 4, h)[2] for h in range(1, 7)]

    s.check("prm-3-4-distances", "projective Reed-Muller distance list", prm)

    def prm_built():
        bad = []
        for h in range(1, 7):
            G = Fm.hat_code(3, 4, h)
            n, k, d = Fm.prm_params(3, 4, h)
            if G.k != k:
                bad.append(f"h={h}: k {G.k} != {k}")
                continue
            if min(3**k, 3 ** (n - k)) <= 3**12:
                dd = A.weight_distribution(G).min_distance
                if dd != d:
                    bad.append(f"h={h}: d {dd} != {d}")
        return "all agree", "all agree" if not bad else "; ".join(bad)

    s.check("prm-3-4-constructed", "projective Reed-Muller dimension and distance", prm_built)

    def prm2():
        return "1+30z^3+15z^4+18z^5", Fm.prm2_weight_distribution(4, 2).enumerator()

    s.check("prm-4-2-2-distribution", "PRM(q,m,2) weight distribution formula", prm2)

    def dil():
        got = []
        for ell in (1, 2, 3):
            got.append(Fm.dilix(3, 4, ell).k == 2 * Fm.cprime(3, 4, 2, ell).k)
        return [True] * 3, got

    s.check("dilix-3-4-dimension-ratio", "dim Omega = r dim C'", dil)


# ---------------------------------------------------------------------------
# theorem grids


def field_grid(max_order: int, min_q: int = 3):
    out = []
    for q in range(min_q, max_order + 1):
        try:
            prime_power(q)
        except ConstacodeError:
            continue
        m = 1
        while q ** (m + 1) <= max_order:
            m += 1
            out.append((q, m))
    return out


def divisors_r(q):
    return [r for r in range(2, q) if (q - 1) % r == 0]


def dimension_grid_checks(s: Suite, max_order: int = 1024):
    def fn():
        count, bad = 0, []
        for q, m in field_grid(max_order):
            for r in divisors_r(q):
                for ell in range(1, m):
                    C = Fm.cprime(q, m, r, ell)
                    count += 1
                    if C.k != Fm.cprime_dimension(q, m, r, ell):
                        bad.append(("cprime", q, m, r, ell))
                for ell in range(0, (q - 1) * m - 1):
                    C = Fm.cfamily(q, m, r, ell)
                    count += 1
                    if C.k != Fm.cfamily_dimension(q, m, r, ell):
                        bad.append(("c", q, m, r, ell))
        return "all agree", "all agree" if not bad else f"{len(bad)} mismatches: {bad[:5]}", (PASS if not bad else FAIL)

    s.check("dimension-formulas-grid", f"closed-form dimensions vs deg g, q^m <= {max_order}", fn)

    def upper():
        bad = []
        for q, m in field_grid(max_order):
            for r in divisors_r(q):
                for ell in range(r - 1, (q - 1) * m - 1, r):
                    k = Fm.cfamily_dimension(q, m, r, ell)
                    if k > Fm.cfamily_dimension_upper(q, m, r, ell):
                        bad.append((q, m, r, ell))
                for ell, k in Fm.special_case_dimensions(q, m, r).items():
                    if k != Fm.cfamily_dimension(q, m, r, ell):
                        bad.append(("special", q, m, r, ell))
        return "all hold", "all hold" if not bad else f"violations: {bad[:5]}"

    s.check("dimension-bounds-grid", "dimension upper bound and explicit-generator dimensions", upper)


def evaluation_grid_checks(s: Suite, max_order: int = 243):
    def gc():
        bad, count = [], 0
        for q, m in field_grid(max_order):
            for r in divisors_r(q):
                for ell in range(0, (q - 1) * m - 1):
                    count += 1
                    if not K.code_equal(Fm.gc_code(q, m, r, ell), Fm.cfamily(q, m, r, ell)):
                        bad.append((q, m, r, ell))
        return "all equal", "all equal" if not bad else f"differ: {bad[:5]}"

    s.check("evaluation-gc-equals-c", f"GC = C as row spaces, q^m <= {max_order}", gc)

    def hat():
        bad = []
        for q, m in field_grid(max_order):
            if m < 2:
                continue
            for r in divisors_r(q):
                for ell in range(r - 1, (q - 1) * (m - 1), r):
                    P = Fm.projective_tilde_code(q, m, r, ell)
                    if not K.code_equal(P, Fm.hat_code(q, m, ell)):
                        bad.append((q, m, r, ell))
                    if P.k != Fm.prm_dimension(q, m, ell):
                        bad.append(("dim", q, m, r, ell))
                    if not Fm.concatenation_identity(q, m, r, ell):
                        bad.append(("concat", q, m, r, ell))
        return "all equal", "all equal" if not bad else f"differ: {bad[:5]}"

    s.check("evaluation-hat-equals-projective", f"hat code = P(C~) and concatenation identity, q^m <= {max_order}", hat)


def prediction_grid_checks(s: Suite, max_order: int = 256, cap: int = 1 << 20):
    """Enumerated d of code and dual lies in (or equals) the predicted value."""

    def fn():
        bad, count = [], 0
        for q, m in field_grid(max_order):
            for r in divisors_r(q):
                cases = [("cprime", ell) for ell in range(1, m)]
                cases += [("c", ell) for ell in range(r - 1, (q - 1) * m - 1, r)]
                for fam, ell in cases:
                    C = Fm.cprime(q, m, r, ell) if fam == "cprime" else Fm.cfamily(q, m, r, ell)
                    if C.k == 0 or min(q**C.k, q ** (C.n - C.k)) > cap:
                        continue
                    P = Fm.predict_params(fam, q, m, r, ell)
                    W = A.weight_distribution(C, cap=cap)
                    Wd = A.macwilliams(W)
                    d, dd = W.min_distance, Wd.min_distance
                    count += 1
                    bch = K.bch_lower_bound(C)
                    if P.k != C.k or not P.d.lo <= d <= P.d.hi or bch > d:
                        bad.append((fam, q, m, r, ell, "d", d, str(P.d)))
                    if P.dual_d is not None and dd is not None and not P.dual_d.lo <= dd <= P.dual_d.hi:
                        bad.append((fam, q, m, r, ell, "dual", dd, str(P.dual_d)))
                    if "self-dual" in P.notes and not A.self_dual_check(C):
                        bad.append((fam, q, m, r, ell, "self-dual"))
        if not bad:
            return "consistent", "consistent"
        return "consistent", f"{len(bad)}/{count} inconsistent: {bad[:4]}"

    s.check("predictions-vs-enumeration", f"closed-form distances vs enumeration, q^m <= {max_order}", fn)


def property_checks(s: Suite):
    rng = np.random.default_rng(s.seed)

    def gh():
        bad = []
        for q, m in field_grid(256):
            for r in divisors_r(q):
                for ell in range(0, (q - 1) * m - 1):
                    C = Fm.cfamily(q, m, r, ell)
                    if C.generator * C.check != K.x_n_minus_lambda(C.sub, C.n, C.lam):
                        bad.append((q, m, r, ell))
        return "g h = x^n - lam", "g h = x^n - lam" if not bad else f"fails: {bad[:5]}"

    s.check("prop-gh-product", "generator times check polynomial", gh)

    def orth():
        bad = []
        for q, m in field_grid(256):
            for r in divisors_r(q):
                for ell in range(1, m):
                    C = Fm.cprime(q, m, r, ell)
                    D = K.dual(C)
                    G, H = K.generator_matrix(C).rows, K.generator_matrix(D).rows
                    if matmul(G, H.T, C.sub).any() or C.k + D.k != C.n:
                        bad.append((q, m, r, ell))
        return "orthogonal", "orthogonal" if not bad else f"fails: {bad[:5]}"

    s.check("prop-dual-orthogonality", "code and dual are orthogonal", orth)

    def involution():
        bad = 0
        for a in [(3, 3, 2, 1), (4, 2, 3, 2), (5, 2, 2, 1), (3, 4, 2, 3), (7, 2, 3, 1)]:
            W = A.weight_distribution(Fm.cprime(*a) if a[3] < a[1] else Fm.cfamily(*a))
            if A.macwilliams(A.macwilliams(W)) != W:
                bad += 1
        return 0, bad

    s.check("prop-macwilliams-involution", "transform applied twice is the identity", involution)

    def both_sides():
        bad = []
        for a in [(3, 3, 2, 1), (4, 2, 3, 2), (5, 2, 2, 3), (3, 3, 2, 3), (5, 2, 4, 3), (7, 2, 6, 5)]:
            C = Fm.cfamily(*a)
            if A.weight_distribution(C, side="code") != A.weight_distribution(C, side="dual"):
                bad.append(a)
        return [], bad

    s.check("prop-enumeration-sides-agree", "direct enumeration vs MacWilliams from the dual", both_sides)

    def residues():
        bad = []
        for t in range(1, 5):
            for q in (3, 4, 5, 7, 8, 9):
                for r in divisors_r(q):
                    brute = sum(1 for x in product(range(1, q), repeat=t) if sum(x) % r == 1 % r)
                    if brute * r != (q - 1) ** t:
                        bad.append((t, q, r))
        return [], bad

    s.check("prop-residue-count", "solutions of x_1+...+x_t = 1 mod r", residues)

    def placements():
        bad = []
        for t in range(7):
            for m in range(1, 7):
                for sc in range(1, 7):
                    brute = sum(1 for x in product(range(sc + 1), repeat=m) if sum(x) == t)
                    if brute != Fm.n_placements(t, m, sc):
                        bad.append((t, m, sc))
        return [], bad

    s.check("prop-bounded-placements", "placements of t objects in m cells, at most s each", placements)

    def cosets():
        bad = []
        for q, m in field_grid(1024):
            for M in {q**m - 1, (q**m - 1) // (q - 1)}:
                t = coset_table(q, M)
                seen = np.zeros(M, dtype=int)
                for c in t.cosets:
                    seen[list(c)] += 1
                    if c[0] != min(c) or (c[0] * q) % M not in c:
                        bad.append((q, M))
                if not np.all(seen == 1):
                    bad.append((q, M))
        return [], bad

    s.check("prop-coset-partition", "cyclotomic cosets partition Z_M", cosets)

    def normalization():
        bad = []
        for q, m in field_grid(256):
            for r in divisors_r(q):
                for ell in range(0, (q - 1) * m - 1):
                    C = Fm.cfamily(q, m, r, ell)
                    canon = normalize_ell(q, m, r, ell)
                    if canon is None:
                        if C.k != 0:
                            bad.append((q, m, r, ell))
                    elif C.generator != Fm.cfamily(q, m, r, canon).generator:
                        bad.append((q, m, r, ell))
        return [], bad

    s.check("prop-ell-normalization", "non-canonical l gives the canonical code", normalization)

    def lam_twist():
        bad = 0
        for q, m, r in [(3, 4, 2), (4, 3, 3), (5, 2, 4), (7, 2, 3)]:
            F = field_for(q, m)
            sub = F.subfield_of_size(q)
            n = (q**m - 1) // r
            pts = Fm.companion_sequence(F, q, m, q**m - 1).points
            lam_inv = sub.to_symbol(F.inv(F.exp(n)))
            for _ in range(5):
                e = tuple(int(v) for v in rng.integers(0, q, size=m))
                s0 = sum(e) % r
                if s0 != r - 1:
                    continue
                vals = Fm.evaluate_monomials([e], pts, sub)[0]
                base = vals[:n]
                f = 1
                for j in range(r):
                    if not np.array_equal(vals[j * n : (j + 1) * n], sub.mul[f, base]):
                        bad += 1
                    f = int(sub.mul[f, lam_inv])
        return 0, bad

    s.check("prop-lambda-twist", "f(eM^(jn+i)) = lam^(-j) f(eM^i) on the monomial space", lam_twist)


# ---------------------------------------------------------------------------
# entry points


def extended_checks(s: Suite):
    def fn():
        W = A.weight_distribution(Fm.cfamily(4, 5, 3, 2), cap=1 << 31)
        return EXTENDED_ENUMERATOR, W.enumerator()

    s.check("enumerator-c-4-5-3-2", "reference weight enumerator, 4^15 words", fn)


SUITES = ("paper-examples", "theorems", "all")


def run(suite: str, extended: bool = False, seed: int = 0) -> RunReport:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    s = Suite(suite, seed)
    if suite in ("paper-examples", "all"):
        example_checks(s)
    if suite in ("theorems", "all"):
        dimension_grid_checks(s)
        evaluation_grid_checks(s)
        prediction_grid_checks(s)
        property_checks(s)
    if extended:
        extended_checks(s)
    return s.report
