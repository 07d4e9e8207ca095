"""constacode command line: construct | analyze | verify | table | inspect.

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 construction
error, 4 analysis incomplete.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from . import analysis as A
from . import codes as K
from . import families as Fm
from . import verify as V
from .algebra import field_for, parse_field_spec
from .codes import ConstacyclicCode, GeneratorMatrix
from .errors import ConstacodeError, SpecParseError, TooLargeToEnumerate

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CONSTRUCT, EXIT_INCOMPLETE = 0, 1, 2, 3, 4

FAMILY_KEYS = {
    "cprime": ("q", "m", "r", "ell"),
    "c": ("q", "m", "r", "ell"),
    "ngrm": ("q", "m", "r", "h", "ell0"),
    "dilix": ("q", "m", "h"),
    "prm": ("q", "m", "h"),
}
OPTIONAL = {"ell0": 0}


@dataclass
class FamilySpec:
    family: str
    params: dict

    def args(self) -> tuple:
        return tuple(self.params[k] for k in FAMILY_KEYS[self.family])

    def __str__(self):
        return f"{self.family}:" + ",".join(f"{k}={self.params[k]}" for k in FAMILY_KEYS[self.family])


def parse_family_spec(text: str) -> FamilySpec:
    """'cprime:q=3,m=4,r=2,ell=2' -> FamilySpec."""
    fam, sep, rest = text.strip().partition(":")
    fam = fam.lower()
    if not sep or fam not in FAMILY_KEYS:
        raise SpecParseError(f"bad family spec {text!r}; expected one of {sorted(FAMILY_KEYS)} followed by ':'")
    params = {}
    for item in filter(None, rest.split(",")):
        key, eq, val = item.partition("=")
        key = key.strip().lower()
        if key == "l":
            key = "ell"
        if not eq or key not in FAMILY_KEYS[fam]:
            raise SpecParseError(f"bad parameter {item!r} for family {fam}")
        try:
            params[key] = int(val)
        except ValueError:
            raise SpecParseError(f"parameter {key} must be an integer, got {val!r}") from None
    for k in FAMILY_KEYS[fam]:
        if k not in params:
            if k in OPTIONAL:
                params[k] = OPTIONAL[k]
            else:
                raise SpecParseError(f"family {fam} needs parameter {k}")
    return FamilySpec(fam, params)


def build(spec: FamilySpec, field=None):
    p = spec.params
    if field is None:
        field = field_for(p["q"], p["m"])
    if spec.family == "cprime":
        return Fm.cprime(*spec.args(), field=field)
    if spec.family == "c":
        return Fm.cfamily(*spec.args(), field=field)
    if spec.family == "dilix":
        return Fm.dilix(*spec.args(), field=field)
    if spec.family == "ngrm":
        return Fm.ngrm(*spec.args(), field=field)
    return Fm.hat_code(*spec.args(), field=field)


def predicted(spec: FamilySpec) -> dict | None:
    p = spec.params
    try:
        if spec.family in ("cprime", "c"):
            return Fm.predict_params(spec.family, *spec.args()).to_json()
        if spec.family == "dilix":
            return Fm.predict_params("dilix", p["q"], p["m"], 1, p["h"]).to_json()
        if spec.family == "ngrm":
            n, k, d = Fm.ngrm_params(*spec.args())
            return {"n": n, "k": k, "d": {"exact": d}}
        n, k, d = Fm.prm_params(*spec.args())
        return {"n": n, "k": k, "d": {"exact": d}}
    except ConstacodeError as e:
        return {"error": f"{type(e).__name__}: {e}"}


def code_record(code) -> dict:
    if isinstance(code, ConstacyclicCode):
        return K.to_json(code)
    B = code.basis()
    return {
        "q": code.q,
        "n": code.n,
        "k": code.k,
        "label": code.label,
        "field_spec": code.sub.field.spec_string(),
        "basis": [[int(x) for x in row] for row in B],
    }


def _field_arg(args):
    return parse_field_spec(args.field) if getattr(args, "field", None) else None


def load_code(text: str, field=None):
    """A family spec, a JSON record, or a path to a JSON file."""
    t = text.strip()
    if t.startswith("{"):
        return K.from_json(t), None
    if ":" not in t or t.endswith(".json"):
        try:
            with open(t) as fh:
                return K.from_json(fh.read()), None
        except OSError as e:
            raise SpecParseError(f"cannot read {t!r}: {e}") from None
        except (ValueError, KeyError) as e:
            raise SpecParseError(f"bad code JSON in {t!r}: {e}") from None
    spec = parse_family_spec(t)
    return build(spec, field), spec


def emit(obj):
    sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")


# ---------------------------------------------------------------------------
# commands


def cmd_construct(args) -> int:
    spec = parse_family_spec(args.spec)
    field = _field_arg(args)
    code = build(spec, field)
    rec = {"spec": str(spec), "code": code_record(code), "predicted": predicted(spec)}
    emit(rec)
    return EXIT_OK


def cmd_analyze(args) -> int:
    code, spec = load_code(args.input, _field_arg(args))
    if args.dual:
        if not isinstance(code, ConstacyclicCode):
            code = GeneratorMatrix(A._bases(code)[1](), code.sub, f"dual({code.label})")
        else:
            code = K.dual(code)
    cap = args.cap if args.cap is not None else A.default_cap()
    out = {"n": code.n, "k": code.k, "q": code.q, "label": code.label}
    status = EXIT_OK
    want_distance = args.distance or not args.weights
    if args.weights:
        try:
            W = A.weight_distribution(code, cap=cap)
            out["weights"] = W.to_json()
            out["enumerator"] = W.enumerator()
            d = W.min_distance
            kind = "undefined" if d is None else "exact"
            out["distance"] = {"kind": kind, "lo": d, "hi": d, "certificates": {"enumeration": True}}
            want_distance = False
        except TooLargeToEnumerate as e:
            out["weights"] = None
            out["weights_error"] = str(e)
            status = EXIT_INCOMPLETE
            want_distance = True
    if want_distance:
        r = A.min_distance(code, cap=cap, samples=args.samples, seed=args.seed)
        out["distance"] = r.to_json()
        if r.kind == "range":
            status = EXIT_INCOMPLETE
    emit(out)
    return status


def cmd_verify(args) -> int:
    report = V.run(args.suite, extended=args.extended, seed=args.seed)
    if args.format == "json":
        sys.stdout.write(report.dumps() + "\n")
    else:
        sys.stdout.write(report.render() + "\n")
        flagged = [r for r in report.records if r.status == V.FLAGGED]
        for r in flagged:
            sys.stderr.write(f"flagged: {r.id}: expected {r.expected}, computed {r.computed}\n")
    if args.json:
        with open(args.json, "w") as fh:
            fh.write(report.dumps() + "\n")
    return EXIT_FAIL if report.failed else EXIT_OK


def parse_range(text: str) -> list[int]:
    """'3', '1..4', '2,3,5'."""
    out = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            a, _, b = part.partition("..")
            try:
                out.extend(range(int(a), int(b) + 1))
            except ValueError:
                raise SpecParseError(f"bad range {part!r}") from None
        elif part:
            try:
                out.append(int(part))
            except ValueError:
                raise SpecParseError(f"bad value {part!r}") from None
    return out


TABLE_COLUMNS = ["family", "q", "m", "r", "ell", "n", "k", "d", "certificates", "optimal", "perfect"]


def table_rows(family: str, ranges: dict, cap: int, samples: int, seed: int):
    from .algebra import prime_power

    fam = family.lower()
    if fam not in ("cprime", "c"):
        raise SpecParseError(f"table supports families cprime and c, not {family!r}")
    for q in ranges.get("q", []):
        prime_power(q)  # NotPrime -> construction error
        for m in ranges.get("m", []):
            if m < 1:
                raise ConstacodeError(f"m = {m} must be positive")
            rs = ranges.get("r") or [r for r in range(2, q) if (q - 1) % r == 0]
            for r in rs:
                if "ell" in ranges:
                    ells = ranges["ell"]
                elif fam == "cprime":
                    ells = range(1, m)
                else:
                    ells = range(r - 1, (q - 1) * m - 1, r)
                for ell in ells:
                    code = Fm.cprime(q, m, r, ell) if fam == "cprime" else Fm.cfamily(q, m, r, ell)
                    res = A.min_distance(code, cap=cap, samples=samples, seed=seed)
                    row = {"family": fam, "q": q, "m": m, "r": r, "ell": ell, "n": code.n, "k": code.k, "d": str(res)}
                    certs = []
                    for key in ("bch", "witness", "sphere_packing", "enumeration", "random_sample_witness"):
                        if key in res.certificates:
                            v = res.certificates[key]
                            certs.append(f"{key}={v['delta']}" if key == "bch" else f"{key}={v}" if key != "enumeration" else "enumeration")
                    row["certificates"] = ";".join(certs)
                    if res.is_exact:
                        sp = A.sphere_packing_check(code.n, code.k, res.value, q)
                        row["optimal"] = A.is_distance_optimal(code.n, code.k, res.value, q)
                        row["perfect"] = sp.is_perfect
                    else:
                        row["optimal"] = row["perfect"] = None
                    yield row


def cmd_table(args) -> int:
    ranges = {}
    for item in args.ranges:
        key, eq, val = item.partition("=")
        key = key.strip().lower()
        if key == "l":
            key = "ell"
        if not eq or key not in ("q", "m", "r", "ell"):
            raise SpecParseError(f"bad range {item!r}; use q=3, m=2..4, r=2, ell=1..3")
        ranges[key] = parse_range(val)
    cap = args.cap if args.cap is not None else A.default_cap()
    rows = list(table_rows(args.family, ranges, cap, args.samples, args.seed))
    if args.format == "json":
        emit(rows)
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=TABLE_COLUMNS, lineterminator="\n")
        w.writeheader()
        for row in rows:
            w.writerow(row)
        sys.stdout.write(buf.getvalue())
    else:
        data = [TABLE_COLUMNS] + [[_cell(row[c]) for c in TABLE_COLUMNS] for row in rows]
        widths = [max(len(r[i]) for r in data) for i in range(len(TABLE_COLUMNS))]
        for i, r in enumerate(data):
            sys.stdout.write("  ".join(c.rjust(w) if c.lstrip("-").isdigit() else c.ljust(w) for c, w in zip(r, widths)).rstrip() + "\n")
            if i == 0:
                sys.stdout.write("  ".join("-" * w for w in widths) + "\n")
    return EXIT_OK


def _cell(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def _inspect_cosets(text: str) -> dict:
    """cosets:q=3,M=80[,r=2] -> leaders and sizes (filtered to leaders = 1 mod r)."""
    from .cosets import coset_table

    kv = {}
    for part in text.split(":", 1)[1].split(","):
        key, eq, val = part.partition("=")
        try:
            kv[key.strip()] = int(val)
        except ValueError:
            raise SpecParseError(f"bad cosets spec {text!r}; use cosets:q=3,M=80[,r=2]") from None
        if not eq:
            raise SpecParseError(f"bad cosets spec {text!r}")
    if "q" not in kv or "M" not in kv:
        raise SpecParseError("cosets spec needs q and M")
    t = coset_table(kv["q"], kv["M"])
    r = kv.get("r", 1)
    rows = [{"leader": c[0], "size": len(c), "members": list(c)} for c in t.cosets if c[0] % r == 1 % r]
    return {"q": kv["q"], "M": kv["M"], "r": r, "count": len(rows), "cosets": rows}


def cmd_inspect(args) -> int:
    t = args.target.strip()
    if t.lower().startswith("cosets:"):
        emit(_inspect_cosets(t))
        return EXIT_OK
    if ":" in t and t.split(":")[0].lower() in FAMILY_KEYS:
        code, spec = load_code(t, _field_arg(args))
        out = {"spec": str(spec), "n": code.n, "k": code.k, "q": code.q}
        if isinstance(code, ConstacyclicCode):
            out["lambda_log"] = code.lambda_log
            out["generator"] = repr(code.generator)
            if code.defining_set is not None:
                out["zero_coset_leaders"] = list(code.defining_set.leaders(code.q))
                c = K.bch_bound(code)
                out["bch"] = {"delta": c.delta, "e": c.e, "h": c.h, "run": c.run}
        emit(out)
        return EXIT_OK
    F = parse_field_spec(t)
    emit(
        {
            "p": F.p,
            "K": F.K,
            "order": F.order,
            "modulus": list(F.modulus),
            "spec": F.spec_string(),
            "primitive_element": "b",
        }
    )
    return EXIT_OK


# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def make_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="constacode", description="Constacyclic code families: construction and analysis.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    c = sub.add_parser("construct", help="build a code and print its JSON record")
    c.add_argument("spec", help="family spec, e.g. cprime:q=3,m=4,r=2,ell=1")
    c.add_argument("--field", help="field spec p^K:c0,c1,...,cK (default: registry)")
    c.set_defaults(func=cmd_construct)

    a = sub.add_parser("analyze", help="distance and weight distribution")
    a.add_argument("input", help="family spec, code JSON, or JSON file")
    a.add_argument("--field")
    a.add_argument("--distance", action="store_true")
    a.add_argument("--weights", action="store_true")
    a.add_argument("--dual", action="store_true", help="analyze the dual code")
    a.add_argument("--cap", type=int, default=None, help="max codewords to enumerate")
    a.add_argument("--samples", type=int, default=100_000)
    a.add_argument("--seed", type=int, default=0)
    a.set_defaults(func=cmd_analyze)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=V.SUITES)
    v.add_argument("--extended", action="store_true", help="include the long enumerations")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--json", metavar="PATH", help="also write the JSON report to PATH")
    v.add_argument("--seed", type=int, default=0)
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="parameter table over ranges")
    t.add_argument("family", choices=("cprime", "c"))
    t.add_argument("ranges", nargs="*", help="q=3 m=2..4 r=2 ell=1..3")
    t.add_argument("--format", choices=("text", "csv", "json"), default="text")
    t.add_argument("--cap", type=int, default=None)
    t.add_argument("--samples", type=int, default=10_000)
    t.add_argument("--seed", type=int, default=0)
    t.set_defaults(func=cmd_table)

    i = sub.add_parser("inspect", help="describe a field spec, a family spec, or cosets:q=..,M=..[,r=..]")
    i.add_argument("target")
    i.add_argument("--field")
    i.set_defaults(func=cmd_inspect)
    return p


def main(argv=None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except SpecParseError as e:
        sys.stderr.write(f"constacode: {e}\n")
        return EXIT_USAGE
    except ConstacodeError as e:
        sys.stderr.write(f"constacode: {type(e).__name__}: {e}\n")
        return EXIT_CONSTRUCT


if __name__ == "__main__":
    sys.exit(main())
