"""Command-line front end.

Exit codes: 0 verified/computed, 1 a claim failed (or methods disagreed),
2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import partitions
from ._backend import NAME as BACKEND
from .congruence import (
    THEOREM_TUPLES,
    CongruenceClaim,
    PartitionFamily,
    certificate_from_json,
    scan,
    theorem_claims,
    verify_progression,
)
from .radu_sellers import RSTuple, check_hypotheses, orbit, v_bound
from .series import parse_eta_spec

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
DEFAULT_MAX_INDEX = 10**6
EMPIRICAL_BANNER = "EMPIRICAL - no proof status"


class UsageError(Exception):
    pass


def _frac(x) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def _parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(x) for x in text.split(".."))
    except ValueError:
        raise UsageError(f"range must look like LO..HI, got {text!r}") from None
    if lo < 0 or hi < lo:
        raise UsageError(f"bad range {text!r}")
    return lo, hi


def _parse_family(text: str) -> PartitionFamily:
    if not (text.startswith("p") and text[1:].isdigit() and int(text[1:]) >= 1):
        raise UsageError(f"family must look like p2, p3, ...; got {text!r}")
    return PartitionFamily(int(text[1:]))


def _source(args):
    if args.eta and args.family:
        raise UsageError("give either --family or --eta, not both")
    if args.eta:
        try:
            return parse_eta_spec(args.eta)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    return _parse_family(args.family or "p2")


def _guard(index: int, args) -> None:
    if not args.no_index_cap and index > args.max_index:
        raise UsageError(
            f"largest coefficient index {index} exceeds --max-index {args.max_index}; "
            "pass --no-index-cap to override"
        )


def _emit(args, text_lines, payload) -> None:
    if args.format == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def cmd_compute(args) -> int:
    if args.k < 1:
        raise UsageError("--k must be >= 1")
    if args.range:
        lo, hi = _parse_range(args.range)
    elif args.n is not None:
        if args.n < 0:
            raise UsageError("--n must be >= 0")
        lo = hi = args.n
    else:
        raise UsageError("give --n or --range")
    if args.all_methods:
        methods = partitions.PK_METHODS
    else:
        methods = (args.method,)
        if args.method not in partitions.PK_METHODS:
            raise UsageError(f"--method must be one of {partitions.PK_METHODS}")
    tables = {m: partitions.pk_table(args.k, hi, m).values for m in methods}
    rows, disagree = [], False
    for n in range(lo, hi + 1):
        values = [tables[m][n] for m in methods]
        agree = len(set(values)) == 1
        disagree |= not agree
        rows.append((n, values, agree))

    lines = []
    if args.all_methods:
        width = max(len(str(v)) for _, vals, _ in rows for v in vals)
        width = max(width, max(len(m) for m in methods))
        lines.append(f"{'n':>6}  " + "  ".join(f"{m:>{width}}" for m in methods) + "  status")
        for n, values, agree in rows:
            cells = "  ".join(f"{v:>{width}}" for v in values)
            lines.append(f"{n:>6}  {cells}  {'AGREE' if agree else 'DISAGREE'}")
    elif lo == hi:
        lines.append(str(rows[0][1][0]))
    else:
        for n, values, _ in rows:
            lines.append(f"{n:>6}  {values[0]}")
    payload = {
        "k": args.k,
        "methods": list(methods),
        "rows": [{"n": n, "values": dict(zip(methods, vals)), "agree": ok} for n, vals, ok in rows],
    }
    _emit(args, lines, payload)
    return EXIT_FAIL if disagree else EXIT_OK


def _claims_from_args(args) -> list[CongruenceClaim]:
    if args.claim:
        try:
            data = json.loads(Path(args.claim).read_text())
            if "claim" in data:
                data = data["claim"]
            return [CongruenceClaim.from_json(data)]
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"cannot read claim file {args.claim}: {exc}") from None
    if args.preset == "theorem-2.1":
        return theorem_claims(args.depth)
    if args.preset == "mod3":
        return [CongruenceClaim(PartitionFamily(2), 3, 3, 2, args.depth if args.depth is not None else 1000)]
    missing = [f for f in ("mod", "m", "t", "depth") if getattr(args, f) is None]
    if missing:
        raise UsageError("missing " + ", ".join("--" + f for f in missing))
    try:
        return [CongruenceClaim(_source(args), args.mod, args.m, args.t, args.depth)]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _cert_filename(cert) -> str:
    c = cert.claim
    return f"cert-u{c.modulus}-m{c.m}-t{c.t}.json"


def cmd_verify(args) -> int:
    try:
        claims = _claims_from_args(args)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    claims.sort(key=lambda c: (c.modulus, c.m, c.t))
    for claim in claims:
        _guard(claim.max_index, args)
    certs = [verify_progression(c) for c in claims]

    out = Path(args.out) if args.out else None
    if out is not None:
        out.mkdir(parents=True, exist_ok=True)
        for cert in certs:
            (out / _cert_filename(cert)).write_text(cert.dumps())

    ok = True
    lines = []
    for cert in certs:
        c = cert.claim
        passed = cert.all_zero
        if c.bound_basis is not None:
            passed = passed and cert.status == "lemma-complete"
        ok &= passed
        line = (
            f"{'PASS' if passed else 'FAIL'}  c({c.m}n+{c.t}) = 0 mod {c.modulus}  "
            f"n<={cert.verified_through}  status={cert.status}"
        )
        if cert.pipeline_evidence:
            line += f"  floor(v)={cert.pipeline_evidence['floor_v']}"
        lines.append(line)
        if cert.failures:
            n, res = cert.first_failure
            lines.append(f"      first witness: n={n} (index {c.m * n + c.t}) residue {res}")
        for note in cert.notes:
            lines.append(f"      note: {note}")
        if out is not None:
            lines.append(f"      certificate: {out / _cert_filename(cert)}")
    _emit(args, lines, [cert.to_json() for cert in certs])
    return EXIT_OK if ok else EXIT_FAIL


def _tuple_from_args(args) -> RSTuple:
    if args.preset:
        t = {"theorem-2.1-t62": 62, "theorem-2.1-t161": 161}[args.preset]
        return THEOREM_TUPLES[t]
    missing = [f for f in ("m", "M", "N", "t", "r") if getattr(args, f) is None]
    if missing:
        raise UsageError("missing " + ", ".join("--" + f for f in missing))
    try:
        r = parse_eta_spec(args.r, level=args.M)
    except ValueError as exc:
        raise UsageError(f"--r: {exc}") from None
    try:
        r_prime = parse_eta_spec(args.r_prime or "", level=args.N)
    except ValueError as exc:
        raise UsageError(f"--r-prime: {exc}") from None
    try:
        return RSTuple(args.m, args.M, args.N, args.t, r, r_prime)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_bound(args) -> int:
    tup = _tuple_from_args(args)
    orb = orbit(tup)
    v, floor_v = v_bound(tup)
    report = check_hypotheses(tup)
    lines = [
        f"tuple: m={tup.m} M={tup.M} N={tup.N} t={tup.t} r={tup.r} r'={tup.r_prime}",
        f"orbit: {{{', '.join(map(str, orb))}}}",
        f"{'delta':>6}  {'p_mr':>12}  {'p_star':>12}  {'sum':>12}  ok",
    ]
    for row in report.rows:
        lines.append(
            f"{row.delta:>6}  {_frac(row.p_mr):>12}  {_frac(row.p_star):>12}  {_frac(row.total):>12}  {'yes' if row.ok else 'NO'}"
        )
    lines.append(f"hypotheses: {'pass' if report.passed else 'FAIL'}")
    lines.append(f"v = {_frac(v)}")
    lines.append(f"floor(v) = {floor_v}")
    payload = {
        "tuple": tup.to_json(),
        "orbit": orb,
        "hypotheses": [
            {"delta": r.delta, "p_mr": _frac(r.p_mr), "p_star": _frac(r.p_star), "sum": _frac(r.total), "ok": r.ok}
            for r in report.rows
        ],
        "hypotheses_pass": report.passed,
        "v": _frac(v),
        "floor_v": floor_v,
    }
    _emit(args, lines, payload)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_split(args) -> int:
    if args.n < 0:
        raise UsageError("--n must be >= 0")
    w = partitions.chan_split(args.n)
    lines = [
        f"n = {w.n}   (index 3n+2 = {3 * w.n + 2})",
        f"A (i>j>k)      = {w.a}",
        f"B (i=j!=k)     = {w.b}",
        f"6A+3B          = {w.total}",
        f"p2(3n+2)       = {w.p2_value}",
        f"i=j=k solutions: {w.triple_equal}",
    ]
    payload = {"n": w.n, "A": w.a, "B": w.b, "total": w.total, "p2": w.p2_value, "triple_equal": w.triple_equal}
    _emit(args, lines, payload)
    return EXIT_OK if w.total == w.p2_value and w.triple_equal == 0 else EXIT_FAIL


def cmd_scan(args) -> int:
    source = _source(args)
    if args.mod < 2 or args.m < 1 or args.depth < 0:
        raise UsageError("scan needs --mod >= 2, --m >= 1, --depth >= 0")
    _guard(args.m * (args.depth + 1) - 1, args)
    survivors = scan(source, args.mod, args.m, args.depth)
    lines = [
        EMPIRICAL_BANNER,
        f"c({args.m}n+t) = 0 mod {args.mod} for all n <= {args.depth}:",
        "{" + ", ".join(map(str, survivors)) + "}",
    ]
    payload = {
        "status": "empirical",
        "source": str(source),
        "modulus": args.mod,
        "m": args.m,
        "depth": args.depth,
        "survivors": survivors,
    }
    _emit(args, lines, payload)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cubicpart", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"%(prog)s 0.1.0 ({BACKEND} kernels)")
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")

    guard = argparse.ArgumentParser(add_help=False)
    guard.add_argument("--max-index", type=int, default=DEFAULT_MAX_INDEX)
    guard.add_argument("--no-index-cap", action="store_true")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--family", help="partition family, e.g. p2")
    source.add_argument("--eta", help="eta-quotient spec, e.g. 1:10,2:-1,11:-1")

    p = sub.add_parser("compute", parents=[common], help="print p_k(n)")
    p.add_argument("--k", type=int, default=2)
    p.add_argument("--n", type=int)
    p.add_argument("--range", help="LO..HI inclusive")
    p.add_argument("--method", default="convolution")
    p.add_argument("--all-methods", action="store_true")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", parents=[common, guard, source], help="verify a congruence and write certificates")
    p.add_argument("--preset", choices=("theorem-2.1", "mod3"))
    p.add_argument("--claim", help="claim or certificate JSON file")
    p.add_argument("--mod", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--depth", type=int)
    p.add_argument("--out", help="directory for certificate files")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bound", parents=[common], help="orbit, hypotheses and floor(v) for a tuple")
    p.add_argument("--preset", choices=("theorem-2.1-t62", "theorem-2.1-t161"))
    p.add_argument("--m", type=int)
    p.add_argument("--M", type=int)
    p.add_argument("--N", type=int)
    p.add_argument("--t", type=int)
    p.add_argument("--r")
    p.add_argument("--r-prime", dest="r_prime")
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("split", parents=[common], help="6A+3B split of p2(3n+2)")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_split)

    p = sub.add_parser("scan", parents=[common, guard, source], help="empirical congruence scan")
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--depth", type=int, required=True)
    p.set_defaults(func=cmd_scan)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(f"{args.command}: {exc}")


if __name__ == "__main__":
    sys.exit(main())
