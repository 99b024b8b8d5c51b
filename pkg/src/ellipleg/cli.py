"""Command-line interface.

Subcommands
-----------
eval      evaluate one function value, with its route and elliptic combination
verify    check identities of the catalogue over parameter grids (CSV report)
table     dump the curve registry as JSON
laplace   Laplace coefficients with the normalization stated in the header
selftest  run every acceptance criterion

Exit codes: 0 success, 1 usage or domain error, 2 verification failure.
Standard output is deterministic; the timestamp line goes to standard
error and is dropped with ``--no-timestamp``.
"""

from __future__ import annotations

import argparse
import csv
import datetime as _dt
import io
import json
import math
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Optional, Sequence

from . import closed_forms as cf
from .applications import LAPLACE_CONVENTION, laplace_coefficient_ex, laplace_coefficient_quadrature
from .checks import ALPHA_GRID, run_all
from .curves import CurveId, registry_dict
from .errors import DegenerateParameterError, EllipLegError
from .identities import catalogue, get_record, identity_point, identity_sides, p_grid
from .indices import FunctionKind, LegendreIndex
from .reduction import evaluate_ex

__all__ = ["main", "build_parser", "VERIFY_COLUMNS", "GAP_TOLERANCE"]

VERIFY_COLUMNS = ("label", "alpha", "beta", "p", "L", "R", "lhs", "rhs", "gap")
GAP_TOLERANCE = 1e-9

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs) -> None:
        super().__init__(*args, **kwargs)
        # accept "-1/4" and "-2e-3" as values rather than option flags
        self._negative_number_matcher = re.compile(r"^-\.?\d")

    def error(self, message: str) -> None:  # argparse would exit with 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _num17(x: float) -> str:
    return format(x, ".17g")


def _num12(x: float) -> str:
    return format(x, ".12g")


def _json_value(x):
    """Floats as numbers rounded to 17 significant digits; non-finite as strings."""
    if isinstance(x, float):
        return float(_num17(x)) if math.isfinite(x) else str(x)
    if isinstance(x, dict):
        return {k: _json_value(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_json_value(v) for v in x]
    return x


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from exc


def _float_list(text: str) -> list[float]:
    try:
        return [float(Fraction(t)) for t in text.split(",") if t.strip()]
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not a comma-separated number list: {text!r}") from exc


def _stamp(args: argparse.Namespace) -> None:
    if not args.no_timestamp:
        now = _dt.datetime.now(_dt.timezone.utc).replace(microsecond=0).isoformat()
        print(f"# generated {now}", file=sys.stderr)


# eval ---------------------------------------------------------------------

_CLOSED_FORMS = {
    ("ferrers-p", Fraction(-1, 6), Fraction(-1, 4)):
        ("closed form in theta = arccos(x)", lambda x: cf.ferrers_p_m16_m14(math.acos(x))),
    ("legendre-p", Fraction(-1, 6), Fraction(-1, 4)):
        ("closed form in xi = arccosh(z)", lambda z: cf.legendre_p_m16_m14(math.acosh(z))),
    ("legendre-qhat", Fraction(-1, 4), Fraction(-1, 3)):
        ("closed form in xi = arccoth(z)", lambda z: cf.qhat_m14_m13(math.atanh(1.0 / z))),
    ("legendre-qhat", Fraction(-1, 4), Fraction(-1, 2)):
        ("algebraic closed form", cf.qhat_m14_m12),
}


def run_eval(args: argparse.Namespace) -> int:
    kind = FunctionKind(args.kind)
    idx = LegendreIndex.of(args.nu, args.mu)
    payload: dict = {"kind": kind.value, "nu": str(args.nu), "mu": str(args.mu), "arg": args.arg}
    if args.closed_form:
        key = (kind.value, args.nu, args.mu)
        if key not in _CLOSED_FORMS:
            raise _UsageError(f"no closed form for {kind.value} at nu={args.nu}, mu={args.mu}; "
                              f"available: " + ", ".join(f"{k} {n} {m}" for k, n, m in _CLOSED_FORMS))
        method, fn = _CLOSED_FORMS[key]
        payload.update(value=fn(args.arg), method=method, trace=[method], combination=None)
    else:
        ev = evaluate_ex(kind, idx, args.arg)
        payload.update(value=ev.value, method=ev.method, trace=list(ev.trace),
                       combination=ev.combination.as_dict() if ev.combination else None)
    _emit_eval(payload, args.format)
    return EXIT_OK


def _emit_eval(payload: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(_json_value(payload), indent=2, sort_keys=True))
        return
    comb = payload["combination"]
    if fmt == "csv":
        cols = ["kind", "nu", "mu", "arg", "value", "method"]
        row = [payload["kind"], payload["nu"], payload["mu"], _num17(payload["arg"]),
               _num17(payload["value"]), payload["method"]]
        if comb:
            for name in ("modulus", "coef_k", "coef_e", "coef_kc", "coef_ec"):
                cols.append(name)
                v = comb[name]
                row.append(_num17(v[0] if isinstance(v, list) else v))
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        w.writerow(row)
        sys.stdout.write(buf.getvalue())
        return
    print(f"{payload['kind']} nu={payload['nu']} mu={payload['mu']} at {_num12(payload['arg'])}")
    print(f"value   {_num12(payload['value'])}")
    print(f"method  {payload['method']}")
    for step in payload["trace"]:
        print(f"  - {step}")
    if comb:
        print(f"combination in {comb['parameter']}: m0 = {_num12(comb['modulus'])}")
        for name, label in (("coef_k", "K(m0)"), ("coef_e", "E(m0)"),
                            ("coef_kc", "K(1-m0)"), ("coef_ec", "E(1-m0)")):
            v, d = comb[name]
            if v or d:
                print(f"  {label:8s} coefficient {_num12(v)}  (derivative part {_num12(d)})")


# verify -------------------------------------------------------------------

def _verify_rows(label: str, alphas: Sequence[float], betas: Sequence[float],
                 grid: int, jobs: int) -> list[tuple]:
    rec = get_record(label)
    if rec.alpha_constraint == "zero":
        sets = [(0.0, None)]
    elif rec.alpha_constraint == "none":
        sets = [(None, None)]
    elif rec.alpha_constraint == "two":
        sets = [(a, b) for a in alphas for b in betas]
    else:
        sets = [(a, None) for a in alphas]
    tasks = [(a, b, p) for a, b in sets for p in p_grid(label, grid)]

    def one(task):
        a, b, p = task
        prm = {}
        if a is not None:
            prm["alpha"] = a
        if b is not None:
            prm["beta"] = b
        lhs, rhs, gap = identity_sides(label, prm, p)
        L, R = identity_point(label, p)
        return (label, a, b, p, L, R, lhs, rhs, gap)

    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(one, tasks))
    return [one(t) for t in tasks]


def _csv_cell(x) -> str:
    if x is None:
        return ""
    if isinstance(x, float):
        return _num17(x)
    return str(x)


def run_verify(args: argparse.Namespace) -> int:
    if args.grid < 2:
        raise _UsageError("--grid must be at least 2")
    if args.identity == "all":
        labels = [rec.label for rec in catalogue()]
    else:
        rec = get_record(args.identity)
        if rec.alpha_constraint == "zero" and any(a != 0.0 for a in args.alpha or ()):
            raise _UsageError(f"{rec.label} holds only for alpha = 0")
        labels = [args.identity]
    alphas = args.alpha if args.alpha is not None else list(ALPHA_GRID)
    betas = args.beta if args.beta is not None else alphas
    rows = []
    for label in labels:
        rows.extend(_verify_rows(label, alphas, betas, args.grid, args.jobs))
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(VERIFY_COLUMNS)
    for row in rows:
        w.writerow([_csv_cell(x) for x in row])
    if args.out and args.out != "-":
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(buf.getvalue())
    else:
        sys.stdout.write(buf.getvalue())
    worst = max((r[-1] for r in rows), default=0.0)
    failed = sum(1 for r in rows if not r[-1] <= GAP_TOLERANCE)
    noun = "identity" if len(labels) == 1 else "identities"
    print(f"verified {len(labels)} {noun}, {len(rows)} rows, max gap {worst:.3e}, "
          f"{failed} above {GAP_TOLERANCE:g}", file=sys.stderr)
    return EXIT_VERIFY if failed else EXIT_OK


# table / laplace / selftest -----------------------------------------------

def run_table(args: argparse.Namespace) -> int:
    data = registry_dict()
    if args.curve != "all":
        cid = CurveId(args.curve)
        data = [d for d in data if d["curve"] == cid.value]
    print(json.dumps(_json_value(data if args.curve == "all" else data[0]), indent=2))
    return EXIT_OK


def run_laplace(args: argparse.Namespace) -> int:
    value, method = laplace_coefficient_ex(args.s, args.m, args.alpha)
    payload = {"convention": LAPLACE_CONVENTION, "s": str(args.s), "m": args.m,
               "alpha": args.alpha, "value": value, "method": method}
    if args.check:
        payload["quadrature"] = laplace_coefficient_quadrature(args.s, args.m, args.alpha)
    if args.format == "json":
        print(json.dumps(_json_value(payload), indent=2, sort_keys=True))
    elif args.format == "csv":
        cols = ["s", "m", "alpha", "value"] + (["quadrature"] if args.check else [])
        print(f"# convention: {LAPLACE_CONVENTION}")
        print(",".join(cols))
        print(",".join([str(args.s), str(args.m), _num17(args.alpha), _num17(value)]
                       + ([_num17(payload["quadrature"])] if args.check else [])))
    else:
        print(f"convention: {LAPLACE_CONVENTION}")
        print(f"b_{args.s}^({args.m})({_num12(args.alpha)}) = {_num12(value)}  [{method}]")
        if args.check:
            print(f"quadrature            = {_num12(payload['quadrature'])}")
    return EXIT_OK


def run_selftest(args: argparse.Namespace) -> int:
    results = run_all()
    for res in results:
        print(res.line())
    failed = [r.number for r in results if not r.passed]
    print(f"{len(results) - len(failed)}/{len(results)} criteria passed"
          + (f"; failed: {', '.join(map(str, failed))}" if failed else ""))
    return EXIT_VERIFY if failed else EXIT_OK


# parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="ellipleg", description=__doc__.split("\n\n")[0])
    parser.add_argument("--no-timestamp", action="store_true",
                        help="do not print the timestamp line on standard error")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", help="evaluate a Legendre or Ferrers function")
    p.add_argument("--kind", required=True, choices=[k.value for k in FunctionKind])
    p.add_argument("--nu", required=True, type=_rational, help="degree, e.g. -1/6")
    p.add_argument("--mu", required=True, type=_rational, help="order, e.g. 0 or -1/4")
    p.add_argument("--arg", required=True, type=float, help="argument z > 1 or x in (-1, 1)")
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--closed-form", action="store_true", help="use a radical closed form")
    p.set_defaults(func=run_eval)

    p = sub.add_parser("verify", help="check identities over parameter grids")
    p.add_argument("--identity", required=True, help='record label such as "I6(i)", or "all"')
    p.add_argument("--grid", type=int, default=50, help="points per p-interval (default 50)")
    p.add_argument("--alpha", type=_float_list, default=None, help="comma-separated alpha values")
    p.add_argument("--beta", type=_float_list, default=None, help="beta values for W2 records")
    p.add_argument("--out", default=None, help="CSV output path (default: standard output)")
    p.add_argument("--jobs", type=int, default=1, help="worker threads")
    p.set_defaults(func=run_verify)

    p = sub.add_parser("table", help="dump the curve registry")
    p.add_argument("--curve", default="all", choices=["all"] + [c.value for c in CurveId])
    p.set_defaults(func=run_table)

    p = sub.add_parser("laplace", help="Laplace coefficient b_s^(m)(alpha)")
    p.add_argument("--s", required=True, type=_rational)
    p.add_argument("--m", required=True, type=int)
    p.add_argument("--alpha", required=True, type=float)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--check", action="store_true", help="also print the quadrature value")
    p.set_defaults(func=run_laplace)

    p = sub.add_parser("selftest", help="run every acceptance criterion")
    p.set_defaults(func=run_selftest)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    _stamp(args)
    try:
        return args.func(args)
    except DegenerateParameterError as exc:
        print(f"ellipleg: degenerate parameters: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (EllipLegError, ValueError, _UsageError) as exc:
        print(f"ellipleg: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
