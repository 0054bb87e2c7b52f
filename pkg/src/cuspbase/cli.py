"""Command-line front end: dimension tables, basis dumps, expansion, verify.

Output is byte-deterministic for fixed inputs; every dump starts with a
format-version line.  Exit codes: 0 success, 1 verification failure,
2 usage error, 3 internal invariant violation.  The environment variable
CUSPBASE_PREC overrides the default precision policy.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import verify as _verify
from .basis import m_basis, s_basis
from .catalog import evaluate
from .dimensions import SUPPORTED_LEVELS, default_prec, dim_cusp, dim_modular, \
    sturm_bound
from .errors import (
    CuspbaseError, ExprSyntaxError, FractionalValuation, OddWeight,
    UnknownAtom, UnsupportedLevel,
)
from .eta import EtaQuotient, eta_expand
from .parse import parse_expr
from .weierstrass import TorsionPoint, wpa_expand

FORMAT_VERSION = "cuspbase.v1"


def _coeff_str(c):
    f = Fraction(c)
    return str(f.numerator) if f.denominator == 1 else \
        f"{f.numerator}/{f.denominator}"


def _series_row(series, upto):
    return " ".join(_coeff_str(series.coeff(e)) for e in range(upto))


def _parse_levels(text):
    if text == "all":
        return list(SUPPORTED_LEVELS)
    try:
        level = int(text)
    except ValueError:
        raise ValueError(f"level must be an integer or 'all', got {text!r}") from None
    return [level]


def _parse_weights(text):
    lo, sep, hi = text.partition("..")
    if not sep:
        hi = lo
    try:
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise ValueError(f"weights must look like LO..HI, got {text!r}") from None
    if lo % 2 or hi % 2 or lo < 2 or hi < lo:
        raise ValueError("weight bounds must be even, >= 2 and ordered")
    return lo, hi


def _env_prec():
    raw = os.environ.get("CUSPBASE_PREC")
    if raw is None:
        return None
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"CUSPBASE_PREC must be an integer, got {raw!r}") from None
    if value < 1:
        raise ValueError("CUSPBASE_PREC must be positive")
    return value


# -- subcommands -----------------------------------------------------------------

def cmd_dims(args, out):
    levels = _parse_levels(args.level)
    lo, hi = _parse_weights(args.weights)
    weights = range(lo, hi + 1, 2)
    print(f"# {FORMAT_VERSION} dims weights={lo}..{hi}", file=out)
    for N in levels:
        row_s = " ".join(str(dim_cusp(N, w)) for w in weights)
        row_m = " ".join(str(dim_modular(N, w)) for w in weights)
        print(f"level {N} dim_S: {row_s}", file=out)
        print(f"level {N} dim_M: {row_m}", file=out)
    return 0


def cmd_basis(args, out):
    N = int(args.level)
    w = args.weight
    if w % 2 or w < 2:
        raise ValueError("weight must be an even integer >= 2")
    k = w // 2
    prec = args.prec or _env_prec() or default_prec(N, w)
    floor = sturm_bound(N, w) + 1
    if prec < floor:
        raise ValueError(f"precision {prec} is below the floor {floor} "
                         f"for weight {w} at level {N}")
    basis = s_basis(N, k, prec) if args.space == "cusp" else m_basis(N, k, prec)
    upto = int(basis.prec)
    if args.format == "jsonl":
        header = {
            "format": FORMAT_VERSION, "kind": "basis", "level": N,
            "weight": w, "space": args.space, "precision": upto,
            "rows": len(basis),
        }
        print(json.dumps(header, sort_keys=True), file=out)
        for i, el in enumerate(basis.elements, start=1):
            row = {
                "level": N, "weight": w, "space": args.space, "index": i,
                "valuation": int(el.valuation()),
                "coeffs": [_coeff_str(el.coeff(e)) for e in range(upto)],
            }
            print(json.dumps(row, sort_keys=True), file=out)
    else:
        print(f"# {FORMAT_VERSION} basis level={N} weight={w} "
              f"space={args.space} prec={upto} rows={len(basis)}", file=out)
        for i, el in enumerate(basis.elements, start=1):
            print(f"{i} {int(el.valuation())}: {_series_row(el, upto)}", file=out)
    return 0


def cmd_expand(args, out):
    prec = args.prec or _env_prec() or 16
    if prec < 1:
        raise ValueError("precision must be positive")
    if args.eta is not None:
        series = eta_expand(EtaQuotient.parse(args.eta), prec)
        source = f"eta({args.eta.replace(' ', '')})"
    elif args.wpa is not None:
        parts = args.wpa.split(",")
        if len(parts) != 3:
            raise ValueError("--wpa expects a,b,N")
        a, b, N = (int(p) for p in parts)
        series = wpa_expand(TorsionPoint(a, b, N), prec)
        source = f"wpa({a},{b},{N})"
    else:
        series = evaluate(parse_expr(args.expr), prec)
        source = args.expr
    print(f"# {FORMAT_VERSION} series prec={prec}", file=out)
    print(f"{source} = {series.to_str()}", file=out)
    return 0


def cmd_verify(args, out):
    levels = _parse_levels(args.level)
    for N in levels:
        if N not in SUPPORTED_LEVELS:
            raise UnsupportedLevel(f"level {N} is outside the catalogued range 1..10")
    print(f"# {FORMAT_VERSION} verify levels={args.level} suite={args.suite}",
          file=out)
    results, all_ok = _verify.run_suite(levels, args.suite)
    for r in results:
        print(f"{'PASS' if r.ok else 'FAIL'} {r.check_id} {r.detail}", file=out)
    counts = f"{sum(r.ok for r in results)}/{len(results)} checks passed"
    print(f"# {counts}", file=out)
    return 0 if all_ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="cuspbase",
        description="Exact bases and certification for modular form spaces "
                    "on Gamma0(N), N = 1..10.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dims", help="dimension tables for M and S")
    p.add_argument("--level", default="all", help="level 1..10 or 'all'")
    p.add_argument("--weights", default="2..16", help="even weight range LO..HI")

    p = sub.add_parser("basis", help="emit an echelon basis")
    p.add_argument("--level", required=True)
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--space", choices=("cusp", "full"), default="cusp")
    p.add_argument("--prec", type=int, default=None)
    p.add_argument("--format", choices=("text", "jsonl"), default="text")

    p = sub.add_parser("expand", help="expand an eta quotient, expression, "
                                      "or Weierstrass value")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--eta", help='eta quotient as "m:r,m:r"')
    group.add_argument("--expr", help="catalogue expression")
    group.add_argument("--wpa", help="torsion point as a,b,N")
    p.add_argument("--prec", type=int, default=None)

    p = sub.add_parser("verify", help="run the certification suite")
    p.add_argument("--level", default="all", help="level 1..10 or 'all'")
    p.add_argument("--suite", choices=("paper", "structure", "all"),
                   default="all")
    return parser


def main(argv=None, out=None):
    out = out if out is not None else sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "dims": cmd_dims,
        "basis": cmd_basis,
        "expand": cmd_expand,
        "verify": cmd_verify,
    }
    try:
        return handlers[args.command](args, out)
    except (ValueError, ExprSyntaxError, UnknownAtom, UnsupportedLevel,
            OddWeight, FractionalValuation) as exc:
        if isinstance(exc, ExprSyntaxError) and args.command == "expand" \
                and args.expr is not None:
            print(args.expr, file=sys.stderr)
            print(" " * exc.position + "^", file=sys.stderr)
        print(f"cuspbase: error: {exc}", file=sys.stderr)
        return 2
    except CuspbaseError as exc:
        print(f"cuspbase: internal invariant violation: "
              f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
