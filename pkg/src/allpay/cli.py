"""Command-line front end: ``allpay {solve,verify,sweep,dist,h}``.

Machine-readable output goes to stdout, notices and errors to stderr.
Exit codes: 0 ok, 1 usage or parse error, 2 ``verify`` found a profitable
deviation.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import dist as _dist
from .certify import certify_allpay, certify_lotto
from .dist import FiniteDist, as_rational, format_rational
from .equilibria import (
    Valuations,
    build_equilibrium,
    canonical_params,
    classify,
    param_space,
    params_from_json,
    payoff_range,
)
from .errors import AllPayError
from .payoff import h_value
from .statics import rows_to_csv, sweep


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _rational_arg(text: str):
    try:
        return as_rational(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _read_dist(path: str) -> FiniteDist:
    try:
        return FiniteDist.from_json(json.loads(Path(path).read_text()))
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read distribution from {path}: {exc}") from None


def _ordered(v1, v2, err) -> tuple[Valuations, bool]:
    if v1 < v2:
        print(f"notice: v1={v1} < v2={v2}; swapping roles so that player 1 is the stronger player", file=err)
        return Valuations(v2, v1), True
    return Valuations(v1, v2), False


def _pair(lo, hi):
    return [format_rational(lo), format_rational(hi)]


def cmd_solve(args, out, err) -> int:
    v, _ = _ordered(args.v1, args.v2, err)
    case = classify(v)
    if args.params is None:
        params = canonical_params(v)
    else:
        text = args.params
        if text.startswith("@"):
            text = Path(text[1:]).read_text()
        try:
            params = params_from_json(case, json.loads(text))
        except json.JSONDecodeError as exc:
            raise UsageError(f"--params is not valid JSON: {exc}") from None
    doc = build_equilibrium(v, params).to_json()
    r1, r2 = payoff_range(v)
    doc["payoff_range"] = {"p1": _pair(*r1), "p2": _pair(*r2)}
    if args.all_ranges:
        space = param_space(v)
        doc["param_space"] = {
            "intervals": {k: str(iv) for k, iv in space.intervals.items()},
            "weights": list(space.weights),
            "constraints": list(space.constraints),
        }
    print(_dump(doc), file=out)
    return 0


def cmd_verify(args, out, err) -> int:
    x, y = _read_dist(args.x_file), _read_dist(args.y_file)
    if args.lotto:
        cert = certify_lotto(x, y)
    else:
        v, swapped = _ordered(args.v1, args.v2, err)
        if swapped:
            cert = certify_allpay(v, y, x).swapped()
        else:
            cert = certify_allpay(v, x, y)
    print(_dump(cert.to_json()), file=out)
    return 0 if cert.is_equilibrium else 2


def cmd_sweep(args, out, err) -> int:
    if args.decimal is not None and args.decimal < 0:
        raise UsageError("--decimal must be nonnegative")
    rows = sweep(args.v1, args.v2_min, args.v2_max, args.step)
    for r in rows:
        if r.roles_swapped:
            print(f"notice: v2={r.v2} > v1={args.v1}; row computed with roles swapped", file=err)
            break
    out.write(rows_to_csv(rows, args.decimal))
    return 0


def cmd_dist(args, out, err) -> int:
    try:
        fn, arity = _dist.BUILDERS[args.builder]
    except KeyError:
        raise UsageError(f"unknown builder {args.builder!r}; choose from {', '.join(_dist.BUILDERS)}") from None
    if len(args.args) != arity:
        raise UsageError(f"{args.builder} takes {arity} integer argument(s)")
    try:
        ints = [int(a) for a in args.args]
    except ValueError:
        raise UsageError("builder arguments must be integers") from None
    print(_dump(fn(*ints).to_json()), file=out)
    return 0


def cmd_h(args, out, err) -> int:
    print(format_rational(h_value(_read_dist(args.x_file), _read_dist(args.y_file))), file=out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="allpay", description="Exact solver for discrete two-player all-pay auctions")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="equilibrium profile and payoff range for a valuation pair")
    p.add_argument("--v1", type=_rational_arg, required=True)
    p.add_argument("--v2", type=_rational_arg, required=True)
    p.add_argument("--params", help="JSON object of case parameters, or @file")
    p.add_argument("--all-ranges", action="store_true", help="also print the free-parameter region")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="certify a profile by exhaustive best response")
    p.add_argument("--v1", type=_rational_arg)
    p.add_argument("--v2", type=_rational_arg)
    p.add_argument("--lotto", action="store_true", help="certify as a General Lotto equilibrium instead")
    p.add_argument("x_file")
    p.add_argument("y_file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="CSV of discrete vs continuous payoffs of player 2")
    p.add_argument("--v1", type=_rational_arg, required=True)
    p.add_argument("--v2-min", type=_rational_arg, required=True)
    p.add_argument("--v2-max", type=_rational_arg, required=True)
    p.add_argument("--step", type=_rational_arg, required=True)
    p.add_argument("--decimal", type=int, help="render k-digit decimals instead of p/q")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("dist", help="print a building-block distribution")
    p.add_argument("builder", help=", ".join(_dist.BUILDERS))
    p.add_argument("args", nargs="*")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("h", help="print H(X, Y) = Pr(X > Y) - Pr(X < Y)")
    p.add_argument("x_file")
    p.add_argument("y_file")
    p.set_defaults(func=cmd_h)
    return parser


def run(argv, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    if args.command == "verify" and not args.lotto and (args.v1 is None or args.v2 is None):
        print("error: verify needs --v1 and --v2 (or --lotto)", file=err)
        return 1
    try:
        return args.func(args, out, err)
    except (UsageError, AllPayError, ValueError) as exc:
        print(f"error: {exc}", file=err)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
