"""Certify every sampled equilibrium on a valuation grid and tabulate the result.

For each pair v1 >= v2 the script builds the canonical profile and every
sampled parameter point, certifies each one as an all-pay and as a General
Lotto equilibrium, and prints one CSV line per pair.
"""

import argparse
import csv
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from allpay.certify import certify_allpay, certify_lotto
from allpay.dist import as_rational, format_rational
from allpay.equilibria import Valuations, build_equilibrium, canonical_params, classify, payoff_range, sample_params

DEFAULT_GRID = "1/2 1 3/2 2 5/2 3 10/3 7/2 4 9/2 23/5 5 27/5 6 8"


@dataclass
class GridConfig:
    values: list = field(default_factory=lambda: [Fraction(x) for x in DEFAULT_GRID.split()])
    samples: bool = True


def certify_pair(v: Valuations, samples: bool) -> dict:
    params = [canonical_params(v)] + (sample_params(v) if samples else [])
    allpay_ok = lotto_ok = 0
    for p in params:
        prof = build_equilibrium(v, p)
        allpay_ok += certify_allpay(v, prof.x, prof.y).is_equilibrium
        lotto_ok += certify_lotto(prof.x, prof.y).is_equilibrium
    (lo1, hi1), (lo2, hi2) = payoff_range(v)
    return {
        "v1": format_rational(v.v1),
        "v2": format_rational(v.v2),
        "case": classify(v).value,
        "profiles": len(params),
        "allpay_ok": allpay_ok,
        "lotto_ok": lotto_ok,
        "p1_range": f"[{format_rational(lo1)}, {format_rational(hi1)}]",
        "p2_range": f"[{format_rational(lo2)}, {format_rational(hi2)}]",
    }


def run(cfg: GridConfig) -> bool:
    t0 = time.perf_counter()
    w = None
    ok = True
    for a in cfg.values:
        for b in cfg.values:
            if a < b:
                continue
            row = certify_pair(Valuations(a, b), cfg.samples)
            ok &= row["allpay_ok"] == row["lotto_ok"] == row["profiles"]
            if w is None:
                w = csv.DictWriter(sys.stdout, fieldnames=list(row), lineterminator="\n")
                w.writeheader()
            w.writerow(row)
    print(f"# all certified: {ok}  ({time.perf_counter() - t0:.2f}s)", file=sys.stderr)
    return ok


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--values", nargs="+", type=as_rational, help="valuation grid (default: acceptance grid)")
    p.add_argument("--canonical-only", action="store_true")
    args = p.parse_args()
    cfg = GridConfig(samples=not args.canonical_only)
    if args.values:
        cfg.values = args.values
    sys.exit(0 if run(cfg) else 1)


if __name__ == "__main__":
    main()
