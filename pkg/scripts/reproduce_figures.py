"""Write comparative-statics sweeps of player 2's payoff, one CSV per v1, ready to plot.

One CSV per v1: two non-even valuations (fractional part of v1/2 below and
above 1/2) and one even valuation, where player 2's payoff is an interval.
"""

import argparse
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from allpay.dist import as_rational
from allpay.statics import rows_to_csv, sweep


@dataclass
class FigureConfig:
    v1_values: list = field(default_factory=lambda: [Fraction(23, 5), Fraction(27, 5), Fraction(4)])
    v2_min: Fraction = Fraction(1, 10)
    v2_max: Fraction = Fraction(10)
    step: Fraction = Fraction(1, 10)
    out_dir: Path = Path("figures")
    decimal: int | None = None


def run(cfg: FigureConfig) -> list[Path]:
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    written = []
    for v1 in cfg.v1_values:
        rows = sweep(v1, cfg.v2_min, cfg.v2_max, cfg.step)
        name = f"statics_v1_{str(v1).replace('/', '_')}.csv"
        path = cfg.out_dir / name
        path.write_text(rows_to_csv(rows, cfg.decimal))
        intervals = sum(r.disc_p2_min != r.disc_p2_max for r in rows)
        print(f"{path}: {len(rows)} rows, {intervals} with a payoff interval")
        written.append(path)
    return written


def main():
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--v1", nargs="+", type=as_rational, help="player 1 valuations (default 23/5 27/5 4)")
    p.add_argument("--v2-min", type=as_rational, default=Fraction(1, 10))
    p.add_argument("--v2-max", type=as_rational, default=Fraction(10))
    p.add_argument("--step", type=as_rational, default=Fraction(1, 10))
    p.add_argument("--out", type=Path, default=Path("figures"))
    p.add_argument("--decimal", type=int)
    args = p.parse_args()
    cfg = FigureConfig(v2_min=args.v2_min, v2_max=args.v2_max, step=args.step, out_dir=args.out, decimal=args.decimal)
    if args.v1:
        cfg.v1_values = args.v1
    run(cfg)


if __name__ == "__main__":
    main()
