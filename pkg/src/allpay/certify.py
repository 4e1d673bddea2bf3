"""Exact equilibrium certification by exhaustive deviation enumeration.

All-pay: payoffs are linear in the mixed strategy, so it suffices to compare
against pure bids. Bids above ``max(opponent) + 1`` win surely at a higher
cost than ``max(opponent) + 1`` and are never needed.

General Lotto: deviations must keep the mean fixed. H is linear, so the best
deviation is an extreme point of the fixed-mean set, i.e. a one-point or
two-point distribution.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .dist import FiniteDist, as_rational, dirac, expectation, format_rational
from .equilibria import EqParams, Valuations, build_equilibrium
from .errors import InvalidValuation
from .payoff import allpay_payoff, h_value


@dataclass(frozen=True)
class Certificate:
    is_equilibrium: bool
    max_gain_p1: Fraction
    max_gain_p2: Fraction
    best_deviation_p1: Union[int, FiniteDist, None]
    best_deviation_p2: Union[int, FiniteDist, None]
    truncation_bound: int

    def to_json(self) -> dict:
        def dev(d):
            return d.to_json() if isinstance(d, FiniteDist) else d

        return {
            "is_equilibrium": self.is_equilibrium,
            "max_gain_p1": format_rational(self.max_gain_p1),
            "max_gain_p2": format_rational(self.max_gain_p2),
            "best_deviation_p1": dev(self.best_deviation_p1),
            "best_deviation_p2": dev(self.best_deviation_p2),
            "truncation_bound": self.truncation_bound,
        }

    def swapped(self) -> "Certificate":
        return Certificate(
            self.is_equilibrium,
            self.max_gain_p2,
            self.max_gain_p1,
            self.best_deviation_p2,
            self.best_deviation_p1,
            self.truncation_bound,
        )


def pure_payoffs(v, opponent: FiniteDist, top: int) -> list[Fraction]:
    """Payoff of each pure bid 0..top against ``opponent``."""
    out = []
    below = Fraction(0)
    for k in range(top + 1):
        at = opponent[k]
        out.append(v * below + v / 2 * at - k)
        below += at
    return out


def best_response(v, opponent: FiniteDist) -> tuple[Fraction, frozenset]:
    v = as_rational(v)
    if v <= 0:
        raise InvalidValuation(f"valuation must be positive, got {v}")
    payoffs = pure_payoffs(v, opponent, opponent.max_support + 1)
    best = max(payoffs)
    return best, frozenset(k for k, p in enumerate(payoffs) if p == best)


def _side(v: Fraction, own: FiniteDist, opp: FiniteDist) -> tuple[Fraction, int]:
    value, argmax = best_response(v, opp)
    gain = value - allpay_payoff(v, own, opp)
    supported = set(own.support) <= argmax
    if supported != (gain == 0):
        raise RuntimeError("support test and payoff gain disagree")
    return gain, min(argmax)


def certify_allpay(v: Valuations, x: FiniteDist, y: FiniteDist) -> Certificate:
    g1, d1 = _side(v.v1, x, y)
    g2, d2 = _side(v.v2, y, x)
    bound = max(x.max_support, y.max_support) + 1
    return Certificate(g1 == 0 and g2 == 0, g1, g2, d1, d2, bound)


def _two_point(i: int, j: int, mean: Fraction) -> FiniteDist:
    return FiniteDist({i: (j - mean) / (j - i), j: (mean - i) / (j - i)})


def lotto_best_deviation(mean: Fraction, opp: FiniteDist, top: int) -> tuple[Fraction, FiniteDist]:
    """Best H against ``opp`` over distributions with the given mean and support <= top."""
    h = [h_value(dirac(k), opp) for k in range(top + 1)]
    best: Optional[Fraction] = None
    arg = None
    if mean.denominator == 1 and mean <= top:
        best, arg = h[int(mean)], (int(mean),)
    lo_max = -(-mean.numerator // mean.denominator) - 1  # ceil(mean) - 1
    for i in range(0, min(lo_max, top) + 1):
        for j in range(int(mean) + 1, top + 1):
            pj = (mean - i) / (j - i)
            val = (1 - pj) * h[i] + pj * h[j]
            if best is None or val > best:
                best, arg = val, (i, j)
    if len(arg) == 1:
        return best, dirac(arg[0])
    return best, _two_point(arg[0], arg[1], mean)


def certify_lotto(x: FiniteDist, y: FiniteDist) -> Certificate:
    top = max(x.max_support, y.max_support) + 2
    b1, d1 = lotto_best_deviation(expectation(x), y, top)
    b2, d2 = lotto_best_deviation(expectation(y), x, top)
    g1 = b1 - h_value(x, y)
    g2 = b2 - h_value(y, x)
    return Certificate(g1 == 0 and g2 == 0, g1, g2, d1, d2, top)


def cross_check(v: Valuations, pa: EqParams, pb: EqParams) -> bool:
    """Swap strategies between two equilibria and certify both hybrids."""
    a = build_equilibrium(v, pa)
    b = build_equilibrium(v, pb)
    return certify_allpay(v, a.x, b.y).is_equilibrium and certify_allpay(v, b.x, a.y).is_equilibrium
