"""All-pay payoffs, the General Lotto functional H, and lower bounds on H.

``H(X, Y) = Pr(X > Y) - Pr(X < Y)``. The all-pay payoff of a player with
valuation ``v`` is an affine function of H:

    P(X, Y) = (v/2) * (H(X, Y) - (2 E(X) / v - 1))

which is why equilibria of the auction are read off the Lotto game.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .dist import (
    FiniteDist,
    as_rational,
    expectation,
    tail_prob,
    uniform_even,
    uniform_odd,
    uniform_odd_shift,
    v_dist,
    w_dist,
    mix,
)
from .errors import InvalidParameter, InvalidValuation


def _win_tie_lose(x: FiniteDist, y: FiniteDist) -> tuple[Fraction, Fraction, Fraction]:
    win = tie = lose = Fraction(0)
    for i, p in x:
        for j, q in y:
            if i > j:
                win += p * q
            elif i == j:
                tie += p * q
            else:
                lose += p * q
    return win, tie, lose


def h_series(x: FiniteDist, y: FiniteDist) -> Fraction:
    """H via ``1 - sum_i Pr(X=i) (Pr(Y>=i) + Pr(Y>=i+1))``."""
    s = Fraction(0)
    for i, p in x:
        s += p * (tail_prob(y, i) + tail_prob(y, i + 1))
    return 1 - s


def h_value(x: FiniteDist, y: FiniteDist) -> Fraction:
    win, _, lose = _win_tie_lose(x, y)
    h = win - lose
    if h != h_series(x, y):
        raise RuntimeError(f"H mismatch between double sum and tail series for {x!r}, {y!r}")
    return h


def allpay_payoff(v, x: FiniteDist, y: FiniteDist) -> Fraction:
    """Expected payoff of the player with valuation ``v`` bidding ``x`` against ``y``."""
    v = as_rational(v)
    if v <= 0:
        raise InvalidValuation(f"valuation must be positive, got {v}")
    win, tie, _ = _win_tie_lose(x, y)
    ex = expectation(x)
    payoff = v * win + v / 2 * tie - ex
    via_h = v / 2 * ((win - (1 - win - tie)) - (2 * ex / v - 1))
    if payoff != via_h:
        raise RuntimeError("payoff disagrees with its H representation")
    return payoff


# Lower bounds on H(block, Y) ------------------------------------------------

KINDS = ("UO", "UE", "W", "UO1", "V", "MixUoUo", "MixUeUo", "MixUoV", "MixUeV", "MixUo1V")


@dataclass(frozen=True)
class BoundKind:
    """Which building block sits in the first argument of H.

    ``m`` and ``j`` index the block as in the distribution builders; ``alpha``
    is the mixing weight for the two-component kinds.
    """

    tag: str
    m: int
    j: int = 0
    alpha: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_rational(self.alpha))
        if self.tag not in KINDS:
            raise InvalidParameter(f"unknown bound kind {self.tag!r}")
        lo, hi = self.alpha_range()
        if not lo <= self.alpha <= hi:
            raise InvalidParameter(f"{self.tag}: alpha={self.alpha} outside [{lo}, {hi}]")
        # builds the block once to validate (j, m)
        try:
            self.components()
        except InvalidParameter as exc:
            raise InvalidParameter(f"{self.tag}: {exc}") from None

    def alpha_range(self) -> tuple[Fraction, Fraction]:
        m = self.m
        if self.tag in ("MixUoV", "MixUeV"):
            return Fraction(0), Fraction(m + 1, 2 * m + 1) if m >= 1 else Fraction(0)
        if self.tag == "MixUo1V":
            return (Fraction(m + 1, 2 * m + 1) if m >= 1 else Fraction(1)), Fraction(1)
        if self.tag in ("MixUoUo", "MixUeUo"):
            return Fraction(0), Fraction(1)
        return Fraction(0), Fraction(0)

    def components(self) -> list[tuple[Fraction, FiniteDist, int]]:
        """(weight, block, tail threshold t) triples; bound is tight for that
        block iff Pr(Y >= t) = 0."""
        m, j, a = self.m, self.j, self.alpha
        t = self.tag
        if t == "UO":
            return [(Fraction(1), uniform_odd(m), 2 * m + 1)]
        if t == "UE":
            return [(Fraction(1), uniform_even(m), 2 * m + 2)]
        if t == "W":
            return [(Fraction(1), w_dist(j, m), 2 * m + 1)]
        if t == "UO1":
            return [(Fraction(1), uniform_odd_shift(m), 2 * m)]
        if t == "V":
            return [(Fraction(1), v_dist(j, m), 2 * m + 2)]
        if t == "MixUoUo":
            return [(1 - a, uniform_odd(m), 2 * m + 1), (a, uniform_odd(m + 1), 2 * m + 3)]
        if t == "MixUeUo":
            return [(1 - a, uniform_even(m), 2 * m + 2), (a, uniform_odd(m + 1), 2 * m + 3)]
        delta = Fraction(2 * m + 1, m + 1)
        if t == "MixUoV":
            return [(a * delta, v_dist(j, m), 2 * m + 2), (1 - a * delta, uniform_odd(m), 2 * m + 1)]
        if t == "MixUeV":
            return [(a * delta, v_dist(j, m), 2 * m + 2), (1 - a * delta, uniform_even(m), 2 * m + 2)]
        sigma = Fraction(2 * m + 1, m) if m >= 1 else None
        if sigma is None:
            raise InvalidParameter("MixUo1V needs m >= 1")
        w = (1 - a) * sigma
        return [(w, v_dist(j, m), 2 * m + 2), (1 - w, uniform_odd(m + 1), 2 * m + 3)]


def block(kind: BoundKind) -> FiniteDist:
    return mix((w, d) for w, d, _ in kind.components())


def _bound_formula(kind: BoundKind, y: FiniteDist) -> Fraction:
    m, j, a = kind.m, kind.j, kind.alpha
    e = expectation(y)
    p = y.__getitem__
    base = 1 - e * (Fraction(1, m + 1) + (1 - a) / (m * (m + 1))) if m >= 1 else None
    t = kind.tag
    if t == "UO":
        return 1 - e / m
    if t == "UE":
        return 1 - (e + 1) / (m + 1)
    if t == "W":
        return 1 - e / m + (p(2 * j) - p(0)) / (2 * m)
    if t == "UO1":
        return 1 - (e - 1) / (m - 1) - p(0) / (m - 1)
    if t == "V":
        return 1 - 2 * e / (2 * m + 1) + p(2 * j - 1) / (2 * m + 1)
    if t == "MixUoUo":
        return base
    if t == "MixUeUo":
        return 1 - (e + 1) / (m + 1) + a / (m + 1)
    if t == "MixUoV":
        return base + a / (m + 1) * p(2 * j - 1)
    if t == "MixUeV":
        return 1 - (e + 1) / (m + 1) * (1 + a / (m + 1)) + a / (m + 1) * (2 + p(2 * j - 1))
    return base + (1 - a) / m * p(2 * j - 1)


def h_lower_bound(kind: BoundKind, y: FiniteDist) -> tuple[Fraction, bool]:
    """Lower bound on ``h_value(block(kind), y)`` and whether it is attained.

    Tightness comes from the tail conditions, not from comparing values: a
    mixture bound is attained iff every block with positive weight has
    ``Pr(Y >= t) = 0`` for its threshold ``t``.
    """
    bound = _bound_formula(kind, y)
    tight = all(tail_prob(y, t) == 0 for w, _, t in kind.components() if w != 0)
    return bound, tight
