"""Discrete versus continuous payoffs of player 2 as v2 varies with v1 fixed.

When v2 > v1 the equilibrium construction is applied to the role-swapped
pair; the model is symmetric in labels, so player 2 then takes the stronger
player's payoff.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction

from .dist import as_rational, format_rational
from .equilibria import CaseTag, Valuations, classify, payoff_range
from .errors import AllPayError, InvalidValuation

CSV_HEADER = ("v2", "disc_p2_min", "disc_p2_max", "cont_p2", "diff_min", "diff_max", "case", "roles_swapped")


@dataclass(frozen=True)
class SweepRow:
    v2: Fraction
    disc_p2_min: Fraction
    disc_p2_max: Fraction
    cont_p2: Fraction
    diff_min: Fraction
    diff_max: Fraction
    case: CaseTag
    roles_swapped: bool


def _positive(*vals):
    out = [as_rational(v) for v in vals]
    if any(v <= 0 for v in out):
        raise InvalidValuation(f"valuations must be positive, got {', '.join(map(str, out))}")
    return out


def continuous_payoffs(v1, v2) -> tuple[Fraction, Fraction]:
    """Equilibrium payoffs with a continuum of bids: the stronger gets the gap."""
    v1, v2 = _positive(v1, v2)
    if v1 >= v2:
        return v1 - v2, Fraction(0)
    return Fraction(0), v2 - v1


def discrete_p2_range(v1, v2) -> tuple[tuple[Fraction, Fraction], CaseTag, bool]:
    """Player 2's equilibrium payoff range, governing case and swap flag."""
    v1, v2 = _positive(v1, v2)
    if v2 > v1:
        v = Valuations(v2, v1)
        (p_lo, p_hi), _ = payoff_range(v)
        return (p_lo, p_hi), classify(v), True
    v = Valuations(v1, v2)
    _, (p_lo, p_hi) = payoff_range(v)
    return (p_lo, p_hi), classify(v), False


def is_even_integer(q: Fraction) -> bool:
    return q.denominator == 1 and q.numerator % 2 == 0


def closed_form_difference(v1, v2) -> Fraction:
    """Piecewise discrete-minus-continuous payoff of player 2 for v1 not an even integer."""
    v1, v2 = _positive(v1, v2)
    if is_even_integer(v1):
        raise AllPayError("closed form applies only when v1 is not an even integer")
    lo, hi = math.floor(v1 / 2), math.ceil(v1 / 2)
    if v2 <= 2 * lo:
        return Fraction(0)
    if v2 <= v1:
        return v2 / 2 - math.floor(v2 / 2)
    if v2 <= 2 * hi:
        return v1 - lo - v2 / 2
    return 2 * (v1 / 2 - lo - Fraction(1, 2))


def payoff_difference(v1, v2) -> tuple[Fraction, Fraction]:
    """(min, max) of player 2's discrete payoff minus the continuous one.

    Degenerate whenever the discrete payoff is unique. For v1 not an even
    integer the result is checked against :func:`closed_form_difference`.
    """
    (lo, hi), _, _ = discrete_p2_range(v1, v2)
    cont = continuous_payoffs(v1, v2)[1]
    diff = (lo - cont, hi - cont)
    v1 = as_rational(v1)
    if not is_even_integer(v1):
        closed = closed_form_difference(v1, v2)
        if diff != (closed, closed):
            raise RuntimeError(f"equilibrium payoffs give {diff}, closed form gives {closed} at v1={v1}, v2={v2}")
    return diff


def sweep_row(v1, v2) -> SweepRow:
    (lo, hi), case, swapped = discrete_p2_range(v1, v2)
    cont = continuous_payoffs(v1, v2)[1]
    payoff_difference(v1, v2)
    return SweepRow(as_rational(v2), lo, hi, cont, lo - cont, hi - cont, case, swapped)


def sweep(v1, v2_min, v2_max, step) -> list[SweepRow]:
    v1 = as_rational(v1)
    v2_min, v2_max, step = (as_rational(q) for q in (v2_min, v2_max, step))
    if v1 <= 0 or v2_min <= 0 or v2_max < v2_min or step <= 0:
        raise AllPayError("sweep needs v1 > 0, 0 < v2_min <= v2_max and step > 0")
    rows = []
    v2 = v2_min
    while v2 <= v2_max:
        rows.append(sweep_row(v1, v2))
        v2 += step
    return rows


def _fmt(q: Fraction, decimal: int | None) -> str:
    if decimal is None:
        return format_rational(q)
    return f"{float(q):.{decimal}f}"


def rows_to_csv(rows: list[SweepRow], decimal: int | None = None) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in rows:
        w.writerow(
            [_fmt(r.v2, decimal)]
            + [_fmt(q, decimal) for q in (r.disc_p2_min, r.disc_p2_max, r.cont_p2, r.diff_min, r.diff_max)]
            + [r.case.value, str(r.roles_swapped).lower()]
        )
    return buf.getvalue()
