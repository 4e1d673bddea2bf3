import math
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from allpay.equilibria import CaseTag, Valuations, payoff_range
from allpay.errors import AllPayError, InvalidValuation
from allpay.statics import (
    CSV_HEADER,
    closed_form_difference,
    continuous_payoffs,
    payoff_difference,
    rows_to_csv,
    sweep,
)


def branch(v1, v2):
    """Which of the four piecewise pieces applies, with <= on the left."""
    lo, hi = math.floor(v1 / 2), math.ceil(v1 / 2)
    if v2 <= 2 * lo:
        return 0
    if v2 <= v1:
        return 1
    if v2 <= 2 * hi:
        return 2
    return 3


def test_continuous_examples():
    assert continuous_payoffs(8, 3) == (5, 0)
    assert continuous_payoffs(3, 3) == (0, 0)
    assert continuous_payoffs(3, 5) == (0, 2)
    with pytest.raises(InvalidValuation):
        continuous_payoffs(0, 1)


def test_difference_examples():
    assert payoff_difference(F(23, 5), F(9, 2)) == (F(1, 4), F(1, 4))
    assert payoff_difference(F(23, 5), 4) == (0, 0)
    assert payoff_difference(F(27, 5), 7) == (F(2, 5), F(2, 5))
    assert closed_form_difference(F(27, 5), 7) == F(2, 5)
    with pytest.raises(InvalidValuation):
        payoff_difference(F(3), F(-1))


def test_closed_form_refuses_even_v1():
    with pytest.raises(AllPayError):
        closed_form_difference(4, 3)


def test_sweep_examples():
    rows = sweep(F(23, 5), 4, F(23, 5), F(1, 2))
    assert [r.v2 for r in rows] == [4, F(9, 2)]
    rows = [r for v2 in (4, F(9, 2), F(23, 5)) for r in sweep(F(23, 5), v2, v2, 1)]
    assert [r.diff_min for r in rows] == [0, F(1, 4), F(3, 10)]
    assert all(r.diff_min == r.diff_max for r in rows)
    (row,) = sweep(4, 5, 5, 1)
    assert row.disc_p2_min < row.disc_p2_max and row.roles_swapped
    assert (row.disc_p2_min, row.disc_p2_max, row.cont_p2) == (F(1, 2), 2, 1)


def test_sweep_includes_endpoint_when_hit():
    rows = sweep(3, F(1, 3), 3, F(1, 3))
    assert len(rows) == 9 and rows[-1].v2 == 3


@pytest.mark.parametrize("args", [(0, 1, 2, 1), (3, 2, 1, 1), (3, 1, 2, 0), (3, 0, 2, 1)])
def test_sweep_rejects_bad_ranges(args):
    with pytest.raises(AllPayError):
        sweep(*args)


def noneven_v1():
    return st.fractions(min_value=F(1, 5), max_value=12, max_denominator=9).filter(
        lambda q: not (q.denominator == 1 and q.numerator % 2 == 0)
    )


@given(noneven_v1(), st.fractions(min_value=F(1, 7), max_value=16, max_denominator=11))
def test_equilibrium_payoffs_match_closed_form(v1, v2):
    # payoff_difference raises if the two computations disagree
    lo, hi = payoff_difference(v1, v2)
    assert lo == hi == closed_form_difference(v1, v2)


@pytest.mark.parametrize("v1", [F(1), F(3), F(23, 5), F(27, 5), F(7), F(10, 3), F(11, 2)])
def test_branch_boundaries_are_exact(v1):
    lo, hi = math.floor(v1 / 2), math.ceil(v1 / 2)
    for v2 in {F(2 * lo), v1, F(2 * hi)} - {0}:
        d = payoff_difference(v1, v2)
        assert d == (closed_form_difference(v1, v2),) * 2


@pytest.mark.parametrize("v1", [2, 4, 6, 8])
def test_even_v1_difference_vanishes_below_v1_minus_two(v1):
    for k in range(1, 4 * (v1 - 2) + 1):
        v2 = F(k, 4)
        assert payoff_difference(v1, v2) == (0, 0), v2


def test_even_v1_interval_near_the_top():
    # for v1 - 2 < v2 <= v1 player 2 has a continuum of equilibrium payoffs
    assert payoff_difference(4, F(7, 2)) == (0, F(3, 4))
    assert payoff_difference(4, 4) == (0, 1)


@pytest.mark.parametrize("v1", [F(23, 5), F(27, 5), F(7)])
def test_rows_are_monotone_within_each_branch(v1):
    rows = sweep(v1, F(1, 10), 2 * v1, F(1, 10))
    pieces = {}
    for r in rows:
        pieces.setdefault(branch(v1, r.v2), []).append(r.diff_min)
    assert set(pieces) == {0, 1, 2, 3}
    for b, diffs in pieces.items():
        if b == 1:
            continue  # saw-tooth in v2, affine only between integers of v2/2
        steps = [y - x for x, y in zip(diffs, diffs[1:])]
        assert all(s >= 0 for s in steps) or all(s <= 0 for s in steps), b


def test_row_invariants_and_swap_flag():
    for r in sweep(4, F(1, 2), 8, F(1, 4)):
        assert r.disc_p2_min <= r.disc_p2_max
        assert r.diff_min == r.disc_p2_min - r.cont_p2
        assert r.diff_max == r.disc_p2_max - r.cont_p2
        assert r.roles_swapped == (r.v2 > 4)
        if r.roles_swapped:
            v = Valuations(r.v2, F(4))
            assert (r.disc_p2_min, r.disc_p2_max) == payoff_range(v)[0]


def test_csv_format():
    text = rows_to_csv(sweep(F(23, 5), 4, F(9, 2), F(1, 2)))
    lines = text.splitlines()
    assert lines[0] == ",".join(CSV_HEADER)
    assert lines[1] == "4,0,0,0,0,0,Int_V2Ge4,false"
    assert lines[2] == "9/2,1/4,1/4,0,1/4,1/4,NonInt_EqFloor,false"
    swapped = rows_to_csv(sweep(F(23, 5), 5, 5, 1)).splitlines()[1]
    assert swapped.endswith(",true")


def test_csv_decimal_rendering_is_display_only():
    rows = sweep(F(27, 5), 7, 7, 1)
    assert rows_to_csv(rows, 3).splitlines()[1] == "7.000,2.000,2.000,1.600,0.400,0.400,NonInt_Far,true"
    assert rows[0].diff_min == F(2, 5)


def test_case_column_uses_swapped_pair():
    (row,) = sweep(1, 3, 3, 1)
    assert row.case is CaseTag.SMALL_GT  # classified as (3, 1)
