import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given, settings, strategies as st

from allpay.dist import FiniteDist, dirac, mix, uniform_even, uniform_odd, expectation
from allpay.errors import InvalidParameter, InvalidValuation
from allpay.payoff import BoundKind, allpay_payoff, block, h_lower_bound, h_series, h_value

from helpers import dense, dists


def grid_oracle(x, y, v=None):
    """Outcome-by-outcome enumeration over the dense 0..12 grid."""
    h = F(0)
    pay = F(0)
    for i, j in itertools.product(range(13), repeat=2):
        w = x[i] * y[j]
        if not w:
            continue
        h += w * ((i > j) - (i < j))
        if v is not None:
            pay += w * ((v if i > j else v / 2 if i == j else 0) - i)
    return h, pay


def test_h_examples():
    d = mix([(F(1, 3), dirac(2)), (F(2, 3), uniform_odd(2))])
    assert h_value(d, d) == 0
    assert h_value(dirac(1), dirac(0)) == 1
    assert h_value(dirac(0), uniform_even(1)) == F(-1, 2)
    assert h_value(uniform_odd(2), uniform_even(2)) == 0


def test_allpay_examples():
    assert allpay_payoff(2, dirac(1), dirac(0)) == 1
    assert allpay_payoff(F(7, 3), dirac(0), dirac(0)) == F(7, 6)
    x = mix([(F(2, 3), dirac(1)), (F(1, 3), dirac(3))])
    y = FiniteDist({0: F(3, 4), 2: F(1, 4)})
    # 2x2 outcome grid: (1,0) win 8-1, (1,2) lose -1, (3,0) win 8-3, (3,2) win 8-3
    by_hand = F(2, 3) * F(3, 4) * 7 + F(2, 3) * F(1, 4) * (-1) + F(1, 3) * 5
    assert by_hand == 5
    assert allpay_payoff(8, x, y) == by_hand


def test_allpay_rejects_nonpositive_valuation():
    with pytest.raises(InvalidValuation):
        allpay_payoff(0, dirac(0), dirac(0))


@given(dists, dists)
def test_h_matches_grid_enumeration_and_series(x, y):
    h, _ = grid_oracle(x, y)
    assert h_value(x, y) == h == h_series(x, y)


@given(dists, dists, st.integers(min_value=1, max_value=30))
def test_allpay_matches_grid_enumeration(x, y, v):
    _, pay = grid_oracle(x, y, F(v, 2))
    assert allpay_payoff(F(v, 2), x, y) == pay


@given(dists, dists)
def test_antisymmetry(x, y):
    assert h_value(x, y) == -h_value(y, x)


@given(dists, dists, dists, st.fractions(min_value=0, max_value=1, max_denominator=20))
def test_bilinearity(x1, x2, y, lam):
    mixed = mix([(lam, x1), (1 - lam, x2)])
    assert h_value(mixed, y) == lam * h_value(x1, y) + (1 - lam) * h_value(x2, y)
    v = F(9, 2)
    assert allpay_payoff(v, mixed, y) == lam * allpay_payoff(v, x1, y) + (1 - lam) * allpay_payoff(v, x2, y)


@given(dists)
def test_h_of_zero_bid(y):
    assert h_value(dirac(0), y) == y[0] - 1


def test_bound_examples():
    assert h_lower_bound(BoundKind("UO", 2), uniform_even(2)) == (0, True)
    assert h_lower_bound(BoundKind("UE", 1), dirac(5)) == (-2, False)
    assert h_lower_bound(BoundKind("V", 1, 1), dirac(1)) == (F(2, 3), True)


@pytest.mark.parametrize(
    "args",
    [("UO", 0), ("UE", -1), ("W", 2, 0), ("W", 2, 2), ("UO1", 1), ("V", 2, 3), ("MixUoUo", 1, 0, 2), ("MixUoV", 1, 1, 1),
     ("MixUo1V", 2, 1, F(1, 2)), ("nope", 1)],
)
def test_bound_kind_validation(args):
    with pytest.raises(InvalidParameter):
        BoundKind(*args)


def all_kinds(max_m=4):
    kinds = []
    for m in range(0, max_m + 1):
        kinds.append(BoundKind("UE", m))
        kinds += [BoundKind("MixUeUo", m, 0, a) for a in (0, F(1, 3), 1)]
        if m == 0:
            continue
        kinds.append(BoundKind("UO", m))
        kinds += [BoundKind("MixUoUo", m, 0, a) for a in (0, F(2, 5), 1)]
        top = F(m + 1, 2 * m + 1)
        for j in range(1, m + 1):
            kinds.append(BoundKind("V", m, j))
            kinds += [BoundKind("MixUoV", m, j, a) for a in (0, top / 3, top)]
            kinds += [BoundKind("MixUeV", m, j, a) for a in (0, top / 2, top)]
            kinds += [BoundKind("MixUo1V", m, j, a) for a in (top, (1 + top) / 2, 1)]
        if m >= 2:
            kinds.append(BoundKind("UO1", m))
            kinds += [BoundKind("W", m, j) for j in range(1, m)]
    return kinds


@pytest.mark.parametrize("kind", all_kinds(), ids=lambda k: f"{k.tag}-m{k.m}-j{k.j}-a{k.alpha}")
@settings(max_examples=30, deadline=None)
@given(y=dists)
def test_bound_holds_with_equality_iff_tail_condition(kind, y):
    h = h_value(block(kind), y)
    bound, tight = h_lower_bound(kind, y)
    assert h >= bound
    assert (h == bound) == tight


@pytest.mark.parametrize("kind", [k for k in all_kinds(3) if k.tag.startswith("Mix")], ids=str)
@settings(max_examples=25, deadline=None)
@given(y=dists)
def test_mixture_closed_forms_equal_componentwise_sums(kind, y):
    # the mixture formulas are the weighted sums of the single-block bounds
    total = F(0)
    for w, d, _ in kind.components():
        single = single_kind_for(d, kind)
        total += w * h_lower_bound(single, y)[0]
    assert h_lower_bound(kind, y)[0] == total


def single_kind_for(d, kind):
    m, j = kind.m, kind.j
    specs = [("UO", m), ("UE", m), ("UO", m + 1), ("V", m, j or 1)]
    for spec in specs:
        try:
            c = BoundKind(*spec)
        except InvalidParameter:
            continue
        if block(c) == d:
            return c
    raise AssertionError(f"no single block matches {d}")
