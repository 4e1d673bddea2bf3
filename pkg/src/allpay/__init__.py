"""Exact equilibria of discrete two-player all-pay auctions."""

from .dist import (
    FiniteDist,
    dirac,
    expectation,
    mix,
    tail_prob,
    uniform_even,
    uniform_odd,
    uniform_odd_shift,
    v_dist,
    w_dist,
)
from .payoff import BoundKind, allpay_payoff, h_lower_bound, h_value
from .equilibria import (
    CaseTag,
    Valuations,
    build_equilibrium,
    canonical_params,
    classify,
    param_space,
    payoff_range,
    predicted_payoffs,
)
from .certify import Certificate, best_response, certify_allpay, certify_lotto, cross_check
from .statics import continuous_payoffs, payoff_difference, sweep

__version__ = "0.1.0"
