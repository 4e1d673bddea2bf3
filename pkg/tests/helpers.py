from fractions import Fraction as F

from hypothesis import strategies as st

from allpay.dist import FiniteDist

# bid levels 0..12 with small integer weights, normalised exactly
dists = st.lists(st.integers(min_value=0, max_value=6), min_size=13, max_size=13).filter(any).map(
    lambda ws: FiniteDist({k: F(w, sum(ws)) for k, w in enumerate(ws) if w})
)


def dense(d, size=13):
    return [d[k] for k in range(size)]


def perturb(y, eps=F(1, 100)):
    """Move ``eps`` of mass from the lowest support point to one past the top."""
    lo, top = y.min_support, y.max_support + 1
    moved = min(eps, y[lo])
    w = dict(y.items())
    w[lo] -= moved
    w[top] = w.get(top, F(0)) + moved
    return FiniteDist(w)
