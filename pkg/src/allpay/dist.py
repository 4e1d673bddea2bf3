"""Exact finitely supported distributions on the nonnegative integers.

Probabilities are :class:`fractions.Fraction` throughout. The builders at the
bottom of the module produce the uniform-on-odd/even blocks and their
moving-average distortions that make up every equilibrium strategy.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import InvalidMixture, InvalidParameter

Rational = Fraction
RationalLike = Union[Fraction, int, str]


def as_rational(value: RationalLike) -> Fraction:
    """Convert ``value`` exactly; strings may be ``p/q`` or finite decimals."""
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass a string such as '4.6'")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"cannot parse {value!r} as an exact rational") from exc


def format_rational(q: Fraction) -> str:
    return str(Fraction(q))


class FiniteDist:
    """Probability distribution with finite support on {0, 1, 2, ...}.

    Zero weights are discarded on construction, so two distributions compare
    equal exactly when they assign the same probability to every integer.
    """

    __slots__ = ("_items", "_index")

    def __init__(self, weights: Mapping[int, RationalLike] | Iterable[tuple[int, RationalLike]]):
        pairs = weights.items() if isinstance(weights, Mapping) else weights
        acc: dict[int, Fraction] = {}
        for k, p in pairs:
            if isinstance(k, bool) or not isinstance(k, int) or k < 0:
                raise InvalidParameter(f"bid levels must be nonnegative integers, got {k!r}")
            p = as_rational(p)
            if p < 0:
                raise InvalidParameter(f"negative probability {p} at {k}")
            acc[k] = acc.get(k, Fraction(0)) + p
        items = tuple(sorted((k, p) for k, p in acc.items() if p != 0))
        total = sum((p for _, p in items), Fraction(0))
        if total != 1:
            raise InvalidParameter(f"probabilities sum to {total}, not 1")
        self._items = items
        self._index = dict(items)

    def __getitem__(self, k: int) -> Fraction:
        return self._index.get(k, Fraction(0))

    def __iter__(self):
        return iter(self._items)

    def __len__(self) -> int:
        return len(self._items)

    def __eq__(self, other):
        if not isinstance(other, FiniteDist):
            return NotImplemented
        return self._items == other._items

    def __hash__(self):
        return hash(self._items)

    def __repr__(self):
        body = ", ".join(f"{k}: {p}" for k, p in self._items)
        return f"FiniteDist({{{body}}})"

    def items(self) -> tuple[tuple[int, Fraction], ...]:
        return self._items

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self._items)

    @property
    def max_support(self) -> int:
        return self._items[-1][0]

    @property
    def min_support(self) -> int:
        return self._items[0][0]

    def to_json(self) -> list:
        return [[k, format_rational(p)] for k, p in self._items]

    @classmethod
    def from_json(cls, data) -> "FiniteDist":
        """Inverse of :meth:`to_json`; also accepts a ``{"k": "p/q"}`` object."""
        if isinstance(data, Mapping):
            pairs = [(int(k), v) for k, v in data.items()]
        else:
            pairs = []
            for entry in data:
                if len(entry) != 2:
                    raise InvalidParameter(f"expected [k, p] pairs, got {entry!r}")
                k, p = entry
                if isinstance(k, str):
                    k = int(k)
                pairs.append((k, p))
        return cls(pairs)


def expectation(d: FiniteDist) -> Fraction:
    return sum((k * p for k, p in d), Fraction(0))


def tail_prob(d: FiniteDist, k: int) -> Fraction:
    """Pr(d >= k)."""
    return sum((p for j, p in d if j >= k), Fraction(0))


def dirac(k: int) -> FiniteDist:
    return FiniteDist({k: 1})


def _uniform(points: Iterable[int]) -> FiniteDist:
    points = list(points)
    w = Fraction(1, len(points))
    return FiniteDist((k, w) for k in points)


def uniform_odd(m: int) -> FiniteDist:
    """Uniform on {1, 3, ..., 2m-1}."""
    if m < 1:
        raise InvalidParameter(f"uniform_odd needs m >= 1, got {m}")
    return _uniform(range(1, 2 * m, 2))


def uniform_even(m: int) -> FiniteDist:
    """Uniform on {0, 2, ..., 2m}."""
    if m < 0:
        raise InvalidParameter(f"uniform_even needs m >= 0, got {m}")
    return _uniform(range(0, 2 * m + 1, 2))


def uniform_odd_shift(m: int) -> FiniteDist:
    """Uniform on {2, 4, ..., 2m-2}; the odd grid of uniform_odd(m) moved up by one
    with the top point folded away. Empty (hence rejected) for m = 1."""
    if m < 2:
        raise InvalidParameter(f"uniform_odd_shift needs m >= 2, got {m}")
    return _uniform(range(2, 2 * m - 1, 2))


def w_dist(j: int, m: int) -> FiniteDist:
    if m < 2 or not 1 <= j <= m - 1:
        raise InvalidParameter(f"w_dist needs m >= 2 and 1 <= j <= m-1, got j={j}, m={m}")
    half, full = Fraction(1, 2 * m), Fraction(1, m)
    w = {0: half, 2 * j: half}
    for i in range(1, j):
        w[2 * i] = full
    for i in range(j + 1, m + 1):
        w[2 * i - 1] = full
    return FiniteDist(w)


def v_dist(j: int, m: int) -> FiniteDist:
    if m < 1 or not 1 <= j <= m:
        raise InvalidParameter(f"v_dist needs m >= 1 and 1 <= j <= m, got j={j}, m={m}")
    one, two = Fraction(1, 2 * m + 1), Fraction(2, 2 * m + 1)
    w = {2 * j - 1: one}
    for i in range(1, j):
        w[2 * i - 1] = two
    for i in range(j, m + 1):
        w[2 * i] = two
    return FiniteDist(w)


def mix(components: Iterable[tuple[RationalLike, FiniteDist]]) -> FiniteDist:
    """Convex combination; weights must be nonnegative and sum to exactly 1."""
    components = [(as_rational(w), d) for w, d in components]
    if not components:
        raise InvalidMixture("empty mixture")
    if any(w < 0 for w, _ in components):
        raise InvalidMixture("negative mixture weight")
    total = sum((w for w, _ in components), Fraction(0))
    if total != 1:
        raise InvalidMixture(f"mixture weights sum to {total}, not 1")
    acc: dict[int, Fraction] = {}
    for w, d in components:
        if w == 0:
            continue
        for k, p in d:
            acc[k] = acc.get(k, Fraction(0)) + w * p
    return FiniteDist(acc)


BUILDERS = {
    "dirac": (dirac, 1),
    "uniform-odd": (uniform_odd, 1),
    "uniform-even": (uniform_even, 1),
    "uniform-odd-shift": (uniform_odd_shift, 1),
    "w": (w_dist, 2),
    "v": (v_dist, 2),
}
