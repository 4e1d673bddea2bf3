"""Equilibrium families of the discrete two-player all-pay auction.

Every valuation pair ``v1 >= v2 > 0`` falls in exactly one :class:`CaseTag`.
Each case has a (possibly trivial) region of free parameters; a point of the
region determines an equilibrium profile ``(X, Y)`` assembled from the
building blocks in :mod:`allpay.dist`.

Notation used below: ``h = v/2``, ``m = floor(v2/2)`` unless noted,
``delta = (2m+1)/(m+1)``, ``sigma = (2m+1)/m``.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field, fields
from enum import Enum
from fractions import Fraction
from typing import Optional, Union

from .dist import (
    FiniteDist,
    as_rational,
    dirac,
    format_rational,
    mix,
    uniform_even,
    uniform_odd,
    uniform_odd_shift,
    v_dist,
    w_dist,
)
from .errors import ConstraintViolation, InvalidValuations


class CaseTag(str, Enum):
    INT_SYM = "Int_Sym"
    INT_V2EQ2 = "Int_V2Eq2"
    INT_V2GE4 = "Int_V2Ge4"
    NONINT_EQFLOOR = "NonInt_EqFloor"
    NONINT_BOUNDARY = "NonInt_Boundary"
    NONINT_FAR = "NonInt_Far"
    SMALL_GT = "Small_Gt"
    SMALL_EQ = "Small_Eq"
    SMALL_LT = "Small_Lt"

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class Valuations:
    v1: Fraction
    v2: Fraction

    def __post_init__(self):
        v1, v2 = as_rational(self.v1), as_rational(self.v2)
        if v2 <= 0:
            raise InvalidValuations(f"valuations must be positive, got v2={v2}")
        if v1 < v2:
            raise InvalidValuations(
                f"v1={v1} < v2={v2}: player 1 must be the stronger player; swap the roles"
            )
        object.__setattr__(self, "v1", v1)
        object.__setattr__(self, "v2", v2)

    @property
    def h1(self) -> Fraction:
        return self.v1 / 2

    @property
    def h2(self) -> Fraction:
        return self.v2 / 2


def _floor(q: Fraction) -> int:
    return math.floor(q)


def _ceil(q: Fraction) -> int:
    return math.ceil(q)


def classify(v: Valuations) -> CaseTag:
    h1, h2 = v.h1, v.h2
    if v.v2 < 2:
        if h1 > 1:
            return CaseTag.SMALL_GT
        return CaseTag.SMALL_EQ if h1 == 1 else CaseTag.SMALL_LT
    if h2.denominator == 1:
        if v.v1 == v.v2:
            return CaseTag.INT_SYM
        return CaseTag.INT_V2EQ2 if v.v2 == 2 else CaseTag.INT_V2GE4
    m = _floor(h2)
    if _floor(h1) == m:
        return CaseTag.NONINT_EQFLOOR
    if h1 == m + 1:
        return CaseTag.NONINT_BOUNDARY
    return CaseTag.NONINT_FAR


# Parameter records ---------------------------------------------------------


def _enc(value):
    if isinstance(value, tuple):
        return [format_rational(x) for x in value]
    return format_rational(value)


class _Params:
    def to_json(self) -> dict:
        return {f.name: _enc(getattr(self, f.name)) for f in fields(self)}

    def __post_init__(self):
        for f in fields(self):
            val = getattr(self, f.name)
            if isinstance(val, (list, tuple)):
                object.__setattr__(self, f.name, tuple(as_rational(x) for x in val))
            else:
                object.__setattr__(self, f.name, as_rational(val))


@dataclass(frozen=True)
class NoParams(_Params):
    """Cases with a unique equilibrium."""


@dataclass(frozen=True)
class SymParams(_Params):
    alpha: Fraction
    beta: Fraction


@dataclass(frozen=True)
class V2Eq2Params(_Params):
    b: Fraction
    lam: Fraction


@dataclass(frozen=True)
class V2Ge4Params(_Params):
    b: Fraction
    lam_o: Fraction
    lam_e: Fraction
    lam_o1: Fraction
    lam_w: tuple = ()


@dataclass(frozen=True)
class BoundaryParams(_Params):
    alpha: Fraction
    lam_o: Fraction
    lam_e: Fraction
    lam_v: tuple = ()
    kappa_v: tuple = ()


@dataclass(frozen=True)
class FarParams(_Params):
    weight_u: Fraction
    weight_v: tuple = ()


@dataclass(frozen=True)
class SmallEqParams(_Params):
    alpha: Fraction


EqParams = Union[NoParams, SymParams, V2Eq2Params, V2Ge4Params, BoundaryParams, FarParams, SmallEqParams]

PARAMS_TYPE = {
    CaseTag.INT_SYM: SymParams,
    CaseTag.INT_V2EQ2: V2Eq2Params,
    CaseTag.INT_V2GE4: V2Ge4Params,
    CaseTag.NONINT_EQFLOOR: NoParams,
    CaseTag.NONINT_BOUNDARY: BoundaryParams,
    CaseTag.NONINT_FAR: FarParams,
    CaseTag.SMALL_GT: NoParams,
    CaseTag.SMALL_EQ: SmallEqParams,
    CaseTag.SMALL_LT: NoParams,
}


def params_from_json(case: CaseTag, data: Optional[dict]) -> EqParams:
    cls = PARAMS_TYPE[CaseTag(case)]
    data = dict(data or {})
    names = {f.name for f in fields(cls)}
    unknown = set(data) - names
    if unknown:
        raise ConstraintViolation(f"unknown parameters for {case}: {sorted(unknown)}")
    missing = names - set(data)
    if missing:
        raise ConstraintViolation(f"missing parameters for {case}: {sorted(missing)}")
    return cls(**data)


# Feasible regions -----------------------------------------------------------


@dataclass(frozen=True)
class Interval:
    lo: Fraction
    hi: Fraction
    lo_open: bool = False
    hi_open: bool = False

    def __contains__(self, x) -> bool:
        above = x > self.lo if self.lo_open else x >= self.lo
        below = x < self.hi if self.hi_open else x <= self.hi
        return above and below

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __str__(self):
        return f"{'(' if self.lo_open else '['}{self.lo}, {self.hi}{')' if self.hi_open else ']'}"


@dataclass
class Polytope:
    """``{x : rows hold with equality, x_i >= lower_i}`` over named coordinates."""

    names: tuple[str, ...]
    rows: list[tuple[str, dict, Fraction]]
    lower: dict = field(default_factory=dict)

    def lower_of(self, name: str) -> Fraction:
        return self.lower.get(name, Fraction(0))

    def violation(self, point: dict) -> Optional[str]:
        for n in self.names:
            lo = self.lower_of(n)
            if point[n] < lo:
                return f"{n} = {point[n]} below its lower bound {lo}"
        for label, coeffs, rhs in self.rows:
            lhs = sum((c * point[n] for n, c in coeffs.items()), Fraction(0))
            if lhs != rhs:
                return f"{label}: left side {lhs} != {rhs}"
        return None

    def vertices(self) -> list[dict]:
        """Basic feasible solutions: every non-basic coordinate at its lower bound."""
        r = len(self.rows)
        found: list[dict] = []
        for basis in itertools.combinations(self.names, r):
            point = {n: self.lower_of(n) for n in self.names}
            sol = _solve(
                [[coeffs.get(n, Fraction(0)) for n in basis] for _, coeffs, _ in self.rows],
                [
                    rhs - sum((c * point[n] for n, c in coeffs.items() if n not in basis), Fraction(0))
                    for _, coeffs, rhs in self.rows
                ],
            )
            if sol is None:
                continue
            point.update(zip(basis, sol))
            if self.violation(point) is None and point not in found:
                found.append(point)
        return found


def _solve(a: list[list[Fraction]], b: list[Fraction]) -> Optional[list[Fraction]]:
    n = len(a)
    m = [row[:] + [rhs] for row, rhs in zip(a, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col] / m[col][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[i][n] / m[i][i] for i in range(n)]


def _centroid(points: list[dict]) -> dict:
    k = len(points)
    return {n: sum((p[n] for p in points), Fraction(0)) / k for n in points[0]}


@dataclass(frozen=True)
class ParamSpace:
    """Free-parameter region of one valuation pair.

    ``intervals`` bounds the scalar parameters; ``weights`` names the convex
    weight coordinates (empty when there are none); ``constraints`` restates
    every equality and floor in words. Weight polytopes for a fixed scalar come
    from :func:`weight_polytope`.
    """

    case: CaseTag
    intervals: dict
    weights: tuple[str, ...] = ()
    constraints: tuple[str, ...] = ()


def _nonint_consts(v: Valuations):
    m = _floor(v.h2)
    alpha_max = _ceil(v.h2) * (v.h2 - m) / v.h2
    delta = Fraction(2 * m + 1, m + 1)
    sigma = Fraction(2 * m + 1, m) if m else None
    return m, alpha_max, delta, sigma


def v2eq2_b_interval(v1: Fraction) -> Interval:
    return Interval(Fraction(0), min(Fraction(1), 4 / v1), lo_open=True)


def v2eq2_lambda_window(v1: Fraction, b: Fraction) -> Interval:
    return Interval(max(Fraction(0), 4 / (b * v1) - 2 / b + 1), min(Fraction(1), 4 / (b * v1) - 1))


def v2ge4_b_interval(v: Valuations) -> Interval:
    m = v.h2
    return Interval(v.v2 * (v.v2 - 2) / (2 * v.v1), min(m, v.v2 * (v.v2 + 2) / (2 * v.v1)))


def v2ge4_lam_o_floor(v: Valuations, b: Fraction) -> Fraction:
    return (v.v2 / (2 * b)) * (v.v2 * (v.v2 + 2) / (2 * v.v1) + b - v.v2)


def boundary_first_branch(v: Valuations, alpha: Fraction) -> bool:
    _, _, delta, _ = _nonint_consts(v)
    return alpha <= 1 / delta


def param_space(v: Valuations) -> ParamSpace:
    case = classify(v)
    unit = Interval(Fraction(0), Fraction(1))
    if case is CaseTag.INT_SYM:
        return ParamSpace(case, {"alpha": unit, "beta": unit})
    if case is CaseTag.INT_V2EQ2:
        return ParamSpace(
            case,
            {"b": v2eq2_b_interval(v.v1)},
            constraints=("max(0, 4/(b v1) - 2/b + 1) <= lam <= min(1, 4/(b v1) - 1)",),
        )
    if case is CaseTag.INT_V2GE4:
        m = int(v.h2)
        names = ("lam_o", "lam_e", "lam_o1") + tuple(f"lam_w{j}" for j in range(1, m))
        return ParamSpace(
            case,
            {"b": v2ge4_b_interval(v)},
            names,
            (
                "weights >= 0 and sum to 1",
                "lam_o1/(m-1) - lam_e/(m+1) = v2^2/(2 v1 b) - 1",
                "lam_o >= (v2/(2b)) (v2 (v2+2)/(2 v1) + b - v2)",
            ),
        )
    if case is CaseTag.NONINT_BOUNDARY:
        m, alpha_max, delta, _ = _nonint_consts(v)
        names = ("lam_o", "lam_e") + tuple(f"lam_v{j}" for j in range(1, m + 1)) + tuple(
            f"kappa_v{j}" for j in range(1, m + 1)
        )
        return ParamSpace(
            case,
            {"alpha": Interval(Fraction(0), alpha_max)},
            names,
            (
                "weights >= 0 and sum to 1",
                f"alpha <= 1/delta = {1 / delta}: lam_e + sum(kappa_v) (1 - alpha delta)/(1 - alpha)"
                " = (alpha_max - alpha)/(1 - alpha)",
                f"alpha > 1/delta: kappa_v = 0 and lam_e = (alpha_max - alpha)/(1 - alpha)",
            ),
        )
    if case is CaseTag.NONINT_FAR:
        m, *_ = _nonint_consts(v)
        return ParamSpace(
            case,
            {},
            ("weight_u",) + tuple(f"weight_v{j}" for j in range(1, m + 1)),
            ("weights >= 0 and sum to 1",),
        )
    if case is CaseTag.SMALL_EQ:
        return ParamSpace(case, {"alpha": unit})
    return ParamSpace(case, {})


def weight_polytope(v: Valuations, scalar: Fraction) -> Polytope:
    """Weight region of the Int_V2Ge4 (scalar = b) or NonInt_Boundary (scalar = alpha) case."""
    case = classify(v)
    space = param_space(v)
    names = space.weights
    simplex = ("weights sum to 1", {n: Fraction(1) for n in names}, Fraction(1))
    if case is CaseTag.INT_V2GE4:
        m = int(v.h2)
        b = scalar
        eq = (
            "lam_o1/(m-1) - lam_e/(m+1) = v2^2/(2 v1 b) - 1",
            {"lam_o1": Fraction(1, m - 1), "lam_e": Fraction(-1, m + 1)},
            v.v2**2 / (2 * v.v1 * b) - 1,
        )
        lower = {"lam_o": max(Fraction(0), v2ge4_lam_o_floor(v, b))}
        return Polytope(names, [simplex, eq], lower)
    if case is CaseTag.NONINT_BOUNDARY:
        m, alpha_max, delta, _ = _nonint_consts(v)
        alpha = scalar
        rhs = (alpha_max - alpha) / (1 - alpha)
        if boundary_first_branch(v, alpha):
            coeffs = {"lam_e": Fraction(1)}
            coeffs.update({f"kappa_v{j}": (1 - alpha * delta) / (1 - alpha) for j in range(1, m + 1)})
            return Polytope(names, [simplex, ("lam_e + sum(kappa_v)(1 - alpha delta)/(1 - alpha) constraint", coeffs, rhs)])
        second = tuple(n for n in names if not n.startswith("kappa"))
        simplex = ("weights sum to 1", {n: Fraction(1) for n in second}, Fraction(1))
        return Polytope(second, [simplex, ("lam_e = (alpha_max - alpha)/(1 - alpha)", {"lam_e": Fraction(1)}, rhs)])
    raise ValueError(f"{case} has no weight polytope")


def _flat(p) -> dict:
    out = {}
    for f in fields(p):
        val = getattr(p, f.name)
        if isinstance(val, tuple):
            out.update({f"{f.name}{j}": x for j, x in enumerate(val, 1)})
        else:
            out[f.name] = val
    return out


def _require(cond: bool, message: str):
    if not cond:
        raise ConstraintViolation(message)


def check_params(v: Valuations, p: EqParams) -> None:
    """Raise :class:`ConstraintViolation` naming the first violated constraint."""
    case = classify(v)
    _require(isinstance(p, PARAMS_TYPE[case]), f"{case} expects {PARAMS_TYPE[case].__name__}, got {type(p).__name__}")
    space = param_space(v)
    for name, iv in space.intervals.items():
        val = getattr(p, name)
        _require(val in iv, f"{name} = {val} outside {iv}")
    if case is CaseTag.INT_V2EQ2:
        win = v2eq2_lambda_window(v.v1, p.b)
        _require(p.lam in win, f"lam = {p.lam} outside {win} for b = {p.b}")
    elif case is CaseTag.INT_V2GE4:
        m = int(v.h2)
        _require(len(p.lam_w) == m - 1, f"lam_w must list {m - 1} weights (dense), got {len(p.lam_w)}")
        msg = weight_polytope(v, p.b).violation(_flat(p))
        _require(msg is None, msg or "")
    elif case is CaseTag.NONINT_BOUNDARY:
        m = _floor(v.h2)
        _require(len(p.lam_v) == m, f"lam_v must list {m} weights (dense), got {len(p.lam_v)}")
        _require(len(p.kappa_v) == m, f"kappa_v must list {m} weights (dense), got {len(p.kappa_v)}")
        poly = weight_polytope(v, p.alpha)
        if "kappa_v1" not in poly.names:
            _require(all(k == 0 for k in p.kappa_v), f"kappa_v must vanish when alpha = {p.alpha} > 1/delta")
        msg = poly.violation(_flat(p))
        _require(msg is None, msg or "")
    elif case is CaseTag.NONINT_FAR:
        m = _floor(v.h2)
        _require(len(p.weight_v) == m, f"weight_v must list {m} weights (dense), got {len(p.weight_v)}")
        ws = (p.weight_u,) + p.weight_v
        _require(all(w >= 0 for w in ws), "weights must be nonnegative")
        _require(sum(ws) == 1, f"weights sum to {sum(ws)}, not 1")


# Construction ---------------------------------------------------------------


@dataclass(frozen=True)
class Profile:
    v: Valuations
    case: CaseTag
    params: EqParams
    x: FiniteDist
    y: FiniteDist
    predicted_p1: Fraction
    predicted_p2: Fraction

    def to_json(self) -> dict:
        return {
            "case": self.case.value,
            "v1": format_rational(self.v.v1),
            "v2": format_rational(self.v.v2),
            "params": self.params.to_json(),
            "x": self.x.to_json(),
            "y": self.y.to_json(),
            "p1": format_rational(self.predicted_p1),
            "p2": format_rational(self.predicted_p2),
        }


def far_components(v: Valuations) -> list[FiniteDist]:
    """U^{m,alpha} followed by the m distorted strategies of the NonInt_Far case."""
    m, alpha, delta, sigma = _nonint_consts(v)
    u = mix([(1 - alpha, uniform_odd(m)), (alpha, uniform_odd(m + 1))])
    if v.h2 <= _ceil(v.h2) - Fraction(1, 2):
        xs = [mix([(alpha * delta, v_dist(j, m)), (1 - alpha * delta, uniform_odd(m))]) for j in range(1, m + 1)]
    else:
        w = (1 - alpha) * sigma
        xs = [mix([(w, v_dist(j, m)), (1 - w, uniform_odd(m + 1))]) for j in range(1, m + 1)]
    return [u] + xs


def _build_x_y(v: Valuations, case: CaseTag, p: EqParams) -> tuple[FiniteDist, FiniteDist]:
    if case is CaseTag.INT_SYM:
        m = int(v.h2) - 1
        hi, lo = uniform_odd(m + 1), uniform_even(m)
        return mix([(p.alpha, hi), (1 - p.alpha, lo)]), mix([(p.beta, hi), (1 - p.beta, lo)])
    if case is CaseTag.INT_V2EQ2:
        z = mix([(p.lam, uniform_odd(1)), (1 - p.lam, uniform_even(1))])
        return uniform_odd(1), mix([(1 - p.b, dirac(0)), (p.b, z)])
    if case is CaseTag.INT_V2GE4:
        m = int(v.h2)
        parts = [(p.lam_o, uniform_odd(m)), (p.lam_e, uniform_even(m)), (p.lam_o1, uniform_odd_shift(m))]
        parts += [(lam, w_dist(j, m)) for j, lam in enumerate(p.lam_w, 1)]
        z = mix(parts)
        return uniform_odd(m), mix([(1 - p.b / m, dirac(0)), (p.b / m, z)])
    if case is CaseTag.NONINT_EQFLOOR:
        m = _floor(v.h2)
        lam = Fraction(m) / v.h2 * (_ceil(v.h2) - v.h2)
        kappa = Fraction(_floor(v.h1)) / v.h1 * (_ceil(v.h1) - v.h1)
        uo, ue = uniform_odd(m), uniform_even(m)
        return mix([(lam, uo), (1 - lam, ue)]), mix([(kappa, uo), (1 - kappa, ue)])
    if case is CaseTag.NONINT_BOUNDARY:
        m, _, delta, sigma = _nonint_consts(v)
        a = p.alpha
        uo, ue, uo_next = uniform_odd(m), uniform_even(m), uniform_odd(m + 1)
        parts = [
            (p.lam_o, mix([(1 - a, uo), (a, uo_next)])),
            (p.lam_e, mix([(1 - a, ue), (a, uo_next)])),
        ]
        if boundary_first_branch(v, a):
            for j, lam in enumerate(p.lam_v, 1):
                parts.append((lam, mix([(a * delta, v_dist(j, m)), (1 - a * delta, uo)])))
            for j, kap in enumerate(p.kappa_v, 1):
                parts.append((kap, mix([(a * delta, v_dist(j, m)), (1 - a * delta, ue)])))
        else:
            w = (1 - a) * sigma
            for j, lam in enumerate(p.lam_v, 1):
                parts.append((lam, mix([(w, v_dist(j, m)), (1 - w, uo_next)])))
        return mix(parts), ue
    if case is CaseTag.NONINT_FAR:
        m = _floor(v.h2)
        b = Fraction(m * _ceil(v.h2)) / v.h1
        comps = far_components(v)
        x = mix(zip((p.weight_u,) + p.weight_v, comps))
        return x, mix([(1 - b / m, dirac(0)), (b / m, uniform_even(m))])
    if case is CaseTag.SMALL_GT:
        return dirac(1), dirac(0)
    if case is CaseTag.SMALL_EQ:
        return mix([(1 - p.alpha, dirac(0)), (p.alpha, dirac(1))]), dirac(0)
    return dirac(0), dirac(0)


def predicted_payoffs(v: Valuations, p: EqParams) -> tuple[Fraction, Fraction]:
    """Closed-form equilibrium payoffs (P1, P2) of the case governing ``v``."""
    check_params(v, p)
    case = classify(v)
    v1, v2 = v.v1, v.v2
    zero = Fraction(0)
    if case is CaseTag.INT_SYM:
        return 1 - p.beta, 1 - p.alpha
    if case is CaseTag.INT_V2EQ2:
        return v1 - p.b * v1 / 2 - 1, zero
    if case is CaseTag.INT_V2GE4:
        return v1 - p.b * v1 / v2 - v2 / 2, zero
    if case is CaseTag.NONINT_EQFLOOR:
        m = _floor(v.h2)
        return v.h1 - m, v.h2 - m
    if case is CaseTag.NONINT_BOUNDARY:
        return Fraction(1), 1 - v2 / v1 * p.alpha - (v1 - v2) / 2
    if case is CaseTag.NONINT_FAR:
        return v1 + 1 - 2 * _ceil(v.h2), zero
    if case is CaseTag.SMALL_GT:
        return v1 - 1, zero
    if case is CaseTag.SMALL_EQ:
        # the tie at zero leaves the weaker player (1 - alpha) v2/2
        return (1 + p.alpha) * v.h1 - p.alpha, (1 - p.alpha) * v.h2
    return v.h1, v.h2


def build_equilibrium(v: Valuations, p: EqParams) -> Profile:
    check_params(v, p)
    case = classify(v)
    x, y = _build_x_y(v, case, p)
    p1, p2 = predicted_payoffs(v, p)
    return Profile(v, case, p, x, y, p1, p2)


def canonical_params(v: Valuations) -> EqParams:
    case = classify(v)
    if case is CaseTag.INT_SYM:
        p = SymParams(0, 0)
    elif case is CaseTag.INT_V2EQ2:
        p = V2Eq2Params(v.v2**2 / (2 * v.v1), 1)
    elif case is CaseTag.INT_V2GE4:
        m = int(v.h2)
        p = V2Ge4Params(v.v2**2 / (2 * v.v1), 1, 0, 0, (0,) * (m - 1))
    elif case is CaseTag.NONINT_BOUNDARY:
        m, alpha_max, _, _ = _nonint_consts(v)
        p = BoundaryParams(0, 1 - alpha_max, alpha_max, (0,) * m, (0,) * m)
    elif case is CaseTag.NONINT_FAR:
        m = _floor(v.h2)
        p = FarParams(1, (0,) * m)
    elif case is CaseTag.SMALL_EQ:
        p = SmallEqParams(1)
    else:
        p = NoParams()
    check_params(v, p)
    return p


def payoff_range(v: Valuations) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
    """Closed ranges ``((P1 min, P1 max), (P2 min, P2 max))`` over all equilibria.

    Payoffs are affine in the case's scalar parameter, so endpoints of its
    interval give the range. For Int_V2Eq2 the upper P1 end ``v1 - 1`` is the
    limit b -> 0; the limiting profile (dirac(1), dirac(0)) is itself an
    equilibrium, so the closed range is exact.
    """
    case = classify(v)
    zero = (Fraction(0), Fraction(0))
    if case is CaseTag.INT_SYM:
        return (Fraction(0), Fraction(1)), (Fraction(0), Fraction(1))
    if case is CaseTag.INT_V2EQ2:
        b_hi = v2eq2_b_interval(v.v1).hi
        return (v.v1 - b_hi * v.v1 / 2 - 1, v.v1 - 1), zero
    if case is CaseTag.INT_V2GE4:
        iv = v2ge4_b_interval(v)
        p1 = lambda b: v.v1 - b * v.v1 / v.v2 - v.v2 / 2
        return (p1(iv.hi), p1(iv.lo)), zero
    if case is CaseTag.NONINT_BOUNDARY:
        _, alpha_max, _, _ = _nonint_consts(v)
        p2 = lambda a: 1 - v.v2 / v.v1 * a - (v.v1 - v.v2) / 2
        return (Fraction(1), Fraction(1)), (p2(alpha_max), p2(Fraction(0)))
    if case is CaseTag.SMALL_EQ:
        return (Fraction(1), Fraction(1)), (Fraction(0), v.h2)
    p1, p2 = predicted_payoffs(v, canonical_params(v))
    return (p1, p1), (p2, p2)


def sample_params(v: Valuations) -> list[EqParams]:
    """Deterministic feasible points: region vertices plus midpoints/centroids."""
    case = classify(v)
    half = Fraction(1, 2)
    if case is CaseTag.INT_SYM:
        return [SymParams(a, b) for a in (0, half, 1) for b in (0, half, 1)]
    if case is CaseTag.SMALL_EQ:
        return [SmallEqParams(a) for a in (0, half, 1)]
    if case is CaseTag.INT_V2EQ2:
        iv = v2eq2_b_interval(v.v1)
        out = []
        for b in sorted({iv.hi, iv.hi / 2, iv.hi / 4, 2 / v.v1}):
            win = v2eq2_lambda_window(v.v1, b)
            out += [V2Eq2Params(b, lam) for lam in sorted({win.lo, win.midpoint, win.hi})]
        return out
    if case is CaseTag.NONINT_FAR:
        m = _floor(v.h2)
        out = [FarParams(1, (0,) * m)]
        out += [FarParams(0, tuple(int(i == k) for i in range(m))) for k in range(m)]
        share = Fraction(1, m + 1)
        out.append(FarParams(share, (share,) * m))
        # interior points on each edge leaving the canonical vertex
        for t in (Fraction(1, 4), Fraction(3, 4)):
            out += [FarParams(1 - t, tuple(t if i == k else 0 for i in range(m))) for k in range(m)]
        return out
    if case in (CaseTag.INT_V2GE4, CaseTag.NONINT_BOUNDARY):
        if case is CaseTag.INT_V2GE4:
            iv = v2ge4_b_interval(v)
            scalars = {iv.lo, iv.hi, iv.midpoint, v.v2**2 / (2 * v.v1)}
        else:
            _, alpha_max, delta, _ = _nonint_consts(v)
            scalars = {Fraction(0), alpha_max, alpha_max / 2}
            if 1 / delta < alpha_max:
                scalars |= {1 / delta, (1 / delta + alpha_max) / 2}
        out = []
        for s in sorted(scalars):
            verts = weight_polytope(v, s).vertices()
            for point in verts + [_centroid(verts)]:
                out.append(_params_from_point(v, case, s, point))
        return out
    return [NoParams()]


def _params_from_point(v: Valuations, case: CaseTag, scalar: Fraction, point: dict) -> EqParams:
    if case is CaseTag.INT_V2GE4:
        m = int(v.h2)
        return V2Ge4Params(
            scalar, point["lam_o"], point["lam_e"], point["lam_o1"], tuple(point[f"lam_w{j}"] for j in range(1, m))
        )
    m = _floor(v.h2)
    return BoundaryParams(
        scalar,
        point["lam_o"],
        point["lam_e"],
        tuple(point[f"lam_v{j}"] for j in range(1, m + 1)),
        tuple(point.get(f"kappa_v{j}", Fraction(0)) for j in range(1, m + 1)),
    )


def expected_means(v: Valuations, p: EqParams) -> tuple[Fraction, Fraction]:
    """E(X), E(Y) prescribed for the case, independent of the construction."""
    case = classify(v)
    if case is CaseTag.INT_SYM:
        m = int(v.h2) - 1
        return m + p.alpha, m + p.beta
    if case is CaseTag.INT_V2EQ2:
        return Fraction(1), p.b
    if case is CaseTag.INT_V2GE4:
        return v.h2, p.b
    if case is CaseTag.NONINT_EQFLOOR:
        m = _floor(v.h2)
        return Fraction(m), Fraction(m)
    if case is CaseTag.NONINT_BOUNDARY:
        return _floor(v.h2) + p.alpha, Fraction(_floor(v.h2))
    if case is CaseTag.NONINT_FAR:
        m, alpha, _, _ = _nonint_consts(v)
        return m + alpha, Fraction(m * _ceil(v.h2)) / v.h1
    if case is CaseTag.SMALL_GT:
        return Fraction(1), Fraction(0)
    if case is CaseTag.SMALL_EQ:
        return p.alpha, Fraction(0)
    return Fraction(0), Fraction(0)
