"""Length of the binding curve on the chart, its closed form on s = 0, and its minimum."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field

from scipy import optimize

from .decomposition import SQRT2_2, OutsideV, VPoint, _check_t, make_vpoint, s_bound, side_length
from .hexagon import build_hexagon
from .hplane import (
    INF,
    Geodesic,
    HPoint,
    common_perpendicular,
    dist,
    geodesic_through,
    intersection,
)

T_MIN_EXACT = 3.0 * math.sqrt(5.0) / 10.0


@dataclass(frozen=True)
class LengthReport:
    v: VPoint
    a: float
    c: float
    d: float
    total: float


def total_length(v: VPoint) -> LengthReport:
    h = build_hexagon(v)
    return LengthReport(v=v, a=h.a, c=h.c, d=h.d, total=2.0 * h.a + h.c + h.d)


def _root5(t: float) -> float:
    return math.sqrt(5.0 * t * t - 1.0)


def axis_length(t: float) -> float:
    """Length on s = 0: 2 log((sqrt(5t^2 - 1) + 2t^2) / ((2t - 1)(1 - t)))."""
    _check_t(t)
    return 2.0 * (math.log(_root5(t) + 2.0 * t * t) - math.log(2.0 * t - 1.0) - math.log1p(-t))


def c_closed_form(t: float) -> float:
    """Side c (= d) of the hexagon on s = 0."""
    _check_t(t)
    return math.log(_root5(t) + 2.0 * t * t) - math.log(2.0 * t - 1.0) - math.log1p(t)


def c_parts(t: float) -> tuple[float, float]:
    """The two pieces of c cut by the common perpendicular of c and the axis line.

    Only meaningful for t < sqrt(2)/2, where that perpendicular exists.
    """
    _check_t(t)
    den = 0.5 * math.log((4.0 * t * t - 1.0) * (1.0 - t * t))
    c1 = math.log((2.0 * t + 1.0) * (1.0 - t)) - den
    c2 = math.log(_root5(t) + 2.0 * t * t) - den
    return c1, c2


@dataclass(frozen=True)
class QuarterReport:
    t: float
    v: float
    h1: float
    h2: float
    c1: float
    c2: float
    residuals: dict

    @property
    def max_residual(self) -> float:
        return max(self.residuals.values())


def quarter_hexagon_check(t: float) -> QuarterReport:
    """Measure the quarter of the s = 0 hexagon and test the trigonometric relations.

    The quarter is bounded by half of side a, side c, the symmetry line
    through the c-d vertex, and the common perpendicular of a and b.  The
    common perpendicular of side c and that axis splits it into two Lambert
    quadrilaterals; v is its length, h1 and h2 the pieces of the axis, and
    c1, c2 the pieces of c.
    """
    _check_t(t)
    if not t < SQRT2_2:
        raise OutsideV(f"quarter-hexagon relations need t < sqrt(2)/2, got {t!r}")
    h = build_hexagon(make_vpoint(t, 0.0))
    al, a = h.alpha, h.a
    rho = math.exp(-0.5 * h.trace.translation_param)
    foot_a = HPoint(0.0, rho)
    mid = HPoint(0.0, 1.0)
    top, corner = h.vertices[0], h.vertices[1]
    axis = Geodesic(0.0, INF)
    perp = common_perpendicular(geodesic_through(top, corner), axis)
    p = intersection(perp, geodesic_through(top, corner))
    q = intersection(perp, axis)
    v = dist(p, q)
    h1, h2 = dist(foot_a, q), dist(q, mid)
    c1, c2 = dist(top, p), dist(p, corner)

    den = (4.0 * t * t - 1.0) * (1.0 - t * t)
    res = {
        "cosh_v": abs(math.cosh(v) - math.cosh(0.5 * a) * math.sin(math.pi - al)),
        "cosh_h1": abs(math.cosh(h1) - math.cosh(c1) * math.sin(math.pi - al)),
        "cos_obtuse": abs(math.cos(math.pi - al) - math.sinh(h1) * math.sinh(v)),
        "cosh_h2": abs(math.cosh(h2) - math.cosh(c2) * math.sin(0.5 * al)),
        "cos_half": abs(math.cos(0.5 * al) - math.sinh(h2) * math.sinh(v)),
        "cosh2_c1": abs(math.cosh(c1) ** 2 - t * t / den),
        "cosh2_c2": abs(math.cosh(c2) ** 2 - (5.0 * t * t - 1.0) / den),
        "c_sum": abs(c1 + c2 - c_closed_form(t)),
    }
    return QuarterReport(t=t, v=v, h1=h1, h2=h2, c1=c1, c2=c2, residuals=res)


@dataclass(frozen=True)
class MinimumResult:
    t0: float
    s0: float
    length_min: float
    alpha0: float
    a0: float
    c0: float
    s_probes: tuple = field(default=())

    @property
    def even_in_s(self) -> bool:
        return all(plus >= self.length_min - 1e-9 and minus >= self.length_min - 1e-9
                   for _, plus, minus in self.s_probes)


def minimize(tol: float = 1e-12, deltas=(0.01, 0.1)) -> MinimumResult:
    """Golden-section search for the minimum of the length on the axis s = 0."""
    lo, hi = 0.5 + 1e-9, 1.0 - 1e-9
    res = optimize.minimize_scalar(axis_length, bracket=(lo, 0.75, hi), method="golden",
                                   tol=tol)
    t0 = float(res.x)
    base = total_length(make_vpoint(t0, 0.0)).total
    probes = tuple((dl, total_length(make_vpoint(t0, dl)).total,
                    total_length(make_vpoint(t0, -dl)).total) for dl in deltas)
    return MinimumResult(t0=t0, s0=0.0, length_min=axis_length(t0), alpha0=2.0 * math.acos(t0),
                         a0=side_length(t0), c0=c_closed_form(t0),
                         s_probes=((0.0, base, base),) + probes)


class CaseExhausted(ValueError):
    """The next point of a boundary sequence is below double-precision resolution."""


class BoundaryTag(enum.Enum):
    T_TO_ONE = "T_TO_ONE"
    T_MID_HIGH = "T_MID_HIGH"
    T_MID_LOW = "T_MID_LOW"
    T_SQRT2_I = "T_SQRT2_I"
    T_SQRT2_II = "T_SQRT2_II"
    T_SQRT2_III = "T_SQRT2_III"


_DEFAULT_T_HAT = {BoundaryTag.T_MID_HIGH: 0.8, BoundaryTag.T_MID_LOW: 0.6}


@dataclass(frozen=True)
class BoundaryCase:
    tag: BoundaryTag
    t_hat: float | None = None
    t_offset: float = 0.1

    @classmethod
    def of(cls, tag, **kw) -> "BoundaryCase":
        return cls(BoundaryTag(tag) if not isinstance(tag, BoundaryTag) else tag, **kw)

    @property
    def fixed_t(self) -> float:
        return self.t_hat if self.t_hat is not None else _DEFAULT_T_HAT[self.tag]


ALL_CASES = tuple(BoundaryCase(tag) for tag in BoundaryTag)

_RESOLUTION = 1e-14


def boundary_sequence(case: BoundaryCase, k: int) -> VPoint:
    """k-th point (k >= 1) of a sequence leaving every compact subset of the chart."""
    if k < 1:
        raise ValueError("k starts at 1")
    tag = case.tag
    eps = 2.0 ** -k

    if tag is BoundaryTag.T_TO_ONE:
        # 1 - 2^-1 is the excluded endpoint 1/2; start at the next dyadic instead
        eps = min(eps, 0.25)
        if eps < _RESOLUTION:
            raise CaseExhausted(f"1 - t = {eps:.1e}")
        return make_vpoint(1.0 - eps, 0.0)

    if tag is BoundaryTag.T_MID_HIGH:
        t = case.fixed_t
        if not SQRT2_2 < t < 1.0:
            raise ValueError("T_MID_HIGH needs sqrt(2)/2 < t_hat < 1")
        b = s_bound(t)
        gap = (b - 0.5 * side_length(t)) * eps
        return _checked(t, -b + gap, b)

    if tag is BoundaryTag.T_MID_LOW:
        t = case.fixed_t
        if not 0.5 < t < SQRT2_2:
            raise ValueError("T_MID_LOW needs 1/2 < t_hat < sqrt(2)/2")
        b = s_bound(t)
        return _checked(t, -b * (1.0 - eps), b)

    if tag is BoundaryTag.T_SQRT2_I:
        t = SQRT2_2 - case.t_offset * eps
        b = s_bound(t)
        return _checked(t, -b * (1.0 - eps), b)

    t = SQRT2_2 + case.t_offset * eps
    if t <= SQRT2_2:
        raise CaseExhausted("t is indistinguishable from sqrt(2)/2")
    b, half_a = s_bound(t), 0.5 * side_length(t)
    if tag is BoundaryTag.T_SQRT2_II:
        s = -0.5 * (b + half_a)
        if not -b < s < -half_a:
            raise CaseExhausted("region II has no representable interior at this t")
        return _checked(t, s, b)
    return _checked(t, -half_a, b)


def _checked(t: float, s: float, bound: float) -> VPoint:
    if abs(bound - abs(s)) < _RESOLUTION:
        raise CaseExhausted(f"|s| within {_RESOLUTION:g} of the chart boundary")
    return make_vpoint(t, s)


def boundary_lengths(case: BoundaryCase, k_max: int) -> list[tuple[int, VPoint, float]]:
    """Totals along a boundary sequence, stopping early when it is exhausted."""
    out = []
    for k in range(1, k_max + 1):
        try:
            v = boundary_sequence(case, k)
        except CaseExhausted:
            break
        out.append((k, v, total_length(v).total))
    return out


def divergence_check(case: BoundaryCase, bound: float, k_max: int) -> bool:
    if not bound > 0:
        raise ValueError("bound must be positive")
    for k in range(1, k_max + 1):
        try:
            v = boundary_sequence(case, k)
        except CaseExhausted:
            return False
        if total_length(v).total > bound:
            return True
    return False
