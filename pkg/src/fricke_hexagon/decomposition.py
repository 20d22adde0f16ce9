"""The (t, s) chart, its three regions, and the punctured bigon at the cusp."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

from scipy import integrate

REGION_TOL = 1e-9
SQRT2_2 = math.sqrt(2.0) / 2.0


class OutsideV(ValueError):
    """Raised for a (t, s) pair outside the chart."""


class Region(enum.Enum):
    I = "I"
    II = "II"
    III = "III"


def side_length(t: float) -> float:
    """Common length a = b of the two bigon sides, log((1+t)/(1-t))."""
    return math.log1p(t) - math.log1p(-t)


def s_bound(t: float) -> float:
    """Half-width log(t/(1-t)) of the admissible s-interval at ``t``."""
    return math.log(t) - math.log1p(-t)


@dataclass(frozen=True)
class VPoint:
    t: float
    s: float

    def __post_init__(self):
        _check_t(self.t)
        b = s_bound(self.t)
        if not -b < self.s:
            raise OutsideV(f"s = {self.s!r} violates -log(t/(1-t)) = {-b!r} < s")
        if not self.s < b:
            raise OutsideV(f"s = {self.s!r} violates s < log(t/(1-t)) = {b!r}")

    @property
    def alpha(self) -> float:
        return 2.0 * math.acos(self.t)

    @property
    def a(self) -> float:
        return side_length(self.t)

    @property
    def a1(self) -> float:
        return 0.5 * self.a + self.s

    @property
    def a2(self) -> float:
        return 0.5 * self.a - self.s


def _check_t(t: float) -> None:
    if not 0.5 < t:
        raise OutsideV(f"t = {t!r} violates 1/2 < t")
    if not t < 1.0:
        raise OutsideV(f"t = {t!r} violates t < 1")


def make_vpoint(t: float, s: float) -> VPoint:
    return VPoint(float(t), float(s))


def classify(v: VPoint, tol: float = REGION_TOL) -> Region:
    excess = abs(v.s) - 0.5 * v.a
    if abs(excess) <= tol:
        return Region.III
    return Region.II if excess > 0 else Region.I


@dataclass(frozen=True)
class PuncturedBigon:
    t: float
    alpha: float
    a: float

    @property
    def area(self) -> float:
        return 2.0 * math.pi - 2.0 * self.alpha


def bigon_from_t(t: float) -> PuncturedBigon:
    _check_t(t)
    return PuncturedBigon(t=t, alpha=2.0 * math.acos(t), a=side_length(t))


def cusp_side_length(alpha: float) -> float:
    """Side length from the cusp angle, log((1 + cos(alpha/2)) / (1 - cos(alpha/2)))."""
    c = math.cos(0.5 * alpha)
    return math.log((1.0 + c) / (1.0 - c))


def cusp_side_length_by_quadrature(alpha: float) -> float:
    """Length of the cusp side as the integral of d(theta)/sin(theta) over the unit-circle arc."""
    val, _ = integrate.quad(lambda th: 1.0 / math.sin(th), 0.5 * alpha, math.pi - 0.5 * alpha,
                            epsabs=1e-13, epsrel=1e-12, limit=200)
    return val


def bigon_area_by_quadrature(t: float) -> float:
    """Area of the punctured bigon, integrated over a fundamental strip of the cusp.

    With the cusp at infinity the two sides lift to unit semicircles centred at
    0 and 2t, and the strip -t <= x <= 3t above them is a fundamental domain.
    The area element dx dy / y^2 integrates in y to dx / y_low(x).
    """
    _check_t(t)
    left, _ = integrate.quad(lambda x: 1.0 / math.sqrt(1.0 - x * x), -t, t,
                             epsabs=1e-13, epsrel=1e-13)
    right, _ = integrate.quad(lambda x: 1.0 / math.sqrt(1.0 - (x - 2 * t) ** 2), t, 3 * t,
                              epsabs=1e-13, epsrel=1e-13)
    return left + right


def _r_formula(t: float) -> float:
    return 0.5 * math.log1p(-t) + 0.5 * math.log1p(t) - math.log(t)


def clearance_r(t: float) -> float:
    """Least length of a1, a2 keeping the obtuse-angled side off the common perpendicular.

    Zero for t >= sqrt(2)/2, where the angle pi - alpha is not obtuse.
    """
    if t >= SQRT2_2:
        return 0.0
    return max(_r_formula(t), 0.0)


def clearance_r_prime(t: float) -> float:
    """Upper bound for -s - a/2 in region II, log(t) - log(1-t)/2 - log(1+t)/2."""
    if t <= SQRT2_2:
        return 0.0
    return max(-_r_formula(t), 0.0)
