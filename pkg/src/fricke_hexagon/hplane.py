"""Upper half-plane kernel: points, geodesics, isometries, angles and areas.

Everything is computed in the upper half-plane.  The Poincare disk only
appears through :func:`to_disk`, which is used for rendering.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Sequence, Union

INCIDENCE_TOL = 1e-9
ALGEBRAIC_TOL = 1e-12

INF = math.inf

IdealPoint = float  # a real number, or ``INF`` for the point at infinity


class GeometryError(ValueError):
    pass


class CoincidentPoints(GeometryError):
    pass


class PointNotOnGeodesic(GeometryError):
    pass


class Intersecting(GeometryError):
    pass


class Asymptotic(GeometryError):
    pass


class DegeneratePolygon(GeometryError):
    pass


class NoSuchQuadrilateral(GeometryError):
    pass


@dataclass(frozen=True)
class HPoint:
    x: float
    y: float

    def __post_init__(self):
        if not (self.y > 0 and math.isfinite(self.x) and math.isfinite(self.y)):
            raise GeometryError(f"not a point of the upper half-plane: ({self.x}, {self.y})")

    @classmethod
    def from_complex(cls, z: complex) -> "HPoint":
        return cls(z.real, z.imag)

    @property
    def z(self) -> complex:
        return complex(self.x, self.y)


def _z(p: Union[HPoint, complex]) -> complex:
    return p.z if isinstance(p, HPoint) else complex(p)


@dataclass(frozen=True)
class Geodesic:
    """Complete geodesic, stored by its two ideal endpoints.

    Endpoints are put in canonical order on construction: infinity last,
    otherwise increasing.
    """

    e1: IdealPoint
    e2: IdealPoint

    def __post_init__(self):
        e1, e2 = float(self.e1), float(self.e2)
        if math.isnan(e1) or math.isnan(e2) or e1 == e2:
            raise GeometryError(f"degenerate geodesic ({e1}, {e2})")
        if e1 == -INF or e2 == -INF:
            raise GeometryError("use +inf for the point at infinity")
        if e1 == INF or (e2 != INF and e2 < e1):
            e1, e2 = e2, e1
        object.__setattr__(self, "e1", e1)
        object.__setattr__(self, "e2", e2)

    @property
    def is_vertical(self) -> bool:
        return self.e2 == INF

    @property
    def center(self) -> float:
        return self.e1 if self.is_vertical else 0.5 * (self.e1 + self.e2)

    @property
    def radius(self) -> float:
        return INF if self.is_vertical else 0.5 * (self.e2 - self.e1)

    def offset(self, p) -> float:
        """Signed Euclidean offset of ``p`` from the carrier circle or line."""
        z = _z(p)
        if self.is_vertical:
            return z.real - self.e1
        return abs(z - self.center) - self.radius

    def contains(self, p, tol: float = INCIDENCE_TOL) -> bool:
        z = _z(p)
        if self.is_vertical:
            return abs(z.real - self.e1) <= tol * max(1.0, abs(z.imag))
        return abs(self.offset(z)) <= tol * max(1.0, self.radius)

    def tangent(self, p) -> complex:
        """Unit tangent at ``p``, pointing toward ``e2``."""
        z = _z(p)
        if self.is_vertical:
            return 1j
        w = 1j * (z - self.center)
        w /= abs(w)
        # moving toward e2 means increasing real part along the arc
        return w if w.real > 0 else -w


def _endpoint_from_center(c0: float, r: float, sign: int, z: complex) -> float:
    """Endpoint ``c0 + sign*r`` of the circle through ``z``, avoiding cancellation."""
    naive = c0 + sign * r
    if (c0 >= 0) == (sign > 0):
        return naive
    # the endpoints multiply to c0^2 - r^2 = 2 x c0 - |z|^2
    prod = 2.0 * z.real * c0 - abs(z) ** 2
    other = c0 - sign * r
    return prod / other if other != 0 else naive


def geodesic_with_tangent(p, direction: complex) -> tuple[Geodesic, IdealPoint]:
    """Geodesic through ``p`` with the given tangent, and its forward endpoint."""
    z = _z(p)
    tau = complex(direction)
    if abs(tau.real) <= 1e-300 or abs(tau.real) < 1e-17 * abs(tau.imag):
        g = Geodesic(z.real, INF)
        return g, (INF if tau.imag > 0 else z.real)
    c0 = z.real + z.imag * tau.imag / tau.real
    r = abs(z - c0)
    lo = _endpoint_from_center(c0, r, -1, z)
    hi = _endpoint_from_center(c0, r, +1, z)
    g = Geodesic(lo, hi)
    return g, (hi if tau.real > 0 else lo)


def geodesic_through(p: HPoint, q: HPoint) -> Geodesic:
    zp, zq = p.z, q.z
    if zp == zq:
        raise CoincidentPoints(f"{p} = {q}")
    if zp.real == zq.real:
        return Geodesic(zp.real, INF)
    # centre on the real axis equidistant from p and q
    c0 = (abs(zq) ** 2 - abs(zp) ** 2) / (2.0 * (zq.real - zp.real))
    r = abs(zp - c0)
    return Geodesic(_endpoint_from_center(c0, r, -1, zp), _endpoint_from_center(c0, r, +1, zp))


def dist(p: HPoint, q: HPoint) -> float:
    zp, zq = _z(p), _z(q)
    return 2.0 * math.asinh(abs(zp - zq) / (2.0 * math.sqrt(zp.imag * zq.imag)))


def tangent_toward(p, q) -> complex:
    """Unit tangent at ``p`` of the geodesic segment from ``p`` to ``q``."""
    zp, zq = _z(p), _z(q)
    if zp == zq:
        raise CoincidentPoints(f"{zp} = {zq}")
    # disk chart centred at p: geodesics from p become rays from 0, and the
    # chart turns tangent vectors at p by -pi/2
    w = (zq - zp) / (zq - zp.conjugate())
    return 1j * w / abs(w)


def interior_angle(prev, vertex, nxt) -> float:
    """Interior angle at ``vertex`` of a counterclockwise geodesic polygon, in (0, 2*pi)."""
    tp = tangent_toward(vertex, prev)
    tn = tangent_toward(vertex, nxt)
    return cmath.phase(tp / tn) % (2.0 * math.pi)


def intersection(g1: Geodesic, g2: Geodesic) -> HPoint | None:
    """Crossing point of two geodesics, or ``None`` when they do not cross."""
    if not _interleaved(g1, g2):
        return None
    if g1.is_vertical and g2.is_vertical:
        return None
    if g2.is_vertical:
        g1, g2 = g2, g1
    if g1.is_vertical:
        x = g1.e1
        # r^2 - (x - c)^2 in endpoint form; no cancellation when x is near an end
        y2 = (x - g2.e1) * (g2.e2 - x)
        return HPoint(x, math.sqrt(y2)) if y2 > 0 else None
    c1, r1, c2, r2 = g1.center, g1.radius, g2.center, g2.radius
    x = 0.5 * (c1 + c2) + 0.5 * (r1 - r2) * (r1 + r2) / (c2 - c1)
    # y^2 from whichever circle keeps x farther from both of its endpoints
    g = max((g1, g2), key=lambda h: min(x - h.e1, h.e2 - x))
    y2 = (x - g.e1) * (g.e2 - x)
    return HPoint(x, math.sqrt(y2)) if y2 > 0 else None


def _interleaved(g1: Geodesic, g2: Geodesic) -> bool:
    def inside(p, g):
        if g.is_vertical:
            return p > g.e1
        return g.e1 < p < g.e2

    a, b = g1.e1, g1.e2
    c, d = g2.e1, g2.e2
    if len({a, b, c, d}) < 4:
        return False
    # endpoints of g2 on opposite sides of g1's boundary arc
    return inside(c, g1) != inside(d, g1)


def angle_between(g1: Geodesic, g2: Geodesic, at: HPoint, tol: float = INCIDENCE_TOL) -> float:
    """Angle in [0, pi] between the tangent lines of two geodesics at a common point."""
    for g in (g1, g2):
        if not g.contains(at, tol):
            raise PointNotOnGeodesic(f"{at} is not on {g}")
    t1, t2 = g1.tangent(at), g2.tangent(at)
    c = max(-1.0, min(1.0, (t1 * t2.conjugate()).real))
    return math.acos(c)


class Isometry:
    """Orientation-preserving isometry z -> (m11 z + m12) / (m21 z + m22)."""

    __slots__ = ("m11", "m12", "m21", "m22")

    def __init__(self, m11: float, m12: float, m21: float, m22: float):
        det = m11 * m22 - m12 * m21
        if not det > 0:
            raise GeometryError(f"matrix with determinant {det} is not in PSL(2,R)")
        k = 1.0 / math.sqrt(det)
        self.m11, self.m12, self.m21, self.m22 = m11 * k, m12 * k, m21 * k, m22 * k

    @classmethod
    def identity(cls) -> "Isometry":
        return cls(1.0, 0.0, 0.0, 1.0)

    @property
    def det(self) -> float:
        return self.m11 * self.m22 - self.m12 * self.m21

    @property
    def trace(self) -> float:
        return self.m11 + self.m22

    def __matmul__(self, other: "Isometry") -> "Isometry":
        return Isometry(
            self.m11 * other.m11 + self.m12 * other.m21,
            self.m11 * other.m12 + self.m12 * other.m22,
            self.m21 * other.m11 + self.m22 * other.m21,
            self.m21 * other.m12 + self.m22 * other.m22,
        )

    def inverse(self) -> "Isometry":
        return Isometry(self.m22, -self.m12, -self.m21, self.m11)

    def apply(self, z: complex) -> complex:
        return (self.m11 * z + self.m12) / (self.m21 * z + self.m22)

    def apply_ideal(self, e: IdealPoint) -> IdealPoint:
        if e == INF:
            return INF if self.m21 == 0 else self.m11 / self.m21
        den = self.m21 * e + self.m22
        return INF if den == 0 else (self.m11 * e + self.m12) / den

    def __call__(self, p):
        if isinstance(p, Geodesic):
            return Geodesic(self.apply_ideal(p.e1), self.apply_ideal(p.e2))
        if isinstance(p, HPoint):
            return HPoint.from_complex(self.apply(p.z))
        return self.apply(complex(p))

    def __repr__(self):
        return f"Isometry({self.m11!r}, {self.m12!r}, {self.m21!r}, {self.m22!r})"


class Reflection:
    """Reflection across a geodesic (orientation reversing)."""

    def __init__(self, g: Geodesic):
        self.axis = g

    def apply(self, z: complex) -> complex:
        g = self.axis
        if g.is_vertical:
            return complex(2.0 * g.e1 - z.real, z.imag)
        c0, r = g.center, g.radius
        return c0 + r * r / (z - c0).conjugate()

    def __call__(self, p):
        if isinstance(p, HPoint):
            return HPoint.from_complex(self.apply(p.z))
        return self.apply(complex(p))


def _to_zero_infinity(g: Geodesic) -> Isometry:
    """An isometry taking ``g`` to the imaginary axis, e1 -> 0 and e2 -> inf."""
    if g.is_vertical:
        return Isometry(1.0, -g.e1, 0.0, 1.0)
    return Isometry(1.0, -g.e1, -1.0, g.e2)


def translate_along(g: Geodesic, d: float) -> Isometry:
    """Hyperbolic translation of length ``|d|`` along ``g``; positive ``d`` moves toward ``e2``."""
    t = _to_zero_infinity(g)
    k = math.exp(0.5 * d)
    return t.inverse() @ Isometry(k, 0.0, 0.0, 1.0 / k) @ t


def reflect_across(g: Geodesic) -> Reflection:
    return Reflection(g)


def half_turn(p: HPoint) -> Isometry:
    """Rotation by pi about ``p``."""
    x, y = p.x, p.y
    return Isometry(x, -(x * x + y * y), 1.0, -x)


def common_perpendicular(g1: Geodesic, g2: Geodesic) -> Geodesic:
    """The geodesic orthogonal to two ultraparallel geodesics."""
    ends1, ends2 = {g1.e1, g1.e2}, {g2.e1, g2.e2}
    if ends1 & ends2:
        raise Asymptotic(f"{g1} and {g2} share an ideal endpoint")
    if _interleaved(g1, g2):
        raise Intersecting(f"{g1} and {g2} cross")
    t = _to_zero_infinity(g1)
    h = t(g2)
    p, q = h.e1, h.e2
    # after normalisation g1 = {0, inf}; g2 has endpoints of equal sign and the
    # perpendicular is the semicircle about 0 of radius sqrt(p q)
    rho = math.sqrt(p * q)
    return t.inverse()(Geodesic(-rho, rho))


def foot_of_perpendicular(g: Geodesic, perp: Geodesic) -> HPoint:
    p = intersection(g, perp)
    if p is None:
        raise GeometryError("geodesics do not meet")
    return p


@dataclass(frozen=True)
class HPolygon:
    """Geodesic polygon; ideal vertices are given as floats and carry angle 0."""

    vertices: tuple
    angles: tuple = field(default=())

    def __post_init__(self):
        vs = tuple(self.vertices)
        object.__setattr__(self, "vertices", vs)
        for i, v in enumerate(vs):
            if v == vs[(i + 1) % len(vs)]:
                raise DegeneratePolygon("consecutive vertices coincide")
        if not self.angles:
            object.__setattr__(self, "angles", tuple(_vertex_angles(vs)))
        elif len(self.angles) != len(vs):
            raise DegeneratePolygon("one angle per vertex is required")
        for v, a in zip(vs, self.angles):
            if not isinstance(v, HPoint) and a != 0:
                raise DegeneratePolygon("ideal vertices must have angle 0")


def _vertex_angles(vs: Sequence) -> list[float]:
    n = len(vs)
    out = []
    for i, v in enumerate(vs):
        if not isinstance(v, HPoint):
            out.append(0.0)
            continue
        out.append(interior_angle(vs[i - 1], v, vs[(i + 1) % n]))
    return out


def polygon_area(p: HPolygon, tol: float = ALGEBRAIC_TOL) -> float:
    n = len(p.vertices)
    if n < 3:
        raise DegeneratePolygon("need at least three vertices")
    area = (n - 2) * math.pi - math.fsum(p.angles)
    if area <= tol:
        raise DegeneratePolygon(f"angle sum leaves area {area}")
    return area


def quad_opposite_side(alpha: float, beta: float, d: float) -> float:
    """Side ``c`` of a quadrilateral with two right angles on the side ``d``.

    ``alpha`` and ``beta`` are the other two angles; ``c`` joins their vertices.
    """
    if not (0 < alpha < math.pi and 0 < beta < math.pi):
        raise NoSuchQuadrilateral("angles must lie in (0, pi)")
    ch = (math.cos(alpha) * math.cos(beta) + math.cosh(d)) / (math.sin(alpha) * math.sin(beta))
    if ch < 1.0:
        raise NoSuchQuadrilateral(f"cosh c = {ch} < 1")
    return math.acosh(ch)


def trirectangle_angle(a: float, b: float) -> float:
    """Fourth angle of a Lambert quadrilateral whose sides opposite it are ``a``, ``b``."""
    c = math.sinh(a) * math.sinh(b)
    if c >= 1.0:
        raise NoSuchQuadrilateral(f"sinh a sinh b = {c} >= 1, fourth vertex is not finite")
    return math.acos(c)


def point_on_geodesic(p: HPoint, direction: complex, d: float) -> HPoint:
    """The point at distance ``d`` from ``p`` along the geodesic with tangent ``direction``."""
    tau = complex(direction) / abs(direction)
    # move p to i with the tangent pointing up, walk up to e^d i, move back
    z = complex(0.0, math.exp(d))
    # rotation about i turning the vertical direction to tau (at i, angles are Euclidean)
    phi = cmath.phase(tau) - 0.5 * math.pi
    c, s = math.cos(0.5 * phi), math.sin(0.5 * phi)
    rot = Isometry(c, s, -s, c)
    back = Isometry(math.sqrt(p.y), p.x / math.sqrt(p.y), 0.0, 1.0 / math.sqrt(p.y))
    return HPoint.from_complex((back @ rot).apply(z))


def to_disk(p, center: HPoint | None = None) -> complex:
    """Cayley map to the Poincare disk; ``center`` goes to 0 (default ``i``)."""
    z = _z(p)
    if center is not None:
        z = (z - center.x) / center.y
    return (z - 1j) / (z + 1j)


def ideal_to_disk(e: IdealPoint, center: HPoint | None = None) -> complex:
    if e == INF:
        return 1.0 + 0j
    if center is not None:
        e = (e - center.x) / center.y
    return (e - 1j) / (e + 1j)
