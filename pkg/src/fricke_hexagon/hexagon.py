"""Construction of the hexagon with equal opposite sides from a chart point.

Frame: the common perpendicular of the geodesics carrying sides a and b is
the imaginary axis, and its midpoint is ``i``.  With ``u`` the distance
between those two geodesics, side a lies on the semicircle of radius
``exp(-u/2)`` and side b on the one of radius ``exp(u/2)``.  Heights along
either semicircle are signed hyperbolic distances from the foot of the
perpendicular, positive toward ``x > 0``.

For a given ``u`` the upper half of the hexagon is forced: side a occupies
heights ``[-a2, a1]``, side c leaves its top vertex at interior angle
``pi - alpha``, and side d leaves the vertex at height ``a2`` on b at the same
angle.  The half-turn about ``i`` produces the other half.  The remaining
condition, angle ``alpha`` where c meets d, is met by bisection in ``u`` on
the area cut off by the perpendicular (that area is ``2 alpha`` minus the
angle at the c-d vertex, and grows monotonically in ``u``).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, replace

from .decomposition import REGION_TOL, Region, VPoint, classify, make_vpoint
from .hplane import (
    INF,
    Geodesic,
    HPoint,
    dist,
    geodesic_with_tangent,
    half_turn,
    interior_angle,
    intersection,
    reflect_across,
    tangent_toward,
)

AREA_TOL = 1e-12
MAX_BISECTION = 200
CHECK_TOL = 1e-9
COLLAPSE_TOL = 0.1

_CENTER = HPoint(0.0, 1.0)
_HALF_TURN = half_turn(_CENTER)
_AXIS = Geodesic(0.0, INF)
_MIRROR = reflect_across(_AXIS)


class BisectionFailure(RuntimeError):
    """The area residual did not reach tolerance; indicates a geometry bug."""


@dataclass(frozen=True)
class ConstructionTrace:
    region: Region
    bisection_iterations: int
    translation_param: float
    theta: float | None = None
    phi: float | None = None
    sub_c1: float | None = None
    sub_c2: float | None = None
    residual: float = 0.0
    mirrored: bool = False


@dataclass(frozen=True)
class HexagonResult:
    """Hexagon with vertices ordered so that side ``k`` runs from vertex ``k-1`` to ``k``.

    Sides then read (a, c, d, b, c', d') and the interior angles
    (pi - alpha, alpha, pi - alpha, pi - alpha, alpha, pi - alpha).
    """

    v: VPoint
    region: Region
    alpha: float
    a: float
    c: float
    d: float
    a1: float
    a2: float
    vertices: tuple
    area: float
    trace: ConstructionTrace

    @property
    def total(self) -> float:
        return 2.0 * self.a + self.c + self.d

    @property
    def sides(self) -> tuple:
        vs = self.vertices
        return tuple(dist(vs[k - 1], vs[k]) for k in range(6))

    @property
    def angles(self) -> tuple:
        vs = self.vertices
        return tuple(interior_angle(vs[k - 1], vs[k], vs[(k + 1) % 6]) for k in range(6))

    @property
    def expected_angles(self) -> tuple:
        al = self.alpha
        return (math.pi - al, al, math.pi - al, math.pi - al, al, math.pi - al)


def _unit(h: float) -> complex:
    """Point at signed distance ``h`` from ``i`` along the unit semicircle."""
    return complex(math.tanh(h), 1.0 / math.cosh(h))


@dataclass
class _Frame:
    """The half-hexagon data determined by ``u`` (everything except the c-d vertex)."""

    v: VPoint
    u: float

    def __post_init__(self):
        v = self.v
        rho = math.exp(-0.5 * self.u)
        self.rho = rho
        bend = math.pi - v.alpha
        self.U = rho * _unit(v.a1)
        self.X = _unit(v.a2) / rho
        # tangent along a toward the lower end is i*U/|U|; turn it into the hexagon
        self.tau_c = 1j * self.U / abs(self.U) * cmath.exp(-1j * bend)
        self.tau_d = 1j * self.X / abs(self.X) * cmath.exp(1j * bend)
        self.gc, _ = geodesic_with_tangent(self.U, self.tau_c)
        self.gd, _ = geodesic_with_tangent(self.X, self.tau_d)
        self.O = complex(0.0, rho)
        self.Fb = complex(0.0, 1.0 / rho)

    def corner(self) -> complex | None:
        """The c-d vertex, if the two rays meet ahead of their start points."""
        w = intersection(self.gc, self.gd)
        if w is None:
            return None
        w = w.z
        if w == self.U or w == self.X:
            return None
        ahead_c = (tangent_toward(self.U, w) * self.tau_c.conjugate()).real > 0
        ahead_d = (tangent_toward(self.X, w) * self.tau_d.conjugate()).real > 0
        return w if (ahead_c and ahead_d) else None

    def crossing(self) -> complex:
        """Where side c crosses the common perpendicular (region II)."""
        p = intersection(self.gc, _AXIS)
        if p is None:
            raise BisectionFailure("side c misses the common perpendicular")
        return p.z


def _angle_area(vertices) -> float:
    n = len(vertices)
    s = math.fsum(interior_angle(vertices[k - 1], vertices[k], vertices[(k + 1) % n])
                  for k in range(n))
    return (n - 2) * math.pi - s


def _region_polygon(fr: _Frame, w: complex, region: Region) -> list:
    hu = _HALF_TURN.apply(fr.U)
    if region is Region.I:
        return [fr.O, fr.U, w, fr.X, fr.Fb]
    if region is Region.II:
        c = fr.crossing()
        return [c, w, fr.X, hu, _HALF_TURN.apply(c)]
    return [fr.U, w, fr.X, hu]


def enclosed_area(v: VPoint, u: float, region: Region | None = None) -> float:
    """Area cut off on one side of the common perpendicular at translation ``u``.

    Beyond the configuration where c and d become asymptotic the area is
    reported as its limiting value ``2 alpha``.
    """
    region = region or classify(v)
    fr = _Frame(v, u)
    w = fr.corner()
    if w is None:
        return 2.0 * v.alpha
    return _angle_area(_region_polygon(fr, w, region))


def magenta_param(v: VPoint) -> float:
    """Smallest admissible ``u``: the vertex at height a2 on b sits on the c-ray.

    For s = 0 this is the degenerate configuration u = 0.
    """
    if v.s == 0.0:
        return 0.0
    # in the frame with u = 0 the c-line is fixed and the b-vertex runs along
    # the Euclidean ray lam * w0, lam = exp(u)
    fr = _Frame(v, 0.0)
    w0 = _unit(v.a2)
    g = fr.gc
    if g.is_vertical:
        lam = g.e1 / w0.real
    else:
        c0 = g.center
        # |lam w0 - c0|^2 = r^2 with |w0| = 1 and c0^2 - r^2 = 2 Re(U) c0 - |U|^2
        beta = c0 * w0.real
        gamma = 2.0 * fr.U.real * c0 - abs(fr.U) ** 2
        disc = beta * beta - gamma
        if disc < 0:
            raise BisectionFailure("c-ray never reaches the b-vertex locus")
        root = math.sqrt(disc)
        lam = beta + root if beta >= 0 else gamma / (beta - root)
    return max(math.log(lam), 0.0) if lam > 0 else 0.0


def _solve_translation(v: VPoint, region: Region, alpha: float) -> tuple[float, int, float]:
    lo = magenta_param(v)

    def residual(u):
        return enclosed_area(v, u, region) - alpha

    step = max(1.0, lo)
    hi = lo + step
    while residual(hi) < 0:
        step *= 2.0
        hi = lo + step
        if step > 1e4:
            raise BisectionFailure("no upper bracket for the translation parameter")

    best_u, best_r = hi, abs(residual(hi))
    it = 0
    collapsed = False
    while it < MAX_BISECTION:
        it += 1
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            collapsed = True
            break
        r = residual(mid)
        if abs(r) < best_r:
            best_u, best_r = mid, abs(r)
        if r == 0.0:
            break
        if r < 0:
            lo = mid
        else:
            hi = mid
    # A bracket down to adjacent floats has located the root as well as double
    # precision allows.  Near the chart boundary the angle at the far vertex moves
    # like exp(side length) per unit of u, so the residual there is rounding, not
    # a bug; only a jump of order one (a real discontinuity) is rejected.
    floor = COLLAPSE_TOL if collapsed else AREA_TOL
    if best_r >= floor:
        raise BisectionFailure(f"area residual {best_r:.3e} after {it} iterations at {v}")
    return best_u, it, best_r


def _build_nonpositive(v: VPoint) -> HexagonResult:
    region = classify(v)
    alpha = v.alpha
    u, iters, res = _solve_translation(v, region, alpha)
    fr = _Frame(v, u)
    w = fr.corner()
    if w is None:
        raise BisectionFailure(f"c and d do not meet at u = {u}")
    ht = _HALF_TURN.apply
    zs = [fr.U, w, fr.X, ht(fr.U), ht(w), ht(fr.X)]
    verts = tuple(HPoint.from_complex(z) for z in zs)
    c = dist(verts[0], verts[1])
    d = dist(verts[1], verts[2])

    theta = phi = c1 = c2 = None
    if region is Region.II:
        cross = HPoint.from_complex(fr.crossing())
        c1 = dist(verts[0], cross)
        c2 = dist(cross, verts[1])
        theta = interior_angle(ht(cross.z), cross.z, w)
        # defect of the right triangle cut from the corner by the perpendicular
        phi = 0.5 * math.pi - alpha - theta
    elif region is Region.III:
        theta = interior_angle(ht(fr.U), fr.U, w)
        phi = 0.0
        c1, c2 = 0.0, c

    area = 4.0 * math.pi - math.fsum(
        interior_angle(zs[k - 1], zs[k], zs[(k + 1) % 6]) for k in range(6))
    trace = ConstructionTrace(region=region, bisection_iterations=iters, translation_param=u,
                              theta=theta, phi=phi, sub_c1=c1, sub_c2=c2, residual=res)
    return HexagonResult(v=v, region=region, alpha=alpha, a=v.a, c=c, d=d, a1=v.a1, a2=v.a2,
                         vertices=verts, area=area, trace=trace)


def build_hexagon(v: VPoint) -> HexagonResult:
    """Construct the hexagon for ``v``; positive ``s`` is handled by mirroring."""
    if v.s <= 0:
        return _build_nonpositive(v)
    return mirror_hexagon(_build_nonpositive(make_vpoint(v.t, -v.s)))


def mirror_hexagon(h: HexagonResult) -> HexagonResult:
    """The hexagon for (t, -s): reflect across the common perpendicular and re-index."""
    m = _MIRROR
    vs = h.vertices
    # reflection reverses orientation, so read the image backwards starting from
    # the image of the lower end of side a
    new = tuple(m(vs[k]) for k in (5, 4, 3, 2, 1, 0))
    v = make_vpoint(h.v.t, -h.v.s)
    trace = replace(h.trace, mirrored=not h.trace.mirrored)
    return replace(h, v=v, c=h.d, d=h.c, a1=h.a2, a2=h.a1, vertices=new, trace=trace)


@dataclass(frozen=True)
class Check:
    name: str
    residual: float
    tol: float = CHECK_TOL

    @property
    def passed(self) -> bool:
        return math.isfinite(self.residual) and self.residual < self.tol


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failures(self) -> list:
        return [c for c in self.checks if not c.passed]


def verify_hexagon(h: HexagonResult, tol: float = CHECK_TOL) -> VerificationReport:
    sides = h.sides
    angles = h.angles
    expected_sides = (h.a, h.c, h.d, h.a, h.c, h.d)
    opp = max(abs(sides[k] - sides[k + 3]) for k in range(3))
    pattern = max(abs(sides[k] - expected_sides[k]) for k in range(6))
    ang = max(abs(x - y) for x, y in zip(angles, h.expected_angles))
    gb = 4.0 * math.pi - math.fsum(angles)
    area = max(abs(gb - 2.0 * h.alpha), abs(h.area - 2.0 * h.alpha))
    vs = h.vertices
    closure = max(dist(_HALF_TURN(vs[k]), vs[(k + 3) % 6]) for k in range(6))
    convex = max(max(x - math.pi, 0.0) for x in angles)
    split = max(abs(h.a1 + h.a2 - h.a), abs((h.a1 - h.a2) - 2.0 * h.v.s))
    return VerificationReport((
        Check("opposite_sides", opp, tol),
        Check("side_pattern", pattern, tol),
        Check("angle_pattern", ang, tol),
        Check("area", area, tol),
        Check("closure", max(closure, convex), tol),
        Check("a_split", split, tol),
    ))


def hexagon_from_vertices(h: HexagonResult, vertices) -> HexagonResult:
    """Copy of ``h`` with replaced vertices (used for fault injection)."""
    return replace(h, vertices=tuple(vertices))
