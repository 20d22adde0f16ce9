"""JSON, CSV and SVG output for hexagons and sweeps."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, field
from xml.sax.saxutils import escape

import numpy as np

from .decomposition import OutsideV, classify, make_vpoint, s_bound
from .hexagon import HexagonResult
from .hplane import INF, Geodesic, geodesic_through, ideal_to_disk, to_disk
from .lengths import total_length

SWEEP_HEADER = ("t", "s", "region", "a", "c", "d", "total")


@dataclass(frozen=True)
class HexagonDocument:
    t: float
    s: float
    region: str
    alpha: float
    a: float
    c: float
    d: float
    a1: float
    a2: float
    total: float
    area: float
    vertices: tuple  # disk coordinates, pairs
    construction: dict = field(default_factory=dict)

    @classmethod
    def from_result(cls, h: HexagonResult) -> "HexagonDocument":
        pts = tuple((w.real, w.imag) for w in (to_disk(p) for p in h.vertices))
        return cls(t=h.v.t, s=h.v.s, region=h.region.value, alpha=h.alpha, a=h.a, c=h.c,
                   d=h.d, a1=h.a1, a2=h.a2, total=h.total, area=h.area, vertices=pts,
                   construction={"iterations": h.trace.bisection_iterations,
                                 "translation_param": h.trace.translation_param})

    def to_json(self, indent: int | None = 2) -> str:
        d = asdict(self)
        d["vertices"] = [list(p) for p in self.vertices]
        return json.dumps(d, indent=indent)

    @classmethod
    def from_json(cls, text: str) -> "HexagonDocument":
        d = json.loads(text)
        d["vertices"] = tuple(tuple(p) for p in d["vertices"])
        return cls(**d)


@dataclass(frozen=True)
class SweepRow:
    t: float
    s: float
    region: str
    a: float
    c: float
    d: float
    total: float


def sweep_grid(t_lo: float, t_hi: float, t_steps: int, s_steps: int) -> list[SweepRow]:
    """Rows sorted by t then s; s avoids the chart boundary by one step on each side."""
    if t_steps < 2 or s_steps < 2:
        raise ValueError("need at least 2 steps in each direction")
    rows = []
    for t in np.linspace(t_lo, t_hi, t_steps):
        t = float(t)
        try:
            b = s_bound(t)
            make_vpoint(t, 0.0)
        except (OutsideV, ValueError):
            continue
        for s in np.linspace(-b, b, s_steps + 2)[1:-1]:
            try:
                v = make_vpoint(t, float(s))
            except OutsideV:
                continue
            rep = total_length(v)
            rows.append(SweepRow(t, v.s, classify(v).value, rep.a, rep.c, rep.d, rep.total))
    return rows


def write_csv(rows, fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(SWEEP_HEADER)
    for r in rows:
        w.writerow([repr(r.t), repr(r.s), r.region, repr(r.a), repr(r.c), repr(r.d),
                    repr(r.total)])


def read_csv(fh) -> list[SweepRow]:
    rdr = csv.DictReader(fh)
    if tuple(rdr.fieldnames or ()) != SWEEP_HEADER:
        raise ValueError(f"unexpected header {rdr.fieldnames}")
    out = []
    for rec in rdr:
        make_vpoint(float(rec["t"]), float(rec["s"]))  # re-validate
        out.append(SweepRow(float(rec["t"]), float(rec["s"]), rec["region"],
                            *(float(rec[k]) for k in ("a", "c", "d", "total"))))
    return out


# -- SVG ------------------------------------------------------------------

def _svg_xy(w: complex) -> tuple[float, float]:
    return w.real, -w.imag


def _arc_path(p: complex, q: complex, g: Geodesic) -> str:
    """SVG path for the disk geodesic arc from p to q (disk points)."""
    e1, e2 = ideal_to_disk(g.e1), ideal_to_disk(g.e2)
    px, py = _svg_xy(p)
    qx, qy = _svg_xy(q)
    s = e1 + e2
    if abs(s) < 1e-12:
        return f"M {px:.9g} {py:.9g} L {qx:.9g} {qy:.9g}"
    center = 2.0 * e1 * e2 / s
    # tangents at e1 and e2 meet at center; a circle through them orthogonal to |w| = 1
    r = abs(center - e1)
    if r > 1e6:
        return f"M {px:.9g} {py:.9g} L {qx:.9g} {qy:.9g}"
    cx, cy = _svg_xy(center)
    cross = (px - cx) * (qy - cy) - (py - cy) * (qx - cx)
    sweep = 1 if cross > 0 else 0
    return f"M {px:.9g} {py:.9g} A {r:.9g} {r:.9g} 0 0 {sweep} {qx:.9g} {qy:.9g}"


def hexagon_svg(h: HexagonResult, size: int = 480) -> str:
    vs = h.vertices
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{size}" '
        f'height="{size}" viewBox="-1.05 -1.05 2.1 2.1">',
        f"<title>{escape(f'hexagon t={h.v.t:.12g} s={h.v.s:.12g} region {h.region.value}')}</title>",
        '<circle class="boundary" cx="0" cy="0" r="1" fill="none" stroke="black" '
        'stroke-width="0.005"/>',
    ]
    # the common perpendicular of a and b, through the centre of the half-turn
    axis = Geodesic(0.0, INF)
    a0, a1 = ideal_to_disk(axis.e1), ideal_to_disk(axis.e2)
    parts.append(f'<path class="axis" d="{_arc_path(a0, a1, axis)}" fill="none" '
                 'stroke="gray" stroke-dasharray="0.02 0.02" stroke-width="0.004"/>')
    names = ("a", "c", "d", "b", "c'", "d'")
    for k in range(6):
        p, q = vs[k - 1], vs[k]
        g = geodesic_through(p, q)
        d = _arc_path(to_disk(p), to_disk(q), g)
        parts.append(f'<path class="side" data-side="{escape(names[k])}" d="{d}" fill="none" '
                     'stroke="navy" stroke-width="0.008"/>')
    for p in vs:
        x, y = _svg_xy(to_disk(p))
        if math.isfinite(x) and math.isfinite(y):
            parts.append(f'<circle class="vertex" cx="{x:.9g}" cy="{y:.9g}" r="0.012"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def csv_text(rows) -> str:
    buf = io.StringIO()
    write_csv(rows, buf)
    return buf.getvalue()
