"""Polygon-decomposition coordinates for the Fricke space of the once-punctured torus.

The binding curve A^3 B^2 cuts every marked hyperbolic structure into a
punctured bigon and a hexagon with equal opposite sides.  A chart point
(t, s) determines both pieces; this package constructs them, evaluates the
length a + b + c + d of the curve, and checks the minimum against an
independent computation in trace coordinates.
"""

from .decomposition import (
    OutsideV,
    PuncturedBigon,
    Region,
    VPoint,
    bigon_from_t,
    classify,
    clearance_r,
    clearance_r_prime,
    make_vpoint,
)
from .hexagon import HexagonResult, build_hexagon, mirror_hexagon, verify_hexagon
from .lengths import axis_length, c_closed_form, minimize, quarter_hexagon_check, total_length
from .oracle import A3B2, GroupWord, oracle_min_length, solve_z, trace_word, word_length

__all__ = [
    "OutsideV",
    "PuncturedBigon",
    "Region",
    "VPoint",
    "bigon_from_t",
    "classify",
    "clearance_r",
    "clearance_r_prime",
    "make_vpoint",
    "HexagonResult",
    "build_hexagon",
    "mirror_hexagon",
    "verify_hexagon",
    "axis_length",
    "c_closed_form",
    "minimize",
    "quarter_hexagon_check",
    "total_length",
    "A3B2",
    "GroupWord",
    "oracle_min_length",
    "solve_z",
    "trace_word",
    "word_length",
]
