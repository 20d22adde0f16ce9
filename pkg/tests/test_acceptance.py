"""Acceptance suite, one test per criterion.

Each test prints a single ``[criterion n] PASS|FAIL ...`` line (shown even when
pytest captures output) and then asserts.  Run directly with
``python3 tests/test_acceptance.py`` for the summary alone.
"""

import math
import sys
import time

import numpy as np
import pytest

from fricke_hexagon.decomposition import (
    SQRT2_2,
    _r_formula,
    Region,
    bigon_area_by_quadrature,
    bigon_from_t,
    classify,
    clearance_r,
    clearance_r_prime,
    make_vpoint,
    s_bound,
)
from fricke_hexagon.hexagon import build_hexagon, verify_hexagon
from fricke_hexagon.lengths import (
    ALL_CASES,
    axis_length,
    boundary_lengths,
    c_closed_form,
    minimize,
    quarter_hexagon_check,
    total_length,
)
from fricke_hexagon.oracle import A3B2, TraceTriple, matrix_lift, oracle_min_length, trace_word, word_matrix

R5 = math.sqrt(5)
L_MIN = 2 * (math.log((29 + 12 * R5) / 11) + math.log((21 + 8 * R5) / 11))


class _Printer:
    capsys = None

    def __call__(self, n, ok, detail):
        line = f"[criterion {n}] {'PASS' if ok else 'FAIL'}  {detail}"
        if self.capsys is not None:
            with self.capsys.disabled():
                print("\n" + line)
        else:
            print(line)
        return ok


verdict = _Printer()


@pytest.fixture(autouse=True)
def _show(capsys):
    verdict.capsys = capsys
    yield
    verdict.capsys = None


def test_criterion_1_minimizer():
    t0 = time.perf_counter()
    m = minimize()
    dt = time.perf_counter() - t0
    dt0, dl = abs(m.t0 - 3 * R5 / 10), abs(m.length_min - L_MIN)
    ok = dt0 < 1e-6 and dl < 1e-8 and dt < 1.0
    assert verdict(1, ok, f"|t0 - 3r5/10| = {dt0:.2e}, |L - L*| = {dl:.2e}, {dt:.3f} s")


def test_criterion_2_closed_forms():
    t0 = time.perf_counter()
    dc = dl = 0.0
    for t in np.linspace(0.51, 0.99, 50):
        h = build_hexagon(make_vpoint(t, 0.0))
        dc = max(dc, abs(h.c - c_closed_form(t)))
        dl = max(dl, abs(total_length(make_vpoint(t, 0.0)).total - axis_length(t)))
    dt = time.perf_counter() - t0
    ok = dc < 1e-8 and dl < 1e-8 and dt < 10.0
    assert verdict(2, ok, f"max |dc| = {dc:.2e}, max |dL| = {dl:.2e}, {dt:.2f} s")


def test_criterion_3_oracle():
    t0 = time.perf_counter()
    r = oracle_min_length(A3B2)
    dt = time.perf_counter() - t0
    gap = abs(r.min_length - minimize().length_min)
    ok = gap < 1e-4 and dt < 30.0
    assert verdict(3, ok, f"oracle {r.min_length:.10f} at ({r.x:.4f}, {r.y:.4f}, {r.z:.4f}), "
                          f"gap {gap:.2e}, {dt:.2f} s")


def test_criterion_4_hexagon_invariants():
    worst = {"opposite_sides": 0.0, "angle_pattern": 0.0, "area": 0.0}
    n = 0
    for t in np.linspace(0.5, 1.0, 42)[1:-1]:
        b = s_bound(t)
        for f in np.linspace(0.0, 1.0, 42)[1:-1]:
            rep = verify_hexagon(build_hexagon(make_vpoint(t, (2 * f - 1) * b)))
            for k in worst:
                worst[k] = max(worst[k], rep[k].residual)
            n += 1
    ok = n == 1600 and all(r < 1e-9 for r in worst.values())
    detail = ", ".join(f"{k} {v:.1e}" for k, v in worst.items())
    assert verdict(4, ok, f"{n} hexagons, worst {detail}")


def test_criterion_5_clearance():
    r0, rp0 = clearance_r(SQRT2_2), clearance_r_prime(SQRT2_2)
    # the clamp would hide a wrong formula, so test the raw expression too
    raw = abs(_r_formula(SQRT2_2))
    samples, margin = 0, math.inf
    for t in np.linspace(0.505, SQRT2_2, 40, endpoint=False):
        b, r = s_bound(t), clearance_r(t)
        for f in np.linspace(-0.999, 0.999, 41):
            v = make_vpoint(t, f * b)
            if classify(v) is Region.I:
                samples += 1
                margin = min(margin, v.a1 - r, v.a2 - r)
    ok = r0 < 1e-12 and rp0 < 1e-12 and raw < 1e-12 and samples > 0 and margin > 0
    assert verdict(5, ok, f"r = {r0:.1e}, r' = {rp0:.1e}, unclamped {raw:.1e} at sqrt2/2; "
                          f"{samples} region I samples, min(a_i - r) = {margin:.3e}")


def test_criterion_6_quarter_hexagon():
    worst = max(quarter_hexagon_check(t).max_residual for t in np.linspace(0.51, 0.70, 20))
    assert verdict(6, worst < 1e-8, f"20 values of t, worst residual {worst:.2e}")


def _increasing_tail(totals):
    # index from which every later step is a strict increase
    k = len(totals) - 1
    while k > 0 and totals[k] > totals[k - 1]:
        k -= 1
    return k


def test_criterion_7_properness():
    parts, ok = [], True
    for case in ALL_CASES:
        rows = boundary_lengths(case, 200)
        totals = [tt for _, _, tt in rows]
        start = _increasing_tail(totals)
        good = max(totals) > 30 and len(totals) - start >= 10 and totals[-1] > 30
        ok &= good
        parts.append(f"{case.tag.value} max {max(totals):.1f} (increasing from k={start + 1})")
    assert verdict(7, ok, "; ".join(parts))


def test_criterion_8_cusp_constants():
    da = abs(bigon_from_t(SQRT2_2).a - 2 * math.log(math.sqrt(2) + 1))
    worst = 0.0
    for t in np.linspace(0.52, 0.98, 12):
        h = build_hexagon(make_vpoint(t, 0.4 * s_bound(t)))
        worst = max(worst, abs(bigon_area_by_quadrature(t) + h.area - 2 * math.pi))
    ok = da < 1e-12 and worst < 1e-6
    assert verdict(8, ok, f"|a - 2 log(r2+1)| = {da:.1e}, worst area gap {worst:.1e} on 12 t")


def test_criterion_9_trace_recursion():
    t = TraceTriple(3, 3, 3)
    exact = trace_word(t, A3B2)
    lifted = float(np.trace(word_matrix(matrix_lift(t), A3B2)))
    ok = exact == 27 and isinstance(exact, int) and abs(lifted - 27) < 1e-8
    assert verdict(9, ok, f"recursion {exact!r}, matrix lift {lifted:.12f}")


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
