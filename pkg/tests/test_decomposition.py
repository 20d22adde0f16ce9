import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from fricke_hexagon.decomposition import (
    SQRT2_2,
    OutsideV,
    Region,
    bigon_area_by_quadrature,
    bigon_from_t,
    classify,
    clearance_r,
    clearance_r_prime,
    cusp_side_length,
    cusp_side_length_by_quadrature,
    make_vpoint,
    s_bound,
)

T_GRID = np.linspace(0.505, 0.995, 60)
ts = st.floats(0.5005, 0.9995)


@st.composite
def vpoints(draw):
    t = draw(ts)
    f = draw(st.floats(-0.999, 0.999))
    return make_vpoint(t, f * s_bound(t))


def test_make_vpoint():
    v = make_vpoint(0.6, 0)
    assert v.t == 0.6 and v.s == 0.0
    with pytest.raises(OutsideV, match="s < log"):
        make_vpoint(0.6, 1.0)
    with pytest.raises(OutsideV, match="-log"):
        make_vpoint(0.6, -1.0)
    with pytest.raises(OutsideV, match="1/2 < t"):
        make_vpoint(0.5, 0)
    with pytest.raises(OutsideV, match="t < 1"):
        make_vpoint(1.0, 0)


def test_bound_is_strict():
    b = s_bound(0.7)
    with pytest.raises(OutsideV):
        make_vpoint(0.7, b)
    make_vpoint(0.7, math.nextafter(b, 0))


def test_classify_examples():
    assert classify(make_vpoint(0.8, -1.0)) is Region.I
    assert classify(make_vpoint(0.8, -1.2)) is Region.II
    assert classify(make_vpoint(0.8, 0.5 * math.log(9))) is Region.III
    assert classify(make_vpoint(0.8, -0.5 * math.log(9) - 5e-10)) is Region.III
    assert classify(make_vpoint(0.8, -0.5 * math.log(9) - 5e-9)) is Region.II


@given(vpoints())
def test_classify_even(v):
    assert classify(v) is classify(make_vpoint(v.t, -v.s))


@given(vpoints())
def test_a_split(v):
    assert v.a1 + v.a2 == pytest.approx(v.a, abs=1e-12)
    assert v.a1 - v.a2 == pytest.approx(2 * v.s, abs=1e-12)


def test_bigon_examples():
    b = bigon_from_t(SQRT2_2)
    assert b.alpha == pytest.approx(math.pi / 2, abs=1e-15)
    assert b.a == pytest.approx(2 * math.log(math.sqrt(2) + 1), abs=1e-12)
    assert bigon_from_t(3 * math.sqrt(5) / 10).a == pytest.approx(
        math.log((29 + 12 * math.sqrt(5)) / 11), abs=1e-12)
    b = bigon_from_t(0.6)
    assert b.alpha == pytest.approx(2 * math.acos(0.6))
    assert b.alpha == pytest.approx(1.854590, abs=1e-6)
    assert b.a == pytest.approx(math.log(4), abs=1e-15)
    with pytest.raises(OutsideV):
        bigon_from_t(0.4)


def test_bigon_angle_range():
    for t in T_GRID:
        b = bigon_from_t(t)
        assert 0 < b.alpha < 2 * math.pi / 3
        assert b.a > 0


def test_side_length_two_ways():
    # log((1+t)/(1-t)) against the cusp-angle form and against direct quadrature
    for t in T_GRID:
        b = bigon_from_t(t)
        assert cusp_side_length(b.alpha) == pytest.approx(b.a, abs=1e-12)
        assert cusp_side_length_by_quadrature(b.alpha) == pytest.approx(b.a, abs=1e-10)


@pytest.mark.parametrize("t", [0.55, 0.65, SQRT2_2, 0.8, 0.95])
def test_bigon_area_quadrature(t):
    assert bigon_area_by_quadrature(t) == pytest.approx(bigon_from_t(t).area, abs=1e-8)


def test_clearance_examples():
    assert clearance_r(SQRT2_2) < 1e-12
    assert clearance_r_prime(SQRT2_2) < 1e-12
    assert clearance_r(0.6) == pytest.approx(math.log(4 / 3), abs=1e-14)
    # 0.5 log 0.45 + 0.5 log 1.55 - log 0.55
    assert clearance_r(0.55) == pytest.approx(0.417711, abs=1e-6)
    assert clearance_r_prime(0.8) == pytest.approx(math.log(4 / 3), abs=1e-14)
    # log(0.9 / sqrt(0.19))
    assert clearance_r_prime(0.9) == pytest.approx(0.725005, abs=1e-6)


def test_clearance_clamped():
    assert clearance_r(0.9) == 0.0
    assert clearance_r_prime(0.6) == 0.0


def test_clearance_is_angle_of_parallelism():
    # r is the distance at which the angle of parallelism equals pi - alpha
    for t in T_GRID[T_GRID < SQRT2_2]:
        alpha = bigon_from_t(t).alpha
        assert clearance_r(t) == pytest.approx(-math.log(math.tan(0.5 * (math.pi - alpha))),
                                               abs=1e-12)
    for t in T_GRID[T_GRID > SQRT2_2]:
        alpha = bigon_from_t(t).alpha
        assert clearance_r_prime(t) == pytest.approx(-math.log(math.tan(0.5 * alpha)), abs=1e-12)


def test_clearance_formulas_negate():
    from fricke_hexagon.decomposition import _r_formula
    for t in T_GRID:
        r = _r_formula(t)
        assert (clearance_r(t) if t < SQRT2_2 else -clearance_r_prime(t)) == pytest.approx(
            r, abs=1e-15)


@given(vpoints())
def test_type1_clearance(v):
    if classify(v) is Region.I and v.t < SQRT2_2:
        r = clearance_r(v.t)
        assert v.a1 > r and v.a2 > r


@given(vpoints())
def test_type2_window(v):
    if classify(v) is Region.II:
        excess = abs(v.s) - 0.5 * v.a
        assert 0 < excess < clearance_r_prime(v.t)
