import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from fricke_hexagon.lengths import minimize
from fricke_hexagon.oracle import (
    A3B2,
    GroupWord,
    Infeasible,
    NotHyperbolic,
    TraceTriple,
    commutator_trace,
    matrix_lift,
    oracle_min_length,
    solve_z,
    trace_word,
    triple,
    word_length,
    word_matrix,
)


def test_parse():
    assert GroupWord.parse("A3B2") == A3B2
    assert GroupWord.parse("A^3 B^2") == A3B2
    assert GroupWord.parse("AAABB") == A3B2
    assert str(GroupWord.parse("ABA2")) == "ABAA"
    with pytest.raises(ValueError):
        GroupWord.parse("AC")
    with pytest.raises(ValueError):
        GroupWord("")


def test_solve_z_examples():
    # over (3, 3) the two roots are the Markov triples (3, 3, 3) and (3, 3, 6)
    assert solve_z(3, 3, branch=-1) == pytest.approx(3, abs=1e-12)
    assert solve_z(3, 3) == pytest.approx(6, abs=1e-12)
    assert solve_z(3, 4) == pytest.approx(6 + math.sqrt(11), abs=1e-12)
    assert solve_z(3, 6, branch=-1) == 3.0
    assert solve_z(3, 6) == 15.0
    with pytest.raises(Infeasible):
        solve_z(2.1, 2.1)
    with pytest.raises(Infeasible):
        solve_z(2.0, 5.0)


def test_small_root_accuracy():
    # the product of the roots is x^2 + y^2, even where xy - sqrt(disc) cancels
    x, y = 1e4, 3e4
    small, big = solve_z(x, y, -1), solve_z(x, y, 1)
    assert small * big == pytest.approx(x * x + y * y, rel=1e-14)
    assert small + big == pytest.approx(x * y, rel=1e-14)


def test_trace_examples():
    t = triple(3, 3, branch=-1)
    assert t == TraceTriple(3, 3, 3.0)
    t = TraceTriple(3, 3, 3)
    assert trace_word(t, GroupWord("AB")) == 3
    assert trace_word(t, GroupWord("A")) == 3
    assert trace_word(t, GroupWord("B")) == 3
    assert trace_word(t, A3B2) == 27
    assert trace_word(t, GroupWord("AAB")) == 6
    assert trace_word(t, GroupWord("AAAB")) == 15
    assert word_length(t, A3B2) == pytest.approx(2 * math.acosh(13.5), abs=1e-14)
    assert word_length(t, A3B2) == pytest.approx(6.588925, abs=1e-6)


def test_trace_integer_exact():
    # integer Markov triples give integer traces with no rounding
    t = TraceTriple(3, 6, 3)
    assert t.markov_residual() == 0
    assert trace_word(t, A3B2) == 18
    assert trace_word(TraceTriple(3, 6, 15), A3B2) == 594
    assert isinstance(trace_word(t, A3B2), int)


def test_not_hyperbolic():
    # off the relation, so a parabolic A can be fed in directly
    t = TraceTriple(2.0, 3.0, 3.0)
    with pytest.raises(NotHyperbolic):
        word_length(t, GroupWord("A"))


def test_matrix_lift_commutator():
    for xy in [(3, 3), (3, 4), (5, 7.5)]:
        mats = matrix_lift(triple(*xy))
        assert commutator_trace(mats) == pytest.approx(-2, abs=1e-9)
        for m in mats:
            assert np.linalg.det(m) == pytest.approx(1, abs=1e-12)


feasible = st.tuples(st.floats(2.5, 9), st.floats(2.5, 9)).filter(
    lambda p: p[0] * p[0] * p[1] * p[1] - 4 * (p[0] ** 2 + p[1] ** 2) > 1e-3)


@given(feasible, st.sampled_from([1, -1]))
def test_recursion_matches_matrices(p, branch):
    t = triple(p[0], p[1], branch)
    mats = matrix_lift(t)
    for w in ("AB", "AAABB", "ABB", "AABAB", "BBBAA"):
        gw = GroupWord(w)
        got = trace_word(t, gw)
        ref = float(np.trace(word_matrix(mats, gw)))
        assert got == pytest.approx(ref, rel=1e-8, abs=1e-8)


def test_random_triples_matrix_lift():
    rng = np.random.default_rng(11)
    n = 0
    while n < 20:
        x, y = rng.uniform(2.2, 10, 2)
        try:
            t = triple(x, y, 1 if n % 2 else -1)
        except Infeasible:
            continue
        ref = float(np.trace(word_matrix(matrix_lift(t), A3B2)))
        assert abs(trace_word(t, A3B2) - ref) <= 1e-8 * max(1.0, abs(ref))
        n += 1


def test_cyclic_invariance():
    t = triple(3.3, 4.1)
    base = trace_word(t, A3B2)
    for k in range(5):
        w = A3B2.letters[k:] + A3B2.letters[:k]
        assert trace_word(t, GroupWord(w)) == pytest.approx(base, rel=1e-12)


def test_oracle_minimum():
    r = oracle_min_length()
    assert 5.7740 <= r.min_length <= 5.7750
    assert abs(r.min_length - minimize().length_min) < 1e-4
    assert not r.boundary_drift
    assert (r.x, r.y, r.z) == pytest.approx((3, 6, 3), abs=1e-3)
    assert r.branch == -1
    assert abs(r.trace_triple.markov_residual()) < 1e-6


def test_oracle_seed_stable():
    a = oracle_min_length(starts=10, seed=1)
    b = oracle_min_length(starts=10, seed=2)
    assert a.min_length == pytest.approx(b.min_length, abs=1e-6)


def test_non_filling_words_drift():
    # AB and A do not bind: their lengths can be pinched and the search runs off
    r = oracle_min_length(GroupWord("AB"), starts=6)
    assert r.boundary_drift
    assert r.x == pytest.approx(r.y, rel=1e-3)
    r = oracle_min_length(GroupWord("A"), starts=6)
    assert r.boundary_drift
