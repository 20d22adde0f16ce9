"""Invariant suites run by ``fricke-hexagon verify``.

Each suite returns named checks with a residual and a tolerance; a suite
passes when every residual is below its tolerance.
"""

from __future__ import annotations

import contextlib
import math
from dataclasses import dataclass, field

import numpy as np

from . import decomposition
from .decomposition import (
    SQRT2_2,
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
from .hexagon import build_hexagon, verify_hexagon
from .lengths import (
    ALL_CASES,
    T_MIN_EXACT,
    axis_length,
    c_closed_form,
    c_parts,
    divergence_check,
    minimize,
    quarter_hexagon_check,
    total_length,
)
from .oracle import A3B2, commutator_trace, matrix_lift, trace_word, triple, word_matrix


@dataclass
class SuiteResult:
    name: str
    checks: list = field(default_factory=list)  # (label, residual, tol)

    def add(self, label: str, residual: float, tol: float) -> None:
        self.checks.append((label, float(residual), tol))

    @property
    def passed(self) -> bool:
        return all(r < tol for _, r, tol in self.checks)

    @property
    def max_residual(self) -> float:
        return max((r for _, r, _ in self.checks), default=0.0)

    def first_failure(self):
        for c in self.checks:
            if not c[1] < c[2]:
                return c
        return None


def chart_grid(n: int):
    """n x n interior grid: t uniform in (1/2, 1), s uniform in (-B(t), B(t))."""
    for t in np.linspace(0.5, 1.0, n + 2)[1:-1]:
        b = s_bound(float(t))
        for f in (np.arange(n) + 0.5) / n:
            yield make_vpoint(float(t), float((2.0 * f - 1.0) * b))


def suite_hexagon(n: int) -> SuiteResult:
    res = SuiteResult("hexagon")
    worst = {}
    for v in chart_grid(n):
        for chk in verify_hexagon(build_hexagon(v)).checks:
            worst[chk.name] = max(worst.get(chk.name, 0.0), chk.residual)
    for name, r in worst.items():
        res.add(name, r, 1e-9)
    # axis symmetry on s = 0
    sym = max(abs(h.c - h.d) for h in (build_hexagon(make_vpoint(t, 0.0))
                                        for t in np.linspace(0.51, 0.99, n)))
    res.add("c_equals_d_on_axis", sym, 1e-9)
    # Type II split of the long side
    split = 0.0
    for v in chart_grid(n):
        if classify(v) is Region.II:
            h = build_hexagon(v)
            side = h.c if v.s < 0 else h.d
            split = max(split, abs(h.trace.sub_c1 + h.trace.sub_c2 - side))
    res.add("type2_split", split, 1e-9)
    return res


def suite_bigon(n: int) -> SuiteResult:
    res = SuiteResult("bigon")
    ts = np.linspace(0.51, 0.99, max(n, 2))
    res.add("cusp_side_quadrature",
            max(abs(cusp_side_length_by_quadrature(bigon_from_t(t).alpha) - bigon_from_t(t).a)
                for t in ts), 1e-9)
    res.add("area_quadrature",
            max(abs(bigon_area_by_quadrature(t) - bigon_from_t(t).area) for t in ts), 1e-6)
    res.add("area_closure",
            max(abs(bigon_area_by_quadrature(t) + build_hexagon(make_vpoint(t, 0.0)).area
                    - 2 * math.pi) for t in ts), 1e-6)
    res.add("sqrt2_side", abs(bigon_from_t(SQRT2_2).a - 2 * math.log(math.sqrt(2) + 1)), 1e-12)
    res.add("side_from_angle",
            max(abs(cusp_side_length(bigon_from_t(t).alpha) - bigon_from_t(t).a) for t in ts),
            1e-9)
    return res


def suite_clearance(n: int) -> SuiteResult:
    res = SuiteResult("clearance")
    res.add("r_vanishes", abs(clearance_r(SQRT2_2)), 1e-12)
    res.add("r_prime_vanishes", abs(clearance_r_prime(SQRT2_2)), 1e-12)
    lo = np.linspace(0.51, SQRT2_2 - 1e-3, n)
    hi = np.linspace(SQRT2_2 + 1e-3, 0.99, n)
    # angle of parallelism: r is the distance at which pi - alpha becomes asymptotic
    res.add("r_parallelism",
            max(abs(clearance_r(t) + math.log(math.tan(0.5 * (math.pi - 2 * math.acos(t)))))
                for t in lo), 1e-9)
    res.add("r_prime_parallelism",
            max(abs(clearance_r_prime(t) + math.log(math.tan(math.acos(t)))) for t in hi), 1e-9)
    # region I points keep both pieces of a beyond r
    slack = math.inf
    for v in chart_grid(n):
        if v.t < SQRT2_2 and classify(v) is Region.I:
            r = clearance_r(v.t)
            slack = min(slack, v.a1 - r, v.a2 - r)
    res.add("type1_clearance", 0.0 if slack > 0 else 1.0, 0.5)
    return res


def suite_lengths(n: int) -> SuiteResult:
    res = SuiteResult("lengths")
    ts = np.linspace(0.51, 0.99, max(n, 2))
    res.add("axis_vs_construction",
            max(abs(axis_length(t) - total_length(make_vpoint(t, 0.0)).total) for t in ts), 1e-8)
    res.add("c_vs_construction",
            max(abs(c_closed_form(t) - build_hexagon(make_vpoint(t, 0.0)).c) for t in ts), 1e-8)
    res.add("axis_identity",
            max(abs(axis_length(t) - 2 * bigon_from_t(t).a - 2 * c_closed_form(t)) for t in ts),
            1e-12)
    low = np.linspace(0.51, 0.70, max(n, 2))
    res.add("c_parts_sum", max(abs(sum(c_parts(t)) - c_closed_form(t)) for t in low), 1e-12)
    res.add("quarter_relations", max(quarter_hexagon_check(t).max_residual for t in low), 1e-8)
    ev = 0.0
    for v in chart_grid(max(n // 2, 2)):
        ev = max(ev, abs(total_length(v).total - total_length(make_vpoint(v.t, -v.s)).total))
    res.add("evenness", ev, 1e-9)
    m = minimize()
    res.add("t0", abs(m.t0 - T_MIN_EXACT), 1e-6)
    res.add("length_min", abs(m.length_min - 2 * math.log(9 + 4 * math.sqrt(5))), 1e-8)
    res.add("even_probes", 0.0 if m.even_in_s else 1.0, 0.5)
    return res


def suite_oracle(n: int) -> SuiteResult:
    res = SuiteResult("oracle")
    rng = np.random.default_rng(1)
    worst_m = worst_tr = worst_c = 0.0
    for _ in range(max(n, 5)):
        x, y = rng.uniform(2.9, 8.0, size=2)
        tt = triple(float(x), float(y), 1 if rng.random() < 0.5 else -1)
        worst_m = max(worst_m, abs(tt.markov_residual()) / (tt.x * tt.y * tt.z))
        mats = matrix_lift(tt)
        ref = trace_word(tt, A3B2)
        worst_tr = max(worst_tr, abs(np.trace(word_matrix(mats, A3B2)) - ref) / abs(ref))
        worst_c = max(worst_c, abs(commutator_trace(mats) + 2.0))
    res.add("markov", worst_m, 1e-10)
    res.add("recursion_vs_matrix", worst_tr, 1e-8)
    res.add("commutator", worst_c, 1e-8)
    from .oracle import TraceTriple
    res.add("markov_27", abs(trace_word(TraceTriple(3, 3, 3), A3B2) - 27), 0.5)
    return res


def suite_probes(k_max: int = 200, bound: float = 30.0) -> SuiteResult:
    res = SuiteResult("probes")
    for case in ALL_CASES:
        ok = divergence_check(case, bound, k_max)
        res.add(f"diverges_{case.tag.value}", 0.0 if ok else 1.0, 0.5)
    return res


SUITES = {
    "hexagon": suite_hexagon,
    "bigon": suite_bigon,
    "clearance": suite_clearance,
    "lengths": suite_lengths,
    "oracle": suite_oracle,
}


def run_all(n: int, probes: bool = False) -> list[SuiteResult]:
    if n < 2:
        raise ValueError("grid size must be at least 2")
    out = [fn(n) for fn in SUITES.values()]
    if probes:
        out.append(suite_probes())
    return out


@contextlib.contextmanager
def flipped_clearance_sign():
    """Fault injection: negate the clearance formula for the duration of the block."""
    orig = decomposition._r_formula
    decomposition._r_formula = lambda t: -orig(t)
    try:
        yield
    finally:
        decomposition._r_formula = orig
