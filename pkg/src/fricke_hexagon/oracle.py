"""Trace coordinates on the once-punctured torus, used as an independent check.

A point is a triple (x, y, z) = (tr A, tr B, tr AB) with x^2 + y^2 + z^2 = xyz,
i.e. tr[A, B] = -2.  Word traces come from the Cayley-Hamilton recursion
tr(UX^2) = tr(UX) tr(X) - tr(U); lengths from 2 arccosh(|tr|/2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import optimize


class Infeasible(ValueError):
    """No real triple over (x, y): negative discriminant or traces not > 2."""


class NotHyperbolic(ValueError):
    pass


@dataclass(frozen=True)
class TraceTriple:
    x: float
    y: float
    z: float

    def markov_residual(self) -> float:
        x, y, z = self.x, self.y, self.z
        return x * x + y * y + z * z - x * y * z

    def check(self, tol: float = 1e-9) -> "TraceTriple":
        if not (self.x > 2 and self.y > 2 and self.z > 2):
            raise Infeasible(f"traces must exceed 2: {self}")
        scale = max(1.0, abs(self.x * self.y * self.z))
        if abs(self.markov_residual()) > tol * scale:
            raise Infeasible(f"x^2 + y^2 + z^2 != xyz for {self}")
        return self


@dataclass(frozen=True)
class GroupWord:
    letters: str

    def __post_init__(self):
        if not self.letters or set(self.letters) - {"A", "B"}:
            raise ValueError(f"word must be a nonempty string over A, B: {self.letters!r}")

    @classmethod
    def parse(cls, text: str) -> "GroupWord":
        """Accepts 'AAABB', 'A3B2', 'A^3B^2' or 'A^3 B^2'."""
        out, i = [], 0
        text = text.replace(" ", "").replace("^", "").replace("³", "3").replace("²", "2")
        while i < len(text):
            ch = text[i]
            if ch not in "AB":
                raise ValueError(f"unexpected {ch!r} in word {text!r}")
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            n = int(text[i + 1:j]) if j > i + 1 else 1
            if n < 1:
                raise ValueError("exponents must be positive")
            out.append(ch * n)
            i = j
        return cls("".join(out))

    def __str__(self):
        return self.letters


A3B2 = GroupWord("AAABB")


def discriminant(x: float, y: float) -> float:
    return x * x * y * y - 4.0 * (x * x + y * y)


def solve_z(x: float, y: float, branch: int = 1) -> float:
    """Root of z^2 - xyz + x^2 + y^2 = 0; ``branch=+1`` is the larger, -1 the smaller."""
    if not (x > 2 and y > 2):
        raise Infeasible(f"need x, y > 2, got ({x}, {y})")
    disc = discriminant(x, y)
    if disc < 0:
        raise Infeasible(f"discriminant {disc:.6g} < 0 at ({x}, {y})")
    root = math.sqrt(disc)
    big = 0.5 * (x * y + root)
    if branch > 0:
        return big
    # product of the roots is x^2 + y^2; avoids cancellation in xy - root
    return (x * x + y * y) / big


def triple(x: float, y: float, branch: int = 1) -> TraceTriple:
    return TraceTriple(x, y, solve_z(x, y, branch)).check()


def _rotate_to_square(w: str) -> str | None:
    """A cyclic rotation of ``w`` ending in a repeated letter, or None for (AB)^k."""
    n = len(w)
    for k in range(n):
        r = w[k:] + w[:k]
        if r[-1] == r[-2]:
            return r
    return None


@lru_cache(maxsize=4096)
def _tr(w: str, x, y, z):
    n = len(w)
    if n == 0:
        return 2
    if n == 1:
        return x if w == "A" else y
    if set(w) == {"A"} or set(w) == {"B"}:
        return _chebyshev(x if w[0] == "A" else y, n)
    r = _rotate_to_square(w)
    if r is None:
        # alternating word, (AB)^k
        return _chebyshev(z, n // 2)
    u, letter = r[:-2], r[-1]
    lt = x if letter == "A" else y
    return _tr(u + letter, x, y, z) * lt - _tr(u, x, y, z)


def _chebyshev(t, n: int):
    """tr(X^n) from tr X = t."""
    prev, cur = 2, t
    for _ in range(n - 1):
        prev, cur = cur, t * cur - prev
    return cur


def trace_word(tr: TraceTriple, w: GroupWord):
    """Trace of the word; exact when the triple holds integers."""
    return _tr(w.letters, tr.x, tr.y, tr.z)


def word_length(tr: TraceTriple, w: GroupWord) -> float:
    t = abs(trace_word(tr, w))
    if not t > 2:
        raise NotHyperbolic(f"|trace| = {t} <= 2 for {w}")
    return 2.0 * math.acosh(0.5 * t)


def matrix_lift(tr: TraceTriple) -> tuple[np.ndarray, np.ndarray]:
    x, y, z = float(tr.x), float(tr.y), float(tr.z)
    if not z > 2:
        raise Infeasible("matrix lift needs z > 2")
    b = 0.5 * (-z - math.sqrt(z * z - 4.0))
    a_mat = np.array([[x, 1.0], [-1.0, 0.0]])
    b_mat = np.array([[0.0, b], [-1.0 / b, y]])
    return a_mat, b_mat


def word_matrix(mats, w: GroupWord) -> np.ndarray:
    a_mat, b_mat = mats
    out = np.eye(2)
    for ch in w.letters:
        out = out @ (a_mat if ch == "A" else b_mat)
    return out


def commutator_trace(mats) -> float:
    a_mat, b_mat = mats
    c = a_mat @ b_mat @ np.linalg.inv(a_mat) @ np.linalg.inv(b_mat)
    return float(np.trace(c))


@dataclass(frozen=True)
class OracleResult:
    x: float
    y: float
    z: float
    branch: int
    min_length: float
    evaluations: int
    boundary_drift: bool

    @property
    def trace_triple(self) -> TraceTriple:
        return TraceTriple(self.x, self.y, self.z)


_BOX = (2.0, 1e6)


def _objective(w: GroupWord, branch: int):
    def f(p):
        x, y = p
        if not (_BOX[0] < x < _BOX[1] and _BOX[0] < y < _BOX[1]):
            return math.inf
        try:
            return word_length(triple(x, y, branch), w)
        except (Infeasible, NotHyperbolic):
            return math.inf
    return f


def _random_start(rng, lo=2.2, hi=12.0):
    while True:
        x, y = (float(c) for c in rng.uniform(lo, hi, size=2))
        if discriminant(x, y) > 0:
            return np.array([x, y])


def oracle_min_length(w: GroupWord = A3B2, starts: int = 20, seed: int = 0,
                      fatol: float = 1e-10) -> OracleResult:
    """Multi-start Nelder-Mead over feasible (x, y) on both root sheets of z.

    Starts alternate between the sheets, so each sheet gets ``starts // 2``.
    """
    rng = np.random.default_rng(seed)
    best = None
    nfev = 0
    for k in range(starts):
        branch = 1 if k % 2 == 0 else -1
        f = _objective(w, branch)
        x0 = _random_start(rng)
        res = optimize.minimize(f, x0, method="Nelder-Mead",
                                options={"xatol": 1e-10, "fatol": fatol, "maxiter": 4000,
                                         "maxfev": 8000})
        nfev += res.nfev
        if best is None or res.fun < best[0]:
            best = (float(res.fun), res.x.copy(), branch)
    val, (x, y), branch = best
    x, y = float(x), float(y)
    z = solve_z(x, y, branch)
    drift = bool(min(x, y) - 2.0 < 1e-3 or max(x, y) > 0.5 * _BOX[1] or discriminant(x, y) < 1e-6)
    return OracleResult(x=float(x), y=float(y), z=z, branch=branch, min_length=val,
                        evaluations=nfev, boundary_drift=drift)
