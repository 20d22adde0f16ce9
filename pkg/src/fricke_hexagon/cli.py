"""Command line: fricke-hexagon {hexagon,length,axis,sweep,minimize,oracle,verify,probe}.

Exit status 0 ok, 1 I/O error, 2 domain error, 3 verification failure.
"""

from __future__ import annotations

import argparse
import contextlib
import sys
import time

from .decomposition import OutsideV, make_vpoint
from .hexagon import build_hexagon, verify_hexagon
from .lengths import (
    BoundaryCase,
    BoundaryTag,
    CaseExhausted,
    axis_length,
    boundary_sequence,
    minimize,
    total_length,
)
from .oracle import (
    A3B2,
    GroupWord,
    Infeasible,
    NotHyperbolic,
    oracle_min_length,
    trace_word,
    triple,
    word_length,
)

EXIT_OK, EXIT_IO, EXIT_DOMAIN, EXIT_VERIFY = 0, 1, 2, 3


def g12(x) -> str:
    return f"{x:.12g}"


class DomainError(Exception):
    pass


def _write(path: str, text: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def cmd_hexagon(args) -> int:
    from .documents import HexagonDocument, hexagon_svg

    h = build_hexagon(make_vpoint(args.t, args.s))
    print(f"region  {h.region.value}")
    print(f"margin  {g12(abs(h.v.s) - 0.5 * h.a)}  (|s| - a/2; region III within 1e-09)")
    for name in ("alpha", "a", "c", "d", "a1", "a2", "total", "area"):
        print(f"{name:<7} {g12(getattr(h, name))}")
    print("angles  " + " ".join(g12(x) for x in h.angles))
    rep = verify_hexagon(h)
    print("checks  " + ("pass" if rep.passed else "FAIL " + ", ".join(c.name for c in rep.failures())))
    if args.json:
        _write(args.json, HexagonDocument.from_result(h).to_json() + "\n")
    if args.svg:
        _write(args.svg, hexagon_svg(h))
    return EXIT_OK


def cmd_length(args) -> int:
    r = total_length(make_vpoint(args.t, args.s))
    for name in ("a", "c", "d", "total"):
        print(f"{name:<6} {g12(getattr(r, name))}")
    return EXIT_OK


def cmd_axis(args) -> int:
    print(g12(axis_length(args.t)))
    return EXIT_OK


def cmd_sweep(args) -> int:
    from .documents import sweep_grid, write_csv

    lo, hi = args.t_range
    if not (0.5 < lo <= hi < 1.0):
        raise DomainError(f"t-range must lie in (1/2, 1), got [{lo}, {hi}]")
    rows = sweep_grid(lo, hi, args.t_steps, args.s_steps)
    if args.out in (None, "-"):
        write_csv(rows, sys.stdout)
    else:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            write_csv(rows, fh)
        print(f"{len(rows)} rows -> {args.out}", file=sys.stderr)
    return EXIT_OK


def cmd_minimize(args) -> int:
    m = minimize(tol=args.tol)
    print(f"t0      {g12(m.t0)}")
    print(f"length  {g12(m.length_min)}")
    print(f"alpha0  {g12(m.alpha0)}")
    print(f"a0      {g12(m.a0)}")
    print(f"c0      {g12(m.c0)}")
    return EXIT_OK


def cmd_oracle(args) -> int:
    w = GroupWord.parse(args.word)
    if args.trace is not None:
        x, y = args.trace
        tt = triple(x, y, args.branch)
        print(f"z       {g12(tt.z)}")
        print(f"trace   {g12(trace_word(tt, w))}")
        print(f"length  {g12(word_length(tt, w))}")
        return EXIT_OK
    t0 = time.perf_counter()
    r = oracle_min_length(w, starts=args.starts, seed=args.seed)
    print(f"x       {g12(r.x)}")
    print(f"y       {g12(r.y)}")
    print(f"z       {g12(r.z)}")
    print(f"length  {g12(r.min_length)}")
    if r.boundary_drift:
        print("note    minimizer drifted to the edge of the feasible region")
    if w == A3B2:
        ref = minimize().length_min
        print(f"delta   {g12(abs(r.min_length - ref))}  (against the chart minimum {g12(ref)})")
    print(f"time    {time.perf_counter() - t0:.3g} s", file=sys.stderr)
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verification import flipped_clearance_sign, run_all

    ctx = flipped_clearance_sign() if args.inject_fault == "clearance-sign" else contextlib.nullcontext()
    with ctx:
        suites = run_all(args.grid, probes=args.probes)
    status = EXIT_OK
    for s in suites:
        print(f"{s.name:<10} {'pass' if s.passed else 'FAIL'}  max residual {s.max_residual:.3e}")
    for s in suites:
        bad = s.first_failure()
        if bad is not None:
            print(f"verification failed: suite {s.name}, check {bad[0]} "
                  f"(residual {bad[1]:.3e}, tol {bad[2]:.0e})", file=sys.stderr)
            status = EXIT_VERIFY
            break
    return status


def cmd_probe(args) -> int:
    case = BoundaryCase(BoundaryTag(args.case), t_hat=args.t_hat)
    crossed = False
    for k in range(1, args.k_max + 1):
        try:
            v = boundary_sequence(case, k)
        except CaseExhausted as e:
            print(f"# exhausted at k={k}: {e}")
            break
        tot = total_length(v).total
        print(f"{k:>4} {g12(v.t):>16} {g12(v.s):>16} {g12(tot):>16}")
        if tot > args.bound:
            crossed = True
            if not args.all:
                break
    print(f"# exceeds {g12(args.bound)}: {'yes' if crossed else 'no'}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fricke-hexagon",
                                description="Hexagon decomposition of the once-punctured torus "
                                            "and the length of the curve A^3 B^2.")
    sub = p.add_subparsers(dest="command", required=True)

    h = sub.add_parser("hexagon", help="build one hexagon")
    h.add_argument("--t", type=float, required=True)
    h.add_argument("--s", type=float, required=True)
    h.add_argument("--json", metavar="PATH")
    h.add_argument("--svg", metavar="PATH")
    h.set_defaults(fn=cmd_hexagon)

    ln = sub.add_parser("length", help="total length a+b+c+d at (t, s)")
    ln.add_argument("--t", type=float, required=True)
    ln.add_argument("--s", type=float, required=True)
    ln.set_defaults(fn=cmd_length)

    ax = sub.add_parser("axis", help="closed-form length on s = 0")
    ax.add_argument("--t", type=float, required=True)
    ax.set_defaults(fn=cmd_axis)

    sw = sub.add_parser("sweep", help="CSV grid of lengths")
    sw.add_argument("--t-range", type=float, nargs=2, default=(0.51, 0.99), metavar=("LO", "HI"))
    sw.add_argument("--t-steps", type=int, default=10)
    sw.add_argument("--s-steps", type=int, default=10)
    sw.add_argument("--out", metavar="PATH")
    sw.set_defaults(fn=cmd_sweep)

    mn = sub.add_parser("minimize", help="minimum of the length")
    mn.add_argument("--tol", type=float, default=1e-12)
    mn.set_defaults(fn=cmd_minimize)

    orc = sub.add_parser("oracle", help="trace-coordinate computations")
    grp = orc.add_mutually_exclusive_group(required=True)
    grp.add_argument("--min", action="store_true", help="minimize the word length")
    grp.add_argument("--trace", type=float, nargs=2, metavar=("X", "Y"))
    orc.add_argument("--word", default="A3B2")
    orc.add_argument("--branch", type=int, choices=(1, -1), default=1)
    orc.add_argument("--starts", type=int, default=20)
    orc.add_argument("--seed", type=int, default=0)
    orc.set_defaults(fn=cmd_oracle)

    vf = sub.add_parser("verify", help="run the invariant suites")
    vf.add_argument("--grid", type=int, default=20)
    vf.add_argument("--probes", action="store_true", help="also run the boundary divergence probes")
    vf.add_argument("--inject-fault", choices=("clearance-sign",), help=argparse.SUPPRESS)
    vf.set_defaults(fn=cmd_verify)

    pr = sub.add_parser("probe", help="lengths along a sequence leaving the chart")
    pr.add_argument("--case", type=str.upper, choices=[t.value for t in BoundaryTag], required=True)
    pr.add_argument("--t-hat", type=float)
    pr.add_argument("--k-max", type=int, default=60)
    pr.add_argument("--bound", type=float, default=30.0)
    pr.add_argument("--all", action="store_true", help="keep going after the bound is exceeded")
    pr.set_defaults(fn=cmd_probe)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (OutsideV, Infeasible, NotHyperbolic, DomainError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
