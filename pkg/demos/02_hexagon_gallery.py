"""One hexagon from each region of the chart, checked and drawn.

Writes SVG files (Poincare disk) into the directory given as the first
argument, default ./demo_output.

    python3 demos/02_hexagon_gallery.py [outdir]
"""

# %%
import math
import pathlib
import sys

from fricke_hexagon import build_hexagon, make_vpoint, verify_hexagon
from fricke_hexagon.decomposition import clearance_r_prime, s_bound
from fricke_hexagon.documents import HexagonDocument, hexagon_svg

out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else "demo_output")
out.mkdir(parents=True, exist_ok=True)

# %% [markdown]
# Region I: |s| < a/2.  Region III: |s| = a/2, where a vertex of the hexagon
# lands on the common perpendicular.  Region II: past that, only possible for
# t > sqrt(2)/2 and only up to the clearance r'.  a1 and a2 are signed: in
# region II the foot of the perpendicular falls outside side a and one of them
# goes negative.

# %%
t = 0.8
a = math.log((1 + t) / (1 - t))
print(f"t = {t}: a = {a:.6f}, a/2 = {a / 2:.6f}, chart edge |s| < {s_bound(t):.6f}, "
      f"r' = {clearance_r_prime(t):.6f}")

cases = {
    "region_I_axis": 0.0,
    "region_I_off_axis": -0.6,
    "region_III": -0.5 * a,
    "region_II": -0.5 * a - 0.1,
    "region_II_mirrored": 0.5 * a + 0.1,
}

# %%
for name, s in cases.items():
    h = build_hexagon(make_vpoint(t, s))
    rep = verify_hexagon(h)
    worst = max(c.residual for c in rep.checks)
    print(f"\n{name}: s = {s:+.6f}  region {h.region.value}  "
          f"checks {'pass' if rep.passed else 'FAIL'} (worst {worst:.1e})")
    print(f"   a1 = {h.a1:.6f}  a2 = {h.a2:.6f}  c = {h.c:.6f}  d = {h.d:.6f}  "
          f"total = {h.total:.6f}")
    if h.trace.theta is not None:
        # right triangle cut off by the perpendicular at the a-c corner
        print(f"   corner triangle: theta = {h.trace.theta:.6f}, phi = {h.trace.phi:.6f}, "
              f"long side splits as {h.trace.sub_c1:.6f} + {h.trace.sub_c2:.6f}")
    (out / f"{name}.svg").write_text(hexagon_svg(h), encoding="utf-8")
    (out / f"{name}.json").write_text(HexagonDocument.from_result(h).to_json() + "\n",
                                      encoding="utf-8")

print(f"\nwrote {2 * len(cases)} files to {out}/")
