"""Where is A^3 B^2 shortest?

Walks the s = 0 line of the chart, finds the minimum with a golden-section
search, then asks the trace-coordinate oracle the same question from scratch.

    python3 demos/01_minimum.py
"""

# %%
import math

import numpy as np

from fricke_hexagon import axis_length, build_hexagon, make_vpoint, minimize, oracle_min_length
from fricke_hexagon.lengths import c_parts

# %% [markdown]
# Length along s = 0.  Both ends of (1/2, 1) blow up, so there is a bottom.

# %%
for t in np.linspace(0.52, 0.98, 12):
    print(f"t = {t:.3f}   length = {axis_length(t):9.5f}")

# %% [markdown]
# Golden section on t.  The exact answer is t0 = 3 sqrt(5)/10 with length
# 2 log(9 + 4 sqrt 5).

# %%
m = minimize()
exact_t, exact_len = 3 * math.sqrt(5) / 10, 2 * math.log(9 + 4 * math.sqrt(5))
print(f"\nt0      {m.t0:.12f}   (exact {exact_t:.12f})")
print(f"length  {m.length_min:.12f}   (exact {exact_len:.12f})")
print(f"alpha0  {m.alpha0:.9f} rad = {math.degrees(m.alpha0):.5f} deg")
print("moving off s = 0:")
for ds, plus, minus in m.s_probes:
    print(f"   s = +-{ds:<6g}  {plus:.12f}  {minus:.12f}")

# %% [markdown]
# The minimizing hexagon, built geometrically.  c splits at the foot of the
# common perpendicular into c1 + c2, both known in closed form.

# %%
h = build_hexagon(make_vpoint(m.t0, 0.0))
c1, c2 = c_parts(m.t0)
print(f"\nsides   a = {h.a:.10f}  c = {h.c:.10f}  d = {h.d:.10f}")
print(f"c1 + c2 = {c1:.10f} + {c2:.10f} = {c1 + c2:.10f}")
print(f"angles  " + "  ".join(f"{x:.6f}" for x in h.angles))

# %% [markdown]
# Independent check: minimize 2 arccosh(|tr A^3 B^2| / 2) over triples with
# x^2 + y^2 + z^2 = xyz.  Nothing from the hexagon code is used here.

# %%
r = oracle_min_length()
print(f"\noracle  (x, y, z) = ({r.x:.6f}, {r.y:.6f}, {r.z:.6f})  root sheet {r.branch:+d}")
print(f"oracle  length   = {r.min_length:.12f}")
print(f"gap to the chart = {abs(r.min_length - m.length_min):.2e}")
