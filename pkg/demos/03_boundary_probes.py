"""Following sequences out of the chart.

Six families of points approach the edge of the chart in different ways; the
length of A^3 B^2 should grow without bound along each.  Doubles run out long
before infinity, so the script shows how far each family gets.

    python3 demos/03_boundary_probes.py
"""

# %%
from fricke_hexagon.lengths import ALL_CASES, boundary_lengths

# %%
for case in ALL_CASES:
    rows = boundary_lengths(case, 200)
    print(f"\n{case.tag.value}: {len(rows)} usable steps")
    for k, v, total in rows:
        if k in (1, 2, 5, 10, 20, 30, 40) or k == rows[-1][0]:
            print(f"   k = {k:3d}   t = {v.t:.15f}   s = {v.s:+.12f}   length = {total:9.4f}")
    first = next((k for k, _, tt in rows if tt > 30), None)
    print(f"   first above 30 at k = {first}")

# %% [markdown]
# Along the sequences heading for the corners the totals grow by roughly
# log 2 per halving of the gap, i.e. logarithmically in the distance to the
# edge, which is why it takes 30+ halvings to pass 30.
