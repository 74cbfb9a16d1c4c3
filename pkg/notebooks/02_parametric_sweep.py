# %% [markdown]
# # Sweeping the rational parametrization
# Every nontrivial solution is the image of a point [s:t:u] of the plane.
# The sweep walks 0 < s, t, w <= S and keeps orbits inside the box B_N.

# %%
import time
from collections import Counter

from rossby_triads import SearchRegion, param_forward, param_inverse, region_hits, resonance_defect, box_norm

q = param_forward((2, 2, 1))
q, resonance_defect(q), param_inverse(q)

# %%
for S in (25, 50, 100, 200):
    t0 = time.perf_counter()
    hits = region_hits(SearchRegion(S), box=5000)
    print(S, len(hits), f"{time.perf_counter() - t0:.2f}s")

# %% [markdown]
# 443 orbits at S = 200, i.e. 443 x 24 signed quadruples. Dropping the sheet
# inequality finds a few more (the inequality picks one sheet of a double
# cover, so the extras come from the other sheet).

# %%
len(region_hits(SearchRegion(200, enforce_inequality=False), box=5000))

# %%
# how large do the orbits get?
hits = region_hits(SearchRegion(200), box=5000)
Counter(box_norm(r) // 1000 for r in hits)
