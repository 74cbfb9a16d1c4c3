# %% [markdown]
# # The fiber over (1, 1)
# Fixing v1 = (a, b) leaves a plane curve C(a, b). It is birational to the
# elliptic curve W^2 = Z^3 + (a^2-2b^2) Z^2 + (a^2+b^2)^2 Z.

# %%
from rossby_triads.fiber import (
    fiber_point_table, make_fiber, torsion_scan, zonal_zero_denominators, hyperelliptic_bounded_search,
)
from rossby_triads.oracle import fiber_integer_points

c = make_fiber(1, 1)
sorted(fiber_integer_points(1, 1))

# %% [markdown]
# Only four integer points, but infinitely many rational ones: multiples of P.

# %%
for r in fiber_point_table(c, 4):
    print(f"{r.label:>6}  Z={r.point.Z}  W={r.point.W}  x={r.xy[0]}  y={r.xy[1]}")

# %% [markdown]
# Scaling a rational point by its denominator n gives an integer triad with
# v1 = (n, n): zonal group velocity zero.

# %%
zonal_zero_denominators(7)

# %%
print("\n".join(torsion_scan(c).lines()))

# %%
# a 3-torsion point on any fiber would give a point on this genus 2 curve
hyperelliptic_bounded_search(500)
