# %% [markdown]
# # Resonant triads on the integer lattice
# A triad v1 + v2 = v3 resonates when the frequencies add up too. Clearing
# denominators gives one quintic polynomial in (a, b, x, y), with v1 = (a, b)
# and v3 = (x, y).

# %%
from fractions import Fraction

from rossby_triads import (
    Triad, classify_triad, omega, resonance_defect, symmetry_orbit, orbit_representative, group_velocity,
)

t = Triad.from_vectors((1, 8), (16, -2))
t, [omega(v) for v in (t.v1, t.v2, t.v3)]

# %%
omega(t.v1) + omega(t.v2) == omega(t.v3), resonance_defect(t.to_quad())

# %% [markdown]
# The "pure cube" family (s^4, s t^3, t^4, -s^3 t) is always resonant.

# %%
[(s, t_, resonance_defect((s**4, s * t_**3, t_**4, -s**3 * t_))) for s in range(1, 4) for t_ in range(1, 4)]

# %% [markdown]
# Zonal and single-wave points sit on the surface too but are not interesting.

# %%
classify_triad((1, 1, 0, 2)), classify_triad((3, 4, 3, 4)), classify_triad((1, 8, 16, -2))

# %% [markdown]
# Four involutions generate a group of order 24 acting on solutions.

# %%
orb = symmetry_orbit((1, 8, 16, -2))
len(orb), orbit_representative((1, 8, 16, -2)), sorted(orb)[:6]

# %%
# zonal group velocity vanishes on the diagonal
group_velocity((13, 13)), group_velocity((2, 1))
