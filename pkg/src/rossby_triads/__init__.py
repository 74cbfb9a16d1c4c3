"""Integer resonant triads of Rossby waves.

The resonance condition for wavevectors (a, b) + (x-a, y-b) = (x, y) is a
quintic surface. This package enumerates its integer points through a
rational parametrization, studies each fiber (fixed (a, b)) as an elliptic
curve, and checks both against brute-force searches.
"""
__version__ = "0.1.0"

from .core import (  # noqa: E402
    DispersionParams, Quad, Rat, Triad, TriadClass, WaveVec, canonicalize, classify_triad,
    group_velocity, omega, on_x_circ, primitive, resonance_defect, resonates_via_omega,
    symmetry_orbit, SYMMETRY_GENERATORS,
)
from .exceptions import *  # noqa: E402,F401,F403
from .parametrization import (  # noqa: E402
    BoxFilter, ParamPoint, RegionHit, SearchRegion, box_norm, enumerate_region, expand_orbits,
    in_box, orbit_representative, param_forward, param_inverse, parameter_bound, region_hits,
)
