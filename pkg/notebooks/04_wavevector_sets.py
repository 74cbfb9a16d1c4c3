# %% [markdown]
# # Which wavevectors take part in some resonance?
# Lambda is the set of (a, b) with a nontrivial triad; Lambda' asks for a
# primitive one. Small boxes are decided fiber by fiber; large ones use the
# sweep.

# %%
from pathlib import Path

from rossby_triads.io_cli import scatter_svg
from rossby_triads.oracle import conjecture1_scan, growth_functions, lambda_sets

small = lambda_sets(30)
len(small.lam), len(small.lam_prime), sorted(v for v in small.lam_prime if v.k > 0 and v.l > 0)[:10]

# %%
sweep = lambda_sets(30, "sweep", sweep_bound=100)
sweep.lam <= small.lam, sweep.lam == small.lam

# %%
big = lambda_sets(1000, "sweep", sweep_bound=200)
out = Path("lambda_1000.svg")
out.write_text(scatter_svg(big.lam, 1000, title=f"Lambda, |a|,|b| <= 1000 ({big.describe()})"))
near_axes = sum(min(abs(v.k), abs(v.l)) <= 100 for v in big.lam) / len(big.lam)
len(big.lam), round(near_axes, 3)

# %% [markdown]
# Points with a >= sqrt(3) b^4 are rare: only (800, 4) in this box.

# %%
conjecture1_scan(1000, sweep_bound=200)

# %%
for N in (10, 20, 30, 40):
    print(growth_functions(N, 2 * N).line())
