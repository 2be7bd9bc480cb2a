# %% [markdown]
# # Searching for short covering curves
#
# The optimizer runs Nelder-Mead on the vertex coordinates with a growing
# quadratic penalty for uncovered figure vertices, then repairs and prunes
# each candidate so the answer always covers. Its result sits between the
# lower bound `per - diam` and the best covering boundary arc.

# %%
import math

from hullcover.geometry import convex_hull
from hullcover.optimizer import OptimizerConfig, minimize_covering_curve
from hullcover.repro import parallelogram
from hullcover.theorems import random_convex_polygon

square = convex_hull([(0, 0), (1, 0), (1, 1), (0, 1)])
res = minimize_covering_curve(square, OptimizerConfig(n_vertices=4, restarts=16))
print(f"square: {res.lower_bound:.5f} <= {res.best_length:.9f} <= {res.upper_bound:.5f}")
print(res.best_curve.vertices)

# %% [markdown]
# On a long parallelogram the winner is not convex: it doubles back.

# %%
K, pts = parallelogram(2.0)
res = minimize_covering_curve(K, OptimizerConfig(n_vertices=4, restarts=16))
print(f"length {res.best_length:.9f}, 3*sqrt2 = {3 * math.sqrt(2):.9f}")
print(res.best_curve.vertices)

# %% [markdown]
# Each result carries a report on the necessary conditions for
# minimality: both endpoints extreme in the hull, the endpoint chord
# touching the figure, and the contact-chord residual nonnegative.

# %%
for seed in range(5):
    P = random_convex_polygon(6, seed)
    r = minimize_covering_curve(P, OptimizerConfig(n_vertices=len(P.vertices) + 1, restarts=6, seed=seed))
    rep = r.report
    print(seed, f"gap above bound {r.best_length - r.lower_bound:.4f}", rep.endpoints_extreme,
          rep.chord_meets_figure, f"residual {rep.contact_chord_residual:.2e}", rep.necessary_conditions_hold())
