# %% [markdown]
# # Checking the inequalities
#
# Each checker returns its slack and raises when the inequality it guards
# would be violated. The equality classifier tells apart strict cases,
# genuine equality cases, and (never observed) equality without the
# characterising conditions.

# %%
import math
import time

from hullcover.curves import Curve, boundary_arc
from hullcover.geometry import convex_hull, tangents_from_point
from hullcover.repro import half_disk
from hullcover.theorems import (
    add_point_inequality_check,
    campaign,
    closed_curve_check,
    equality_case_check,
    main_inequality_check,
    monotonicity_check,
)

square = convex_hull([(0, 0), (1, 0), (1, 1), (0, 1)])
triangle = convex_hull([(0, 0), (1, 0), (0.5, math.sqrt(3) / 2)])

print(equality_case_check(boundary_arc(triangle, 1, 0, "left"), triangle).value)
print(equality_case_check(Curve(square.vertices), square).value)
K, arc = half_disk(256)
print("half-disk arc:", equality_case_check(arc, K).value, main_inequality_check(arc, K).slack)

# %% [markdown]
# A closed curve is never shorter than the perimeter of its hull; going
# back along an edge costs exactly the doubled piece.

# %%
print(closed_curve_check(Curve(square.vertices + square.vertices[:1])))
print(closed_curve_check(Curve.from_points([(0, 0), (2, 0), (1, 1), (2, 0), (0, 0)])))

big = convex_hull([(-0.5, -0.5), (1.5, -0.5), (1.5, 1.5), (-0.5, 1.5)])
print("nested perimeters differ by", monotonicity_check(square, big))

# %% [markdown]
# Adding an outside point whose support lines meet at a right angle: the
# tangent length plus the old perimeter beats the new perimeter.

# %%
A = (1.5, 0.5)
print("wedge", math.degrees(tangents_from_point(square, A)[2]), "slack", add_point_inequality_check(square, A))

# %% [markdown]
# A seeded campaign runs every checker on random figures, covering curves,
# closed polylines and nested pairs.

# %%
start = time.perf_counter()
records = list(campaign(2000, seed=42))
failures = [r for r in records if r.failure]
print(f"{len(records)} cases, {len(failures)} failures, min slack {min(r.slack for r in records):.3e}, "
      f"{time.perf_counter() - start:.1f}s")
