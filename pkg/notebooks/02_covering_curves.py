# %% [markdown]
# # Curves and coverage
#
# A curve covers a figure when the convex hull of the curve contains it.
# Any covering curve is at least `per(K) - diam(K)` long; `covers` reports
# that bound together with the slack.

# %%
import math

from hullcover.curves import Curve, boundary_arc, covers, curve_length, hull_of_curve, point_at
from hullcover.geometry import convex_hull

square = convex_hull([(0, 0), (1, 0), (1, 1), (0, 1)])
triangle = convex_hull([(0, 0), (1, 0), (0.5, math.sqrt(3) / 2)])

c = Curve.from_points([(0, 0), (1, 0), (1, 1)])
print("length", curve_length(c), "midpoint", point_at(c, 1.0), "at 1.5", point_at(c, 1.5))

# %% [markdown]
# Three sides of the square cover it; a single edge does not.

# %%
three = Curve(square.vertices)
r = covers(three, square)
print(r.covered, "length", r.curve_length, "bound", round(r.lower_bound, 6), "slack", round(r.slack, 6))
print(covers(Curve.from_points([(0, 0), (1, 0)]), square))

# %% [markdown]
# On the equilateral triangle any two sides meet the bound exactly: the
# missing side is a diameter.

# %%
for i in range(3):
    arc = boundary_arc(triangle, (i + 1) % 3, i, "left")
    print(arc.vertices, "slack", covers(arc, triangle).slack)

# %% [markdown]
# The hull of a polyline is the hull of its vertices.

# %%
print(hull_of_curve(Curve.from_points([(0, 0), (1, 0), (1, 1), (0, 1)])) == square)
