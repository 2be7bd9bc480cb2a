# %% [markdown]
# # Convex figures: hulls, perimeter, diameter
#
# Every figure is stored canonically: extreme points only, counterclockwise,
# starting from the lexicographically smallest vertex. Points and segments
# are figures too; a segment's perimeter counts both sides.

# %%
import math

import numpy as np

from hullcover.geometry import (
    add_point_hull,
    contains_point,
    convex_hull,
    diameter,
    perimeter,
    split_by_chord,
    tangents_from_point,
)

K = convex_hull([(0, 0), (1, 1), (2, 0), (1, 0.5), (0.5, 0.2)])
print(K.kind.value, K.vertices)

seg = convex_hull([(0, 0), (1, 0), (3, 0)])
print(seg.kind.value, "perimeter", perimeter(seg))

# %% [markdown]
# The diameter comes from rotating calipers. A brute-force pass over all
# vertex pairs agrees on a random 50-gon.

# %%
rng = np.random.default_rng(4)
theta = np.sort(rng.uniform(0, 2 * np.pi, 50))
P = convex_hull(zip(np.cos(theta) * 2, np.sin(theta)))
d, p, q = diameter(P)
brute = max(math.dist(a, b) for a in P.vertices for b in P.vertices)
print(f"{len(P.vertices)} vertices, calipers {d:.15f}, brute force {brute:.15f}")
print("per >= 2 diam:", perimeter(P) >= 2 * d)

# %% [markdown]
# Containment honours the geometric tolerance, so a point a hair outside an
# edge still counts.

# %%
square = convex_hull([(0, 0), (1, 0), (1, 1), (0, 1)])
for pt in [(0.5, 0.5), (1 + 1e-12, 0.5), (2, 2)]:
    print(pt, contains_point(square, pt))

# %% [markdown]
# A chord between two extreme points splits a figure into two convex
# pieces whose perimeters add up to the original plus twice the chord.

# %%
a, b = split_by_chord(square, (0, 0), (1, 1))
print(a.vertices, b.vertices)
print(perimeter(a) + perimeter(b), "=", perimeter(square) + 2 * math.sqrt(2))

# %% [markdown]
# From an outside point the two support lines touch the figure at A1 and
# A2. Adding the point to the figure changes its perimeter by a computable
# amount.

# %%
A = (2.0, 0.5)
A1, A2, angle = tangents_from_point(square, A)
print("tangent points", A1, A2, "wedge angle", round(math.degrees(angle), 3))
bigger = add_point_hull(square, A)
print("pentagon perimeter", perimeter(bigger), "vs", 3 + 2 * math.sqrt(1.25))
