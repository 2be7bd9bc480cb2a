"""Compiled kernels for the optimizer's inner loop.

These mirror :func:`hullcover.geometry.hull_coords` and
:func:`hullcover.geometry.outside_distances` on raw arrays; the test suite
checks the two paths against each other.
"""

import math

import numpy as np
from numba import njit


@njit(cache=True)
def _cross(ox, oy, ax, ay, bx, by):
    return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox)


@njit(cache=True)
def hull_array(pts, eps):
    """Canonical hull vertices (counterclockwise, lexicographic start) of an (n, 2) array."""
    n = pts.shape[0]
    order = np.empty(n, dtype=np.int64)
    for i in range(n):
        order[i] = i
    # insertion sort: n is tiny in the optimizer
    for i in range(1, n):
        k = order[i]
        j = i - 1
        while j >= 0 and (
            pts[order[j], 0] > pts[k, 0]
            or (pts[order[j], 0] == pts[k, 0] and pts[order[j], 1] > pts[k, 1])
        ):
            order[j + 1] = order[j]
            j -= 1
        order[j + 1] = k
    s = np.empty((n, 2))
    m = 0
    for i in range(n):
        p = pts[order[i]]
        if m == 0 or p[0] != s[m - 1, 0] or p[1] != s[m - 1, 1]:
            s[m, 0] = p[0]
            s[m, 1] = p[1]
            m += 1
    if m <= 2:
        return s[:m].copy()

    h = np.empty((2 * m, 2))
    k = 0
    for i in range(m):
        while k >= 2 and _cross(h[k - 2, 0], h[k - 2, 1], h[k - 1, 0], h[k - 1, 1], s[i, 0], s[i, 1]) <= 0.0:
            k -= 1
        h[k] = s[i]
        k += 1
    lower_end = k + 1
    for i in range(m - 2, -1, -1):
        while k >= lower_end and _cross(h[k - 2, 0], h[k - 2, 1], h[k - 1, 0], h[k - 1, 1], s[i, 0], s[i, 1]) <= 0.0:
            k -= 1
        h[k] = s[i]
        k += 1
    k -= 1
    hull = h[:k].copy()

    # drop vertices within eps of their neighbours' chord, flattest first
    while hull.shape[0] > 2:
        c = hull.shape[0]
        worst = -1
        worst_h = eps
        for i in range(c):
            a = hull[(i - 1) % c]
            v = hull[i]
            b = hull[(i + 1) % c]
            hh = abs(_cross(a[0], a[1], b[0], b[1], v[0], v[1])) / math.hypot(b[0] - a[0], b[1] - a[1])
            if hh <= worst_h:
                worst = i
                worst_h = hh
        if worst < 0:
            break
        keep = np.empty((c - 1, 2))
        j = 0
        for i in range(c):
            if i != worst:
                keep[j] = hull[i]
                j += 1
        hull = keep

    c = hull.shape[0]
    if c == 2:
        if hull[1, 0] < hull[0, 0] or (hull[1, 0] == hull[0, 0] and hull[1, 1] < hull[0, 1]):
            out = np.empty((2, 2))
            out[0] = hull[1]
            out[1] = hull[0]
            return out
        return hull
    start = 0
    for i in range(1, c):
        if hull[i, 0] < hull[start, 0] or (hull[i, 0] == hull[start, 0] and hull[i, 1] < hull[start, 1]):
            start = i
    out = np.empty((c, 2))
    for i in range(c):
        out[i] = hull[(start + i) % c]
    return out


@njit(cache=True)
def outside_distances(hull, pts):
    """Distance from each point to the convex hull given by its canonical vertices."""
    h = hull.shape[0]
    m = pts.shape[0]
    out = np.zeros(m)
    for r in range(m):
        px = pts[r, 0]
        py = pts[r, 1]
        if h == 1:
            out[r] = math.hypot(px - hull[0, 0], py - hull[0, 1])
            continue
        inside = h >= 3
        best = math.inf
        for i in range(h):
            ax = hull[i, 0]
            ay = hull[i, 1]
            bx = hull[(i + 1) % h, 0]
            by = hull[(i + 1) % h, 1]
            ex = bx - ax
            ey = by - ay
            wx = px - ax
            wy = py - ay
            if ex * wy - ey * wx < 0.0:
                inside = False
            t = (wx * ex + wy * ey) / (ex * ex + ey * ey)
            if t < 0.0:
                t = 0.0
            elif t > 1.0:
                t = 1.0
            d = math.hypot(wx - t * ex, wy - t * ey)
            if d < best:
                best = d
        out[r] = 0.0 if inside else best
    return out


@njit(cache=True)
def violations(pts, figure, eps):
    return outside_distances(hull_array(pts, eps), figure)


@njit(cache=True)
def polyline_length(pts):
    total = 0.0
    for i in range(pts.shape[0] - 1):
        total += math.hypot(pts[i + 1, 0] - pts[i, 0], pts[i + 1, 1] - pts[i, 1])
    return total


@njit(cache=True)
def penalized(x, figure, lam, eps):
    pts = x.reshape((-1, 2))
    v = violations(pts, figure, eps)
    return polyline_length(pts) + lam * np.dot(v, v)


def warm_up() -> None:
    """Compile every kernel now (a one-time cost of a few seconds without a cache)."""
    square = np.array([[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]])
    penalized(square.ravel(), square, 1.0, 1e-9)
