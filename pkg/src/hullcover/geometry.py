"""Planar primitives: points, canonical convex figures and the operations on them.

Every figure is stored in canonical form: the vertex list is exactly the set
of extreme points, in counterclockwise order, starting at the
lexicographically smallest vertex. Degenerate figures (a single point or a
segment) are first-class values.

Orientation tests use plain floating point with a distance dead zone of
``eps_geom``; nothing here needs exact arithmetic because all downstream
tolerances are at least that large.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import InvalidInput, NotExtremePoint, PointNotExternal

EPS_GEOM = 1e-9


class _XY(NamedTuple):
    x: float
    y: float


class Point(_XY):
    """An immutable point of the plane with finite coordinates.

    Points are plain tuples underneath, so they sort lexicographically,
    hash, and unpack as ``x, y = p``.
    """

    __slots__ = ()

    def __new__(cls, x, y):
        x = float(x)
        y = float(y)
        if not (math.isfinite(x) and math.isfinite(y)):
            raise InvalidInput(f"point coordinates must be finite, got ({x}, {y})")
        return super().__new__(cls, x, y)

    def __repr__(self):
        return f"Point({self.x!r}, {self.y!r})"


def as_point(p) -> Point:
    if isinstance(p, Point):
        return p
    try:
        x, y = p
    except (TypeError, ValueError):
        raise InvalidInput(f"expected an (x, y) pair, got {p!r}") from None
    return Point(x, y)


def distance(p, q) -> float:
    return math.hypot(p[0] - q[0], p[1] - q[1])


def cross(o, a, b) -> float:
    """Twice the signed area of triangle ``o, a, b``; positive for a left turn."""
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def point_segment_distance(p, a, b) -> float:
    dx = b[0] - a[0]
    dy = b[1] - a[1]
    ll = dx * dx + dy * dy
    if ll == 0.0:
        return distance(p, a)
    t = ((p[0] - a[0]) * dx + (p[1] - a[1]) * dy) / ll
    t = min(1.0, max(0.0, t))
    return math.hypot(p[0] - a[0] - t * dx, p[1] - a[1] - t * dy)


@dataclass(frozen=True)
class Tolerances:
    """Slack values used by predicates and checkers.

    ``eps_geom`` is the orientation and containment dead zone,
    ``eps_contact`` decides when a curve touches a figure, and ``eps_eq``
    decides when an inequality is treated as an equality.
    """

    eps_geom: float = EPS_GEOM
    eps_contact: float = 1e-7
    eps_eq: float = 1e-6

    def __post_init__(self):
        values = (self.eps_geom, self.eps_contact, self.eps_eq)
        if not all(math.isfinite(v) and v > 0 for v in values):
            raise InvalidInput(f"tolerances must be positive and finite: {values}")
        if not self.eps_geom <= self.eps_contact <= self.eps_eq:
            raise InvalidInput("tolerances must satisfy eps_geom <= eps_contact <= eps_eq")


DEFAULT_TOLERANCES = Tolerances()


class FigureKind(str, enum.Enum):
    POINT = "point"
    SEGMENT = "segment"
    POLYGON = "polygon"


@dataclass(frozen=True)
class ConvexFigure:
    """A compact convex set of the plane, stored by its extreme points.

    Build figures with :func:`convex_hull`; the constructor only validates
    an already canonical vertex list.
    """

    vertices: tuple[Point, ...]
    kind: FigureKind

    def __post_init__(self):
        verts = tuple(as_point(v) for v in self.vertices)
        object.__setattr__(self, "vertices", verts)
        kind = FigureKind(self.kind)
        object.__setattr__(self, "kind", kind)
        n = len(verts)
        if kind is FigureKind.POINT:
            if n != 1:
                raise InvalidInput("a point figure has exactly one vertex")
        elif kind is FigureKind.SEGMENT:
            if n != 2 or verts[0] == verts[1]:
                raise InvalidInput("a segment figure has exactly two distinct vertices")
            if verts[1] < verts[0]:
                raise InvalidInput("segment vertices must be in lexicographic order")
        else:
            if n < 3:
                raise InvalidInput("a polygon needs at least three vertices")
            for i in range(n):
                if cross(verts[i - 1], verts[i], verts[(i + 1) % n]) <= 0.0:
                    raise InvalidInput(
                        f"vertex {i} breaks strict counterclockwise convexity"
                    )
            if min(verts) != verts[0]:
                raise InvalidInput("first vertex must be the lexicographically smallest")

    def __len__(self):
        return len(self.vertices)

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.array(self.vertices, dtype=float)
        arr.setflags(write=False)
        return arr

    @property
    def is_polygon(self) -> bool:
        return self.kind is FigureKind.POLYGON

    def edges(self) -> list[tuple[Point, Point]]:
        """Boundary edges in counterclockwise order (a segment has two)."""
        v = self.vertices
        if len(v) == 1:
            return []
        return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]

    def vertex_index(self, p, eps: float = EPS_GEOM) -> int | None:
        """Index of the vertex within ``eps`` of ``p``, or None."""
        best, best_d = None, eps
        for i, v in enumerate(self.vertices):
            d = distance(v, p)
            if d <= best_d:
                best, best_d = i, d
        return best


# ---------------------------------------------------------------------------
# Convex hull
# ---------------------------------------------------------------------------

def _chain(points):
    # Andrew's monotone chain on sorted unique tuples, exact-sign popping.
    lower = []
    for p in points:
        while len(lower) >= 2 and cross(lower[-2], lower[-1], p) <= 0.0:
            lower.pop()
        lower.append(p)
    upper = []
    for p in reversed(points):
        while len(upper) >= 2 and cross(upper[-2], upper[-1], p) <= 0.0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _drop_flat_vertices(hull, eps):
    # Remove vertices lying within eps of the chord joining their neighbours,
    # flattest first, so near-collinear triples never survive.
    hull = list(hull)
    while len(hull) > 2:
        n = len(hull)
        worst, worst_h = -1, eps
        for i in range(n):
            a, v, b = hull[i - 1], hull[i], hull[(i + 1) % n]
            h = cross(a, b, v)
            h = abs(h) / distance(a, b)
            if h <= worst_h:
                worst, worst_h = i, h
        if worst < 0:
            break
        del hull[worst]
    return hull


def hull_coords(coords: Sequence[tuple[float, float]], eps: float = EPS_GEOM) -> list:
    """Canonical hull vertex tuples of raw coordinate pairs.

    This is the allocation-light core of :func:`convex_hull`, also used in
    inner optimisation loops.
    """
    pts = sorted(set(coords))
    if len(pts) <= 2:
        return pts
    hull = _chain(pts)
    if len(hull) > 2:
        hull = _drop_flat_vertices(hull, eps)
    if len(hull) == 2:
        return sorted(hull)
    k = hull.index(min(hull))
    return hull[k:] + hull[:k]


def convex_hull(points: Iterable, eps: float = EPS_GEOM) -> ConvexFigure:
    """Canonical convex hull of a nonempty collection of points.

    Output vertices are a subset of the input. Vertices that sit within
    ``eps`` of the line through their neighbours are dropped, so the result
    is strictly convex.

    >>> convex_hull([(0, 0), (1, 0), (2, 0)]).vertices
    (Point(0.0, 0.0), Point(2.0, 0.0))
    """
    pts = [as_point(p) for p in points]
    if not pts:
        raise InvalidInput("convex hull of an empty point set")
    hull = hull_coords(pts, eps)
    kind = {1: FigureKind.POINT, 2: FigureKind.SEGMENT}.get(len(hull), FigureKind.POLYGON)
    return ConvexFigure(tuple(Point(*p) for p in hull), kind)


def add_point_hull(K: ConvexFigure, A, eps: float = EPS_GEOM) -> ConvexFigure:
    return convex_hull(list(K.vertices) + [as_point(A)], eps)


# ---------------------------------------------------------------------------
# Measures
# ---------------------------------------------------------------------------

def perimeter(K: ConvexFigure) -> float:
    """Boundary length; a segment counts twice, a point has perimeter 0."""
    return math.fsum(distance(a, b) for a, b in K.edges())


def diameter(K: ConvexFigure) -> tuple[float, Point, Point]:
    """Largest vertex distance and one pair realising it (rotating calipers)."""
    v = K.vertices
    n = len(v)
    if n == 1:
        return 0.0, v[0], v[0]
    if n == 2:
        return distance(v[0], v[1]), v[0], v[1]
    best = (-1.0, 0, 0)
    j = 1
    for i in range(n):
        i1 = (i + 1) % n
        while cross(v[i], v[i1], v[(j + 1) % n]) > cross(v[i], v[i1], v[j]):
            j = (j + 1) % n
        for a in (i, i1):
            d = distance(v[a], v[j])
            if d > best[0]:
                best = (d, a, j)
    d, a, b = best
    return d, v[a], v[b]


# ---------------------------------------------------------------------------
# Distances and containment
# ---------------------------------------------------------------------------

def signed_distance(K: ConvexFigure, p) -> float:
    """Euclidean distance from ``p`` to ``K``; minus the depth when inside.

    Degenerate figures have no interior, so the value is never negative
    for them.
    """
    v = K.vertices
    if len(v) == 1:
        return distance(p, v[0])
    if len(v) == 2:
        return point_segment_distance(p, v[0], v[1])
    depth = math.inf
    inside = True
    for a, b in K.edges():
        h = cross(a, b, p) / distance(a, b)
        if h < 0.0:
            inside = False
            break
        depth = min(depth, h)
    if inside:
        return -depth
    return min(point_segment_distance(p, a, b) for a, b in K.edges())


def outside_distances(hull: np.ndarray, pts: np.ndarray) -> np.ndarray:
    """Distance from each row of ``pts`` to the convex polygon ``hull``.

    ``hull`` holds canonical (counterclockwise) vertices; one or two rows
    stand for a point or a segment. Points inside get exactly 0.
    """
    pts = np.asarray(pts, dtype=float)
    if len(hull) == 1:
        return np.hypot(*(pts - hull[0]).T)
    e = np.roll(hull, -1, axis=0) - hull
    w = pts[:, None, :] - hull[None, :, :]
    ee = np.einsum("ij,ij->i", e, e)
    t = np.clip(np.einsum("mij,ij->mi", w, e) / ee, 0.0, 1.0)
    r = w - t[..., None] * e
    d = np.sqrt(np.einsum("mik,mik->mi", r, r)).min(axis=1)
    if len(hull) >= 3:
        crs = e[None, :, 0] * w[..., 1] - e[None, :, 1] * w[..., 0]
        d[np.all(crs >= 0.0, axis=1)] = 0.0
    return d


def contains_point(K: ConvexFigure, p, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
    return signed_distance(K, p) <= tol.eps_geom


def hausdorff_distance(K1: ConvexFigure, K2: ConvexFigure) -> float:
    """Hausdorff distance of two convex figures (attained at vertices)."""
    a = max(max(0.0, signed_distance(K2, p)) for p in K1.vertices)
    b = max(max(0.0, signed_distance(K1, p)) for p in K2.vertices)
    return max(a, b)


def _segments_cross(a, b, c, d) -> bool:
    d1, d2 = cross(a, b, c), cross(a, b, d)
    d3, d4 = cross(c, d, a), cross(c, d, b)
    if d1 == d2 == d3 == d4 == 0.0:
        # collinear: overlap of the projections on the dominant axis
        k = 0 if abs(b[0] - a[0]) + abs(d[0] - c[0]) >= abs(b[1] - a[1]) + abs(d[1] - c[1]) else 1
        return max(min(a[k], b[k]), min(c[k], d[k])) <= min(max(a[k], b[k]), max(c[k], d[k]))
    return d1 * d2 <= 0.0 and d3 * d4 <= 0.0


def _clip_interval(K: ConvexFigure, a, b) -> tuple[float, float] | None:
    # Cyrus-Beck: parameter range of [a, b] inside polygon K.
    t0, t1 = 0.0, 1.0
    for p, q in K.edges():
        num = cross(p, q, a)
        den = cross(p, q, b) - num
        if den == 0.0:
            if num < 0.0:
                return None
            continue
        t = -num / den
        if den > 0.0:
            t0 = max(t0, t)
        else:
            t1 = min(t1, t)
        if t0 > t1:
            return None
    return t0, t1


def segment_figure_distance(K: ConvexFigure, a, b) -> float:
    """Distance between the segment ``[a, b]`` and the figure ``K``."""
    v = K.vertices
    if len(v) >= 3 and _clip_interval(K, a, b) is not None:
        return 0.0
    if len(v) == 2 and _segments_cross(a, b, v[0], v[1]):
        return 0.0
    best = min(max(0.0, signed_distance(K, a)), max(0.0, signed_distance(K, b)))
    for p in v:
        best = min(best, point_segment_distance(p, a, b))
    return best


def contact_interval(K: ConvexFigure, a, b, eps: float) -> tuple[float, float] | None:
    """Parameters ``t`` in [0, 1] where ``a + t(b - a)`` is within ``eps`` of ``K``.

    The distance to a convex set is convex along a line, so the set is an
    interval; it is located by ternary search and bisection.
    """
    def f(t):
        return max(0.0, signed_distance(K, (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1]))))

    lo, hi = 0.0, 1.0
    for _ in range(80):
        m1 = lo + (hi - lo) / 3.0
        m2 = hi - (hi - lo) / 3.0
        if f(m1) <= f(m2):
            hi = m2
        else:
            lo = m1
    t_star = 0.5 * (lo + hi)
    candidates = [(f(0.0), 0.0), (f(1.0), 1.0), (f(t_star), t_star)]
    f_min, t_star = min(candidates)
    if f_min > eps:
        return None

    def edge(inside, outside):
        if f(outside) <= eps:
            return outside
        for _ in range(60):
            mid = 0.5 * (inside + outside)
            if f(mid) <= eps:
                inside = mid
            else:
                outside = mid
        return inside

    return edge(t_star, 0.0), edge(t_star, 1.0)


# ---------------------------------------------------------------------------
# Constructions
# ---------------------------------------------------------------------------

def split_by_chord(
    K: ConvexFigure, E, F, tol: Tolerances = DEFAULT_TOLERANCES
) -> tuple[ConvexFigure, ConvexFigure]:
    """Cut ``K`` along the line through two of its extreme points.

    The first piece is the hull of the vertices met walking counterclockwise
    from ``E`` to ``F``, the second of those from ``F`` back to ``E``. A chord
    that is a boundary edge yields that edge (a segment) as the first piece
    and ``K`` itself as the second. A segment figure is its own chord, so
    both pieces are ``K``.
    """
    E, F = as_point(E), as_point(F)
    if distance(E, F) <= tol.eps_geom:
        raise InvalidInput("chord endpoints coincide")
    i = K.vertex_index(E, tol.eps_geom)
    j = K.vertex_index(F, tol.eps_geom)
    if i is None:
        raise NotExtremePoint(f"{E} is not an extreme point of the figure")
    if j is None:
        raise NotExtremePoint(f"{F} is not an extreme point of the figure")
    if K.kind is FigureKind.SEGMENT:
        return K, K
    v = K.vertices
    n = len(v)
    first = [v[(i + k) % n] for k in range((j - i) % n + 1)]
    second = [v[(j + k) % n] for k in range((i - j) % n + 1)]
    return convex_hull(first, tol.eps_geom), convex_hull(second, tol.eps_geom)


def tangents_from_point(
    K: ConvexFigure, A, tol: Tolerances = DEFAULT_TOLERANCES
) -> tuple[Point, Point, float]:
    """Tangency points of the two support lines of ``K`` through ``A``.

    Returns ``(A1, A2, angle)`` where ``angle`` is the opening of the wedge
    at ``A`` that holds ``K``. Seen from ``A``, the figure lies clockwise of
    ``A1`` and counterclockwise of ``A2``. When a support line contains a
    whole edge, the endpoint nearer to ``A`` is returned.
    """
    A = as_point(A)
    if signed_distance(K, A) <= tol.eps_geom:
        raise PointNotExternal(f"{A} is not strictly outside the figure")
    cx, cy = K.array.mean(axis=0)
    dx, dy = cx - A.x, cy - A.y
    hi = lo = None
    for v in K.vertices:
        wx, wy = v.x - A.x, v.y - A.y
        theta = math.atan2(dx * wy - dy * wx, dx * wx + dy * wy)
        key_hi = (theta, -math.hypot(wx, wy))
        key_lo = (-theta, -math.hypot(wx, wy))
        if hi is None or key_hi > hi[0]:
            hi = (key_hi, v)
        if lo is None or key_lo > lo[0]:
            lo = (key_lo, v)
    angle = hi[0][0] + lo[0][0]
    return hi[1], lo[1], angle
