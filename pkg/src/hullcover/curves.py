"""Open polylines, their convex hulls, and coverage of a convex figure."""

from __future__ import annotations

import bisect
import enum
import math
from dataclasses import dataclass
from functools import cached_property
from itertools import accumulate
from typing import Iterable

import numpy as np

from .errors import InvalidInput, InvalidParameter
from .geometry import (
    DEFAULT_TOLERANCES,
    ConvexFigure,
    FigureKind,
    Point,
    Tolerances,
    as_point,
    convex_hull,
    diameter,
    distance,
    outside_distances,
    perimeter,
)


@dataclass(frozen=True)
class Curve:
    """An open polyline parametrised by arc length.

    Consecutive vertices may coincide; a curve made of one repeated point
    has length 0.
    """

    vertices: tuple[Point, ...]

    def __post_init__(self):
        verts = tuple(as_point(v) for v in self.vertices)
        if len(verts) < 2:
            raise InvalidInput("a curve needs at least two vertices")
        object.__setattr__(self, "vertices", verts)

    @classmethod
    def from_points(cls, points: Iterable) -> "Curve":
        return cls(tuple(points))

    @cached_property
    def cumulative_lengths(self) -> tuple[float, ...]:
        steps = (distance(a, b) for a, b in zip(self.vertices, self.vertices[1:]))
        return tuple(accumulate(steps, initial=0.0))

    @cached_property
    def array(self) -> np.ndarray:
        arr = np.array(self.vertices, dtype=float)
        arr.setflags(write=False)
        return arr

    @property
    def start(self) -> Point:
        return self.vertices[0]

    @property
    def end(self) -> Point:
        return self.vertices[-1]

    @property
    def is_closed(self) -> bool:
        return self.vertices[0] == self.vertices[-1]

    def __len__(self):
        return len(self.vertices)

    def reversed(self) -> "Curve":
        return Curve(self.vertices[::-1])

    def closed(self) -> "Curve":
        """The loop obtained by joining the end back to the start."""
        if self.is_closed:
            return self
        return Curve(self.vertices + (self.vertices[0],))


def curve_length(c: Curve) -> float:
    return math.fsum(distance(a, b) for a, b in zip(c.vertices, c.vertices[1:]))


def point_at(c: Curve, s: float) -> Point:
    """Point at arc length ``s`` from the start of ``c``."""
    cum = c.cumulative_lengths
    if not (0.0 <= s <= cum[-1]):
        raise InvalidParameter(f"arc length {s} outside [0, {cum[-1]}]")
    k = bisect.bisect_right(cum, s) - 1
    if k >= len(c.vertices) - 1:
        return c.vertices[-1]
    a, b = c.vertices[k], c.vertices[k + 1]
    seg = cum[k + 1] - cum[k]
    if seg == 0.0:
        return a
    t = (s - cum[k]) / seg
    return Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))


def refine(c: Curve, pieces: int) -> Curve:
    """Split every segment into ``pieces`` equal parts; the hull is unchanged."""
    if pieces < 1:
        raise InvalidParameter("pieces must be at least 1")
    out = [c.vertices[0]]
    for a, b in zip(c.vertices, c.vertices[1:]):
        for k in range(1, pieces + 1):
            t = k / pieces
            out.append(b if k == pieces else Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)))
    return Curve(tuple(out))


def hull_of_curve(c: Curve, eps: float = DEFAULT_TOLERANCES.eps_geom) -> ConvexFigure:
    return convex_hull(c.vertices, eps)


@dataclass(frozen=True)
class CoverageReport:
    """How a curve relates to a figure it is meant to cover.

    ``slack`` is the margin in the lower bound
    ``length >= perimeter - diameter`` and ``max_violation`` is the largest
    distance from a figure vertex to the hull of the curve.
    """

    covered: bool
    max_violation: float
    curve_length: float
    figure_perimeter: float
    figure_diameter: float
    slack: float

    @property
    def lower_bound(self) -> float:
        return self.figure_perimeter - self.figure_diameter


def covers(c: Curve, K: ConvexFigure, tol: Tolerances = DEFAULT_TOLERANCES) -> CoverageReport:
    """Decide whether the hull of ``c`` contains ``K``.

    Only the vertices of ``K`` are tested, which suffices because a convex
    figure is the hull of its extreme points.
    """
    hull = hull_of_curve(c, tol.eps_geom)
    violation = float(outside_distances(hull.array, K.array).max())
    length = curve_length(c)
    per = perimeter(K)
    diam = diameter(K)[0]
    return CoverageReport(
        covered=violation <= tol.eps_geom,
        max_violation=violation,
        curve_length=length,
        figure_perimeter=per,
        figure_diameter=diam,
        slack=length - (per - diam),
    )


class Side(str, enum.Enum):
    LEFT = "left"
    RIGHT = "right"


def boundary_arc(K: ConvexFigure, i: int, j: int, side: Side | str) -> Curve:
    """Boundary of ``K`` from vertex ``i`` to vertex ``j``.

    ``left`` walks counterclockwise (keeping the figure on the left),
    ``right`` walks clockwise. The two arcs between the same vertices
    together make up the whole boundary.
    """
    if K.kind is not FigureKind.POLYGON:
        raise InvalidInput("boundary arcs are defined for polygons")
    n = len(K.vertices)
    if not (0 <= i < n and 0 <= j < n):
        raise InvalidInput(f"vertex index out of range for a {n}-gon")
    if i == j:
        raise InvalidInput("boundary arc endpoints must differ")
    side = Side(side)
    step = 1 if side is Side.LEFT else -1
    count = ((j - i) * step) % n
    return Curve(tuple(K.vertices[(i + step * k) % n] for k in range(count + 1)))
