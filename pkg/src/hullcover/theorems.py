"""Checkers for the covering-curve inequalities, plus seeded generators.

Every checker recomputes the quantities it needs from the kernel and
raises :class:`~hullcover.errors.InequalityViolation` when an inequality
that must hold fails beyond tolerance. A raised violation always means a
bug somewhere in the library, never a property of the input.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .curves import CoverageReport, Curve, covers, curve_length, hull_of_curve
from .errors import (
    AngleNotRight,
    InequalityViolation,
    InvalidInput,
    NotCovering,
    NotNested,
)
from .geometry import (
    DEFAULT_TOLERANCES,
    ConvexFigure,
    Point,
    Tolerances,
    add_point_hull,
    convex_hull,
    cross,
    diameter,
    distance,
    hausdorff_distance,
    perimeter,
    signed_distance,
    tangents_from_point,
)

CLOSED_SLACK_FLOOR = -1e-12
MONOTONE_SLACK_FLOOR = -1e-12


def main_inequality_check(
    c: Curve, K: ConvexFigure, tol: Tolerances = DEFAULT_TOLERANCES
) -> CoverageReport:
    """Check ``length(c) >= per(K) - diam(K)`` for a covering curve."""
    report = covers(c, K, tol)
    if not report.covered:
        raise NotCovering(
            f"curve leaves a figure vertex {report.max_violation:.3g} outside its hull"
        )
    if report.slack < -tol.eps_eq:
        raise InequalityViolation(
            f"length {report.curve_length!r} is below per - diam = {report.lower_bound!r}"
        )
    return report


def half_perimeter_check(
    c: Curve, K: ConvexFigure, tol: Tolerances = DEFAULT_TOLERANCES
) -> float:
    """Slack in the weaker bound ``length(c) >= per(K) / 2``."""
    report = main_inequality_check(c, K, tol)
    slack = report.curve_length - 0.5 * report.figure_perimeter
    if slack < -tol.eps_eq:
        raise InequalityViolation(f"length is {-slack:.3g} below half the perimeter")
    return slack


class EqualityCase(str, enum.Enum):
    STRICT = "strict"
    EQUALITY_VALID = "equality_valid"
    EQUALITY_VIOLATES_CHARACTERIZATION = "equality_violates_characterization"


@dataclass(frozen=True)
class EqualityClauses:
    """The three conditions that characterise curves attaining the bound."""

    convex_on_hull_boundary: bool
    hull_equals_figure: bool
    chord_is_diameter: bool

    def __bool__(self):
        return self.convex_on_hull_boundary and self.hull_equals_figure and self.chord_is_diameter


def equality_clauses(
    c: Curve, K: ConvexFigure, tol: Tolerances = DEFAULT_TOLERANCES
) -> EqualityClauses:
    hull = hull_of_curve(c, tol.eps_geom)
    chord = distance(c.start, c.end)
    # A closed curve is at least as long as the perimeter of its hull, with
    # equality exactly for a single convex traversal of the hull boundary.
    closing_gap = curve_length(c) + chord - perimeter(hull)
    on_boundary = all(
        abs(signed_distance(hull, v)) <= tol.eps_eq for v in c.vertices
    )
    return EqualityClauses(
        convex_on_hull_boundary=on_boundary and abs(closing_gap) <= tol.eps_eq,
        hull_equals_figure=hausdorff_distance(hull, K) <= tol.eps_eq,
        chord_is_diameter=abs(chord - diameter(K)[0]) <= tol.eps_eq,
    )


def equality_case_check(
    c: Curve, K: ConvexFigure, tol: Tolerances = DEFAULT_TOLERANCES
) -> EqualityCase:
    """Classify a covering curve against the equality characterisation.

    A curve whose slack is within ``eps_eq`` of zero must satisfy all three
    clauses of :class:`EqualityClauses`; if it does not, the result is
    ``EQUALITY_VIOLATES_CHARACTERIZATION``, which signals a bug.
    """
    report = main_inequality_check(c, K, tol)
    if abs(report.slack) > tol.eps_eq:
        return EqualityCase.STRICT
    if equality_clauses(c, K, tol):
        return EqualityCase.EQUALITY_VALID
    return EqualityCase.EQUALITY_VIOLATES_CHARACTERIZATION


def is_convex_traversal(c: Curve, eps: float = 1e-9) -> bool:
    """True when a closed polyline runs once around a convex boundary.

    Vertices that continue straight ahead are ignored; any reversal, any
    change of turning direction, or a total turn other than one full
    revolution makes the traversal non-convex.
    """
    pts = [c.vertices[0]]
    for v in c.vertices[1:]:
        if distance(v, pts[-1]) > eps:
            pts.append(v)
    if len(pts) > 1 and distance(pts[0], pts[-1]) <= eps:
        pts.pop()
    if len(pts) < 3:
        return False
    n = len(pts)
    turns = []
    for i in range(n):
        a, b, d = pts[i - 1], pts[i], pts[(i + 1) % n]
        ux, uy = b[0] - a[0], b[1] - a[1]
        vx, vy = d[0] - b[0], d[1] - b[1]
        turn = math.atan2(ux * vy - uy * vx, ux * vx + uy * vy)
        if abs(turn) <= eps:
            continue
        if abs(abs(turn) - math.pi) <= eps:
            return False
        turns.append(turn)
    if not turns:
        return False
    if not (all(t > 0 for t in turns) or all(t < 0 for t in turns)):
        return False
    return abs(abs(sum(turns)) - 2 * math.pi) <= 1e-6


def closed_curve_check(c: Curve, tol: Tolerances = DEFAULT_TOLERANCES) -> float:
    """Slack ``length(c) - per(co(c))`` of a closed polyline (never negative)."""
    if not c.is_closed:
        raise InvalidInput("closed-curve check needs first vertex == last vertex")
    slack = curve_length(c) - perimeter(hull_of_curve(c, tol.eps_geom))
    if slack < CLOSED_SLACK_FLOOR:
        raise InequalityViolation(f"closed curve shorter than its hull perimeter by {-slack:.3g}")
    return slack


def monotonicity_check(
    K1: ConvexFigure, K2: ConvexFigure, tol: Tolerances = DEFAULT_TOLERANCES
) -> float:
    """``per(K2) - per(K1)`` for nested figures ``K1`` inside ``K2``."""
    worst = max(signed_distance(K2, v) for v in K1.vertices)
    if worst > tol.eps_geom:
        raise NotNested(f"inner figure sticks out by {worst:.3g}")
    diff = perimeter(K2) - perimeter(K1)
    if diff < MONOTONE_SLACK_FLOOR:
        raise InequalityViolation(f"inner perimeter exceeds outer by {-diff:.3g}")
    return diff


def add_point_inequality_check(
    K: ConvexFigure, A, tol: Tolerances = DEFAULT_TOLERANCES
) -> float:
    """Slack of ``d(A, A1) + per(K) > per(co(K + A))`` for a right-angled wedge.

    Only defined when the two support lines from ``A`` meet at a right
    angle (within ``eps_eq``); otherwise :class:`AngleNotRight` is raised.
    """
    A1, _, angle = tangents_from_point(K, A, tol)
    if abs(angle - math.pi / 2) > tol.eps_eq:
        raise AngleNotRight(f"support lines meet at {angle!r}, not pi/2")
    slack = distance(A, A1) + perimeter(K) - perimeter(add_point_hull(K, A, tol.eps_geom))
    if slack <= 0.0:
        raise InequalityViolation(f"adding the point did not lose perimeter: slack {slack!r}")
    return slack


# ---------------------------------------------------------------------------
# Seeded generators
# ---------------------------------------------------------------------------

COVERING_STYLES = ("boundary_perturb", "vertex_tour", "arc_plus_noise")


def _rng(seed: int, *stream: int) -> np.random.Generator:
    return np.random.default_rng([int(seed) & 0xFFFFFFFFFFFFFFFF, *stream])


def _disk_points(rng, n):
    r = np.sqrt(rng.random(n))
    theta = rng.random(n) * 2 * np.pi
    return np.column_stack((r * np.cos(theta), r * np.sin(theta)))


def random_convex_polygon(n: int, seed: int) -> ConvexFigure:
    """Hull of ``n`` uniform points in the unit disk, redrawn until it is a polygon."""
    if n < 3:
        raise InvalidInput("need at least three points for a polygon")
    rng = _rng(seed, 1)
    while True:
        K = convex_hull(map(tuple, _disk_points(rng, n)))
        if K.is_polygon:
            return K


def _boundary_samples(K: ConvexFigure, rng, extra: int) -> list[Point]:
    # Vertices plus `extra` uniform boundary points, in counterclockwise order.
    verts = list(K.vertices)
    if len(verts) == 1:
        return verts
    edges = K.edges()
    lengths = np.array([distance(a, b) for a, b in edges])
    cum = np.concatenate(([0.0], np.cumsum(lengths)))
    ss = np.sort(rng.random(extra) * cum[-1])
    out = []
    k = 0
    for i, (a, b) in enumerate(edges):
        out.append(a)
        while k < len(ss) and ss[k] < cum[i + 1]:
            t = (ss[k] - cum[i]) / lengths[i]
            out.append(Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)))
            k += 1
    return out


def _interior_point(K: ConvexFigure, rng) -> Point:
    w = rng.dirichlet(np.ones(len(K.vertices)))
    x, y = w @ K.array
    return Point(x, y)


def random_covering_curve(K: ConvexFigure, seed: int, style: str) -> Curve:
    """A random curve whose hull contains ``K``, reproducible per (seed, style).

    ``vertex_tour`` visits every vertex in random order with optional
    interior detours, ``boundary_perturb`` walks once around the boundary
    after pushing samples radially outward, and ``arc_plus_noise`` jitters
    a boundary walk and keeps the first draw that still covers.
    """
    if style not in COVERING_STYLES:
        raise InvalidInput(f"unknown covering style {style!r}")
    rng = _rng(seed, 2, COVERING_STYLES.index(style))
    n = len(K.vertices)
    if style == "vertex_tour":
        pts = []
        for i in rng.permutation(n):
            if rng.random() < 0.25:
                pts.append(_interior_point(K, rng))
            pts.append(K.vertices[i])
        if len(pts) == 1:
            pts.append(pts[0])
        return Curve(tuple(pts))

    samples = _boundary_samples(K, rng, int(rng.integers(0, 2 * n + 1)))
    start = int(rng.integers(len(samples)))
    walk = samples[start:] + samples[:start]
    if len(walk) == 1:
        walk = walk * 2

    if style == "boundary_perturb":
        c = K.array.mean(axis=0)
        scale = 1.0 + rng.random(len(walk)) * 0.2
        pushed = c + (np.array(walk) - c) * scale[:, None]
        return Curve(tuple(map(tuple, pushed)))

    base = np.array(walk)
    sigma = 0.05 * max(diameter(K)[0], 1e-12)
    for _ in range(20):
        cand = Curve(tuple(map(tuple, base + rng.normal(0.0, sigma, base.shape))))
        if covers(cand, K).covered:
            return cand
        sigma *= 0.5
    return Curve(tuple(walk))


def random_closed_polyline(n: int, seed: int) -> Curve:
    """A closed polyline with ``n`` distinct vertices.

    One seed in four yields a convex traversal of a random polygon (with
    extra points on its edges, random direction), the rest are uniform
    points in the disk joined in random order.
    """
    rng = _rng(seed, 3)
    if rng.random() < 0.25:
        K = random_convex_polygon(max(n, 3), seed)
        walk = _boundary_samples(K, rng, max(0, n - len(K.vertices)))
        start = int(rng.integers(len(walk)))
        walk = walk[start:] + walk[:start]
        if rng.random() < 0.5:
            walk.reverse()
        return Curve(tuple(walk) + (walk[0],))
    pts = [Point(*p) for p in _disk_points(rng, n)]
    return Curve(tuple(pts) + (pts[0],))


def random_nested_pair(seed: int, n: int = 24) -> tuple[ConvexFigure, ConvexFigure]:
    """``(inner, outer)`` with the inner figure inside the outer polygon."""
    rng = _rng(seed, 4)
    outer = random_convex_polygon(n, seed)
    m = len(outer.vertices)
    if rng.random() < 0.5:
        k = int(rng.integers(1, m + 1))
        idx = np.sort(rng.choice(m, size=k, replace=False))
        inner = convex_hull([outer.vertices[i] for i in idx])
    else:
        k = int(rng.integers(1, 12))
        inner = convex_hull([_interior_point(outer, rng) for _ in range(k)])
    return inner, outer


# ---------------------------------------------------------------------------
# Property campaign
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CaseRecord:
    """One row of the randomized campaign (also the CSV row layout)."""

    seed: int
    style: str
    n_vertices: int
    length: float
    perimeter: float
    diameter: float
    slack: float
    covered: bool
    failure: str = ""

    CSV_COLUMNS = (
        "seed", "style", "n_vertices", "length", "perimeter", "diameter", "slack", "covered",
    )

    def csv_row(self) -> list:
        return [
            self.seed, self.style, self.n_vertices, repr(self.length), repr(self.perimeter),
            repr(self.diameter), repr(self.slack), int(self.covered),
        ]


def covering_case(seed: int) -> tuple[ConvexFigure, Curve, str]:
    """The (figure, covering curve, style) used by campaign case ``seed``."""
    rng = _rng(seed, 5)
    K = random_convex_polygon(int(rng.integers(3, 41)), seed)
    style = COVERING_STYLES[seed % len(COVERING_STYLES)]
    return K, random_covering_curve(K, seed, style), style


def run_case(seed: int, tol: Tolerances = DEFAULT_TOLERANCES) -> CaseRecord:
    """Run one seeded case through every checker.

    The returned record carries a nonempty ``failure`` message when any
    checker reports a violation.
    """
    K, c, style = covering_case(seed)
    report = covers(c, K, tol)
    failure = ""
    try:
        main_inequality_check(c, K, tol)
        half_perimeter_check(c, K, tol)
        case = equality_case_check(c, K, tol)
        if case is EqualityCase.EQUALITY_VIOLATES_CHARACTERIZATION:
            failure = "equality reached without the characterising clauses"
        closed_curve_check(c.closed(), tol)
        closed_curve_check(random_closed_polyline(20, seed), tol)
        inner, outer = random_nested_pair(seed)
        monotonicity_check(inner, outer, tol)
    except (InequalityViolation, NotCovering, NotNested) as exc:
        failure = f"{type(exc).__name__}: {exc}"
    return CaseRecord(
        seed=seed,
        style=style,
        n_vertices=len(K.vertices),
        length=report.curve_length,
        perimeter=report.figure_perimeter,
        diameter=report.figure_diameter,
        slack=report.slack,
        covered=report.covered,
        failure=failure,
    )


def campaign(count: int, seed: int, tol: Tolerances = DEFAULT_TOLERANCES) -> Iterator[CaseRecord]:
    """Cases ``seed, seed + 1, ..., seed + count - 1``.

    Case seeds are consecutive so a failing case replays on its own with
    ``campaign(1, failing_seed)``.
    """
    for k in range(count):
        yield run_case(seed + k, tol)
