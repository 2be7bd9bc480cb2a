"""Numerical search for short curves whose convex hull covers a polygon.

The infinite-dimensional problem is discretised by fixing a vertex budget
``n`` and searching over the ``2n`` vertex coordinates. Coverage enters as
a quadratic penalty whose weight grows over a few rounds of Nelder-Mead
descent, started from several seeds. Each candidate is then repaired to
exact coverage and pruned of vertices that do not shape its hull, which
can only shorten it.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

import numpy as np
from scipy.optimize import minimize

from . import _fastpath
from .curves import Curve, boundary_arc, covers, curve_length, hull_of_curve, point_at
from .errors import InvalidInput, NotCovering, OptimizationFailed
from .geometry import (
    DEFAULT_TOLERANCES,
    ConvexFigure,
    FigureKind,
    Point,
    Tolerances,
    diameter,
    distance,
    hull_coords,
    outside_distances,
    perimeter,
    segment_figure_distance,
    signed_distance,
    contact_interval,
)
from .theorems import COVERING_STYLES, random_covering_curve


@dataclass(frozen=True)
class OptimizerConfig:
    n_vertices: int
    restarts: int = 32
    penalty_init: float = 10.0
    penalty_growth: float = 10.0
    penalty_rounds: int = 4
    max_iters_per_round: int = 2000
    step_tolerance: float = 1e-10
    seed: int = 0

    def __post_init__(self):
        if self.n_vertices < 2:
            raise InvalidInput("n_vertices must be at least 2")
        for name in ("restarts", "penalty_rounds", "max_iters_per_round"):
            if getattr(self, name) < 1:
                raise InvalidInput(f"{name} must be at least 1")
        if not self.penalty_growth > 1:
            raise InvalidInput("penalty_growth must exceed 1")
        if not self.penalty_init > 0:
            raise InvalidInput("penalty_init must be positive")
        if not self.step_tolerance > 0:
            raise InvalidInput("step_tolerance must be positive")


@dataclass(frozen=True)
class OptimalityReport:
    """Necessary conditions a shortest covering curve satisfies.

    ``contact_chord_residual`` is ``length + d(first contact, last contact)
    - per(hull)``, where the contacts are the first and last curve points
    within ``eps_contact`` of the figure. ``right_angle_residuals`` hold, for
    each endpoint lying outside the figure, the deviation from pi/2 of the
    angle between the first curve segment and the other hull edge at that
    endpoint (None when the endpoint touches the figure).
    """

    endpoints_extreme: tuple[bool, bool]
    chord_meets_figure: bool
    contact_chord_residual: float
    right_angle_residuals: tuple[float | None, float | None]
    division_condition_ok: bool
    first_contact: Point | None = None
    last_contact: Point | None = None
    end_segments_meet_figure: tuple[bool | None, bool | None] = (None, None)

    def necessary_conditions_hold(self, tol: Tolerances = DEFAULT_TOLERANCES) -> bool:
        """Endpoint extremality, chord contact and the contact-chord bound."""
        return (
            all(self.endpoints_extreme)
            and self.chord_meets_figure
            and self.contact_chord_residual >= -tol.eps_eq
        )


@dataclass(frozen=True)
class OptimizationResult:
    best_curve: Curve
    best_length: float
    lower_bound: float
    upper_bound: float
    per_restart_lengths: tuple[float, ...]
    best_restart: int
    report: OptimalityReport
    objective_trace: tuple[float, ...] = field(default=(), repr=False)


# ---------------------------------------------------------------------------
# Objective
# ---------------------------------------------------------------------------

def _violations(pts: np.ndarray, K_array: np.ndarray, eps: float) -> np.ndarray:
    return _fastpath.violations(np.ascontiguousarray(pts, dtype=float), K_array, eps)


def objective(
    c: Curve, K: ConvexFigure, lam: float, tol: Tolerances = DEFAULT_TOLERANCES
) -> float:
    """Curve length plus ``lam`` times the squared distances of uncovered vertices."""
    if lam < 0:
        raise InvalidInput("penalty weight must be nonnegative")
    v = _violations(c.array, np.array(K.array), tol.eps_geom)
    return curve_length(c) + lam * float(np.dot(v, v))


# ---------------------------------------------------------------------------
# Structured candidates
# ---------------------------------------------------------------------------

def covering_boundary_arcs(K: ConvexFigure, tol: Tolerances = DEFAULT_TOLERANCES) -> list[Curve]:
    """Every boundary arc between two vertices whose hull contains ``K``.

    Sorted by length, shortest first (ties keep enumeration order).
    """
    n = len(K.vertices)
    arcs = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            for side in ("left", "right"):
                arc = boundary_arc(K, i, j, side)
                if covers(arc, K, tol).covered:
                    arcs.append(arc)
    arcs.sort(key=curve_length)
    return arcs


def boundary_arc_candidates(
    K: ConvexFigure, tol: Tolerances = DEFAULT_TOLERANCES
) -> tuple[Curve, float]:
    """Shortest boundary arc that still covers ``K``, and its length.

    An arc covers only when it keeps every vertex, so the answer is the
    perimeter minus the longest edge.
    """
    if K.kind is not FigureKind.POLYGON:
        raise InvalidInput("boundary arc candidates need a polygon")
    best = covering_boundary_arcs(K, tol)[0]
    return best, curve_length(best)


def _resample(c: Curve, n: int) -> np.ndarray:
    pts = [np.array(v) for v in c.vertices]
    if len(pts) > n:
        total = c.cumulative_lengths[-1]
        return np.array([point_at(c, min(total, total * k / (n - 1))) for k in range(n)], dtype=float)
    while len(pts) < n:
        seg = [np.hypot(*(b - a)) for a, b in zip(pts, pts[1:])]
        k = int(np.argmax(seg))
        pts.insert(k + 1, 0.5 * (pts[k] + pts[k + 1]))
    return np.array(pts, dtype=float)


def _initial_points(K, cfg, restart, arcs, rng, diam):
    if restart % 2 == 0:
        arc = arcs[(restart // 2) % len(arcs)]
        x = _resample(arc, cfg.n_vertices)
        if restart > 0:
            x = x + rng.normal(0.0, 0.02 * diam, x.shape)
        return x
    style = COVERING_STYLES[(restart // 2) % len(COVERING_STYLES)]
    c = random_covering_curve(K, int(rng.integers(2**62)), style)
    return _resample(c, cfg.n_vertices)


# ---------------------------------------------------------------------------
# Repair and pruning
# ---------------------------------------------------------------------------

def _covered(pts, K_array, eps):
    return _violations(pts, K_array, eps).max() <= eps


def _pull_outward(pts, K_array, eps, max_steps=200):
    # Move the curve vertex nearest to each uncovered figure vertex outward
    # by the uncovered distance until everything is inside the hull.
    pts = pts.copy()
    for _ in range(max_steps):
        hull = np.array(hull_coords(list(map(tuple, pts.tolist())), eps))
        viol = outside_distances(hull, K_array)
        bad = np.flatnonzero(viol > 0.5 * eps)
        if bad.size == 0:
            return pts
        for b in bad:
            v = K_array[b]
            nearest = _nearest_on_polygon(hull, v)
            direction = v - nearest
            k = int(np.argmin(np.hypot(*(pts - v).T)))
            pts[k] += direction * (1.0 + 1e-6) + 0.25 * eps * direction / max(viol[b], 1e-300)
    return None


def _nearest_on_polygon(hull, p):
    if len(hull) == 1:
        return hull[0]
    e = np.roll(hull, -1, axis=0) - hull
    w = p - hull
    t = np.clip(np.einsum("ij,ij->i", w, e) / np.einsum("ij,ij->i", e, e), 0.0, 1.0)
    proj = hull + t[:, None] * e
    return proj[np.argmin(np.hypot(*(proj - p).T))]


def _scale_to_cover(pts, K_array, eps):
    # Expand about the figure's centroid just enough to cover.
    c = K_array.mean(axis=0)
    hi = 1.0
    for _ in range(60):
        hi *= 1.0 + 1e-6 * 2 ** _
        if _covered(c + (pts - c) * hi, K_array, eps):
            break
    else:
        return None
    lo = 1.0
    for _ in range(60):
        mid = 0.5 * (lo + hi)
        if _covered(c + (pts - c) * mid, K_array, eps):
            hi = mid
        else:
            lo = mid
    return c + (pts - c) * hi


def _snap(pts, K_array, radius):
    """Move curve vertices onto nearby figure vertices; also return which moved."""
    out = pts.copy()
    fixed = np.zeros(len(pts), dtype=bool)
    for k, p in enumerate(pts):
        d = np.hypot(*(K_array - p).T)
        j = int(np.argmin(d))
        if d[j] <= radius:
            out[k] = K_array[j]
            fixed[k] = True
    return out, fixed


def _push_edges(pts, K_array, fixed, eps, max_steps=50):
    # Cover the figure by moving only unfixed vertices: each uncovered
    # figure vertex pushes the free ends of the hull edge it lies beyond
    # along that edge's outward normal, just far enough.
    pts = pts.copy()
    for _ in range(max_steps):
        hull = np.array(hull_coords(list(map(tuple, pts.tolist())), eps))
        viol = outside_distances(hull, K_array)
        bad = np.flatnonzero(viol > 0.5 * eps)
        if bad.size == 0:
            return pts
        if len(hull) < 3:
            return None
        e = np.roll(hull, -1, axis=0) - hull
        lengths = np.hypot(*e.T)
        normals = np.column_stack((e[:, 1], -e[:, 0])) / lengths[:, None]
        for b in bad:
            v = K_array[b]
            h = np.einsum("ij,ij->i", v - hull, normals)
            i = int(np.argmax(h))
            a, c = hull[i], hull[(i + 1) % len(hull)]
            t = float(np.clip((v - a) @ e[i] / lengths[i] ** 2, 0.0, 1.0))
            ends = [(a, 1.0 - t), (c, t)]
            movable = [
                (np.flatnonzero(np.all(pts == q, axis=1)), w) for q, w in ends
            ]
            movable = [(idx, w) for idx, w in movable if idx.size and not fixed[idx].any()]
            weight = sum(w for _, w in movable)
            if weight <= 1e-3:
                return None
            shift = (h[i] + eps) / weight
            for idx, _ in movable:
                pts[idx] += shift * normals[i]
    return None


def _prune(pts, eps):
    # Vertices that are not extreme points of the hull can be skipped: the
    # hull stays the same and the triangle inequality shortens the curve.
    hull = set(hull_coords(list(map(tuple, pts.tolist())), eps))
    keep = [p for p in pts if tuple(p.tolist()) in hull]
    out = [keep[0]]
    for p in keep[1:]:
        if not np.array_equal(p, out[-1]):
            out.append(p)
    if len(out) == 1:
        out.append(out[0])
    return np.array(out)


def _length(pts):
    return float(np.hypot(*np.diff(pts, axis=0).T).sum())


def _finalize(pts, K_array, diam, eps):
    """Shortest covering, pruned variant of ``pts``, or None."""
    snapped, pinned = _snap(pts, K_array, 1e-3 * diam)
    repairs = (_pull_outward, _scale_to_cover)
    variants = [
        (pts, repairs),
        (snapped, (lambda q, Ka, e: _push_edges(q, Ka, pinned, e),) + repairs),
    ]
    best = None
    for v, fixes in variants:
        for repair in fixes:
            fixed = v if _covered(v, K_array, eps) else repair(v, K_array, eps)
            if fixed is None:
                continue
            fixed = _prune(fixed, eps)
            if not _covered(fixed, K_array, eps):
                continue
            if best is None or _length(fixed) < _length(best):
                best = fixed
    return best


# ---------------------------------------------------------------------------
# Search
# ---------------------------------------------------------------------------

def _descend(x0, K_array, cfg, diam, eps, trace):
    x = x0.ravel().copy()
    lam = cfg.penalty_init
    scale = 0.05 * diam
    dim = x.size
    for _ in range(cfg.penalty_rounds):
        simplex = np.vstack([x, x + scale * np.eye(dim)])
        res = minimize(
            _fastpath.penalized,
            x,
            args=(K_array, lam, eps),
            method="Nelder-Mead",
            options={
                "maxiter": cfg.max_iters_per_round,
                "xatol": cfg.step_tolerance,
                "fatol": cfg.step_tolerance,
                "initial_simplex": simplex,
                "adaptive": dim > 8,
            },
        )
        x = res.x
        trace.append(float(res.fun))
        lam *= cfg.penalty_growth
        scale *= 0.1
    return x.reshape(-1, 2)


def minimize_covering_curve(
    K: ConvexFigure,
    cfg: OptimizerConfig,
    tol: Tolerances = DEFAULT_TOLERANCES,
    initial_curves: Sequence[Curve] = (),
) -> OptimizationResult:
    """Search for a short curve whose hull covers the polygon ``K``.

    Restarts alternate between perturbed covering boundary arcs and random
    covering curves, each resampled to ``cfg.n_vertices`` vertices. The
    result is deterministic for a given ``(K, cfg)``: restart ``r`` draws
    from its own seed stream, and ties go to the lowest restart index.
    The shortest covering boundary arc is kept as a fallback, so the
    result never exceeds it (that fallback may use more than
    ``n_vertices`` vertices when the polygon has more).

    ``initial_curves`` adds one extra restart per curve that fits the
    budget, numbered after the random ones. Such a curve is itself a
    candidate, so the result is never longer than any covering warm start.
    """
    if K.kind is not FigureKind.POLYGON:
        raise InvalidInput("the optimizer needs a polygon")
    eps = tol.eps_geom
    K_array = np.array(K.array)
    diam = diameter(K)[0]
    arcs = covering_boundary_arcs(K, tol)
    best_arc = arcs[0]
    upper = curve_length(best_arc)

    lengths = []
    best_pts, best_len, best_restart = None, math.inf, -1
    trace: list[float] = []
    warm = [_resample(c, cfg.n_vertices) for c in initial_curves if len(c.vertices) <= cfg.n_vertices]
    for r in range(cfg.restarts + len(warm)):
        if r < cfg.restarts:
            rng = np.random.default_rng([cfg.seed & 0xFFFFFFFFFFFFFFFF, r])
            x0 = _initial_points(K, cfg, r, arcs, rng, diam)
        else:
            x0 = warm[r - cfg.restarts]
        pts = _descend(x0, K_array, cfg, diam, eps, trace)
        pts = _finalize(pts, K_array, diam, eps)
        if r >= cfg.restarts and _covered(x0, K_array, eps):
            start = _prune(x0, eps)
            if pts is None or _length(start) <= _length(pts):
                pts = start
        if pts is None:
            lengths.append(math.inf)
            continue
        length = _length(pts)
        lengths.append(length)
        if length < best_len:
            best_pts, best_len, best_restart = pts, length, r

    if best_pts is None or best_len > upper:
        curve, best_restart = best_arc, -1
    else:
        curve = Curve(tuple(map(tuple, best_pts)))
    report = covers(curve, K, tol)
    if not report.covered:
        raise OptimizationFailed(f"best curve misses the figure by {report.max_violation:.3g}")
    return OptimizationResult(
        best_curve=curve,
        best_length=report.curve_length,
        lower_bound=report.lower_bound,
        upper_bound=upper,
        per_restart_lengths=tuple(lengths),
        best_restart=best_restart,
        report=optimality_report(curve, K, tol),
        objective_trace=tuple(trace),
    )


def sweep_budgets(
    K: ConvexFigure,
    budgets: Iterable[int],
    cfg: OptimizerConfig,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> dict[int, OptimizationResult]:
    """Optimize at increasing vertex budgets, warm-starting each from the last.

    Every budget sees the previous best curve as a candidate, so lengths
    never increase along the sweep.
    """
    out: dict[int, OptimizationResult] = {}
    previous: list[Curve] = []
    for n in sorted(set(budgets)):
        res = minimize_covering_curve(K, dataclasses.replace(cfg, n_vertices=n), tol, previous)
        out[n] = res
        previous = [res.best_curve]
    return out


# ---------------------------------------------------------------------------
# Necessary conditions
# ---------------------------------------------------------------------------

def _contacts(c: Curve, K: ConvexFigure, eps: float):
    segs = list(zip(c.vertices, c.vertices[1:]))

    def at(a, b, t):
        return Point(a.x + t * (b.x - a.x), a.y + t * (b.y - a.y))

    first = last = None
    for a, b in segs:
        iv = contact_interval(K, a, b, eps)
        if iv is not None:
            first = at(a, b, iv[0])
            break
    for a, b in reversed(segs):
        iv = contact_interval(K, a, b, eps)
        if iv is not None:
            last = at(a, b, iv[1])
            break
    return first, last


def _angle(u, v) -> float:
    return math.atan2(abs(u[0] * v[1] - u[1] * v[0]), u[0] * v[0] + u[1] * v[1])


def _endpoint_data(c: Curve, K: ConvexFigure, hull, tol):
    """(right-angle residual, first segment meets K) for the start of ``c``."""
    A = c.start
    if signed_distance(K, A) <= tol.eps_contact:
        return None, None
    k = hull.vertex_index(A, tol.eps_geom)
    nxt = next((v for v in c.vertices[1:] if distance(v, A) > tol.eps_geom), None)
    if k is None or nxt is None or len(hull.vertices) < 2:
        return None, None
    meets = segment_figure_distance(K, A, nxt) <= tol.eps_contact
    if len(hull.vertices) == 2:
        return None, meets
    hv = hull.vertices
    nbrs = [hv[k - 1], hv[(k + 1) % len(hv)]]
    u = (nxt.x - A.x, nxt.y - A.y)
    dirs = [(p.x - A.x, p.y - A.y) for p in nbrs]
    along = min(range(2), key=lambda i: _angle(u, dirs[i]))
    other = dirs[1 - along]
    return _angle(u, other) - math.pi / 2, meets


def _division_ok(c: Curve, K: ConvexFigure, hull, tol, max_pairs=600) -> bool:
    hv = hull.vertices
    idx = sorted({hull.vertex_index(v, tol.eps_geom) for v in c.vertices} - {None})
    pairs = list(combinations(idx, 2))
    if len(pairs) > max_pairs:
        rng = np.random.default_rng(0)
        pairs = [pairs[i] for i in rng.choice(len(pairs), max_pairs, replace=False)]
    m = len(hv)
    for i, j in pairs:
        if m <= 2 or (j - i) % m in (1, m - 1):
            continue
        E, F = hv[i], hv[j]
        L = distance(E, F)
        h = (K.array[:, 1] - E.y) * (F.x - E.x) - (K.array[:, 0] - E.x) * (F.y - E.y)
        h /= L
        if not (h.max() > tol.eps_geom and h.min() < -tol.eps_geom):
            return False
    return True


def optimality_report(
    c: Curve, K: ConvexFigure, tol: Tolerances = DEFAULT_TOLERANCES
) -> OptimalityReport:
    """Evaluate the necessary conditions for ``c`` to be a shortest covering curve.

    A curve that fails any of them can be shortened while still covering
    ``K``; passing them does not prove minimality.
    """
    if not covers(c, K, tol).covered:
        raise NotCovering("optimality conditions only apply to covering curves")
    hull = hull_of_curve(c, tol.eps_geom)
    A, B = c.start, c.end
    extreme = (
        hull.vertex_index(A, tol.eps_geom) is not None,
        hull.vertex_index(B, tol.eps_geom) is not None,
    )
    chord_meets = segment_figure_distance(K, A, B) <= tol.eps_contact
    first, last = _contacts(c, K, tol.eps_contact)
    chord = distance(first, last) if first is not None else 0.0
    residual = curve_length(c) + chord - perimeter(hull)
    ra, ma = _endpoint_data(c, K, hull, tol)
    rb, mb = _endpoint_data(c.reversed(), K, hull, tol)
    return OptimalityReport(
        endpoints_extreme=extreme,
        chord_meets_figure=chord_meets,
        contact_chord_residual=residual,
        right_angle_residuals=(ra, rb),
        division_condition_ok=_division_ok(c, K, hull, tol),
        first_contact=first,
        last_contact=last,
        end_segments_meet_figure=(ma, mb),
    )
