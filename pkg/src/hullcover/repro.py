"""Self-checking reconstructions of the worked examples.

Each ``repro_*`` function builds the example, evaluates every numeric
claim about it and returns a :class:`ReproReport`. A claim that does not
hold raises :class:`ReproFailure` naming the statement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .curves import Curve, boundary_arc, covers, curve_length, hull_of_curve
from .errors import HullCoverError, InvalidInput
from .geometry import (
    DEFAULT_TOLERANCES,
    ConvexFigure,
    Point,
    Tolerances,
    convex_hull,
    diameter,
    hausdorff_distance,
    perimeter,
)
from .optimizer import OptimizationResult, OptimizerConfig, boundary_arc_candidates, minimize_covering_curve
from .theorems import EqualityCase, equality_case_check

PARALLELOGRAM_CROSSOVER = (3 * math.sqrt(2) + 2) / 4


class ReproFailure(HullCoverError, AssertionError):
    pass


@dataclass(frozen=True)
class Check:
    statement: str
    passed: bool
    value: float | str
    expected: float | str
    tolerance: float | None = None

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tol = "" if self.tolerance is None else f" (tol {self.tolerance:g})"
        return f"[{status}] {self.statement}: got {self.value}, expected {self.expected}{tol}"


@dataclass
class ReproReport:
    name: str
    figure: ConvexFigure
    curves: dict[str, Curve] = field(default_factory=dict)
    checks: list[Check] = field(default_factory=list)
    values: dict[str, float] = field(default_factory=dict)
    optimization: OptimizationResult | None = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def close(self, statement, value, expected, tol):
        self._record(Check(statement, abs(value - expected) <= tol, value, expected, tol))

    def holds(self, statement, condition, value="", expected=""):
        self._record(Check(statement, bool(condition), value, expected))

    def _record(self, check):
        self.checks.append(check)
        if not check.passed:
            raise ReproFailure(f"{self.name}: {check.line()}")

    def lines(self) -> list[str]:
        return [c.line() for c in self.checks]


def equilateral_triangle() -> ConvexFigure:
    return convex_hull([(0.0, 0.0), (1.0, 0.0), (0.5, math.sqrt(3) / 2)])


def unit_square() -> ConvexFigure:
    return convex_hull([(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)])


def parallelogram(t: float) -> tuple[ConvexFigure, dict[str, Point]]:
    """Parallelogram ABCD with A=(0,0), B=(1,1), C=(t+1,1), D=(t,0), plus E=(t+1,0)."""
    pts = {
        "A": Point(0, 0), "B": Point(1, 1), "C": Point(t + 1, 1),
        "D": Point(t, 0), "E": Point(t + 1, 0),
    }
    return convex_hull([pts[k] for k in "ABCD"]), pts


def half_disk(n_segments: int) -> tuple[ConvexFigure, Curve]:
    """Unit half-disk as a polygon, and its circular arc from (1, 0) to (-1, 0)."""
    if n_segments < 8 or n_segments % 2:
        raise InvalidInput("n_segments must be an even number >= 8")
    pts = [Point(1.0, 0.0)]
    for k in range(1, n_segments):
        theta = math.pi * k / n_segments
        pts.append(Point(math.cos(theta), math.sin(theta)))
    pts.append(Point(-1.0, 0.0))
    return convex_hull(pts), Curve(tuple(pts))


def _optimize(K, n, restarts, seed, tol):
    return minimize_covering_curve(K, OptimizerConfig(n_vertices=n, restarts=restarts, seed=seed), tol)


def repro_triangle(
    optimize: bool = True, restarts: int = 32, seed: int = 0, tol: Tolerances = DEFAULT_TOLERANCES
) -> ReproReport:
    """Any two sides of an equilateral triangle are a shortest covering curve."""
    K = equilateral_triangle()
    rep = ReproReport("triangle", K)
    per, diam = perimeter(K), diameter(K)[0]
    rep.values.update(perimeter=per, diameter=diam, bound=per - diam)
    rep.close("perimeter of the unit equilateral triangle", per, 3.0, 1e-12)
    rep.close("diameter of the unit equilateral triangle", diam, 1.0, 1e-12)
    rep.close("lower bound per - diam", per - diam, 2.0, 1e-12)
    n = len(K.vertices)
    for i in range(n):
        arc = boundary_arc(K, (i + 1) % n, i, "left")
        rep.curves[f"two sides omitting edge {i}"] = arc
        r = covers(arc, K, tol)
        rep.holds(f"two sides omitting edge {i} cover the triangle", r.covered)
        rep.close(f"two sides omitting edge {i} attain the bound", r.slack, 0.0, 1e-12)
        rep.holds(
            f"two sides omitting edge {i} meet the equality characterisation",
            equality_case_check(arc, K, tol) is EqualityCase.EQUALITY_VALID,
        )
    if optimize:
        res = _optimize(K, 3, restarts, seed, tol)
        rep.optimization = res
        rep.curves["optimizer"] = res.best_curve
        rep.values["optimizer_length"] = res.best_length
        rep.close("optimizer finds a shortest covering curve of length 2", res.best_length, 2.0, 1e-4)
    return rep


def repro_parallelogram(
    t: float = 2.0, optimize: bool = True, restarts: int = 32, seed: int = 0,
    tol: Tolerances = DEFAULT_TOLERANCES,
) -> ReproReport:
    """Past the crossover the non-convex broken line ABDC beats the convex ABCE."""
    if not t >= 1.0:
        raise InvalidInput("the parallelogram example needs t >= 1")
    K, p = parallelogram(t)
    rep = ReproReport("parallelogram", K)
    abce = Curve((p["A"], p["B"], p["C"], p["E"]))
    abdc = Curve((p["A"], p["B"], p["D"], p["C"]))
    rep.curves.update(ABCE=abce, ABDC=abdc)

    len_abce, len_abdc = curve_length(abce), curve_length(abdc)
    closed_abce = 1 + math.sqrt(2) + t
    closed_abdc = 2 * math.sqrt(2) + math.sqrt(2 - 2 * t + t * t)
    rep.values.update(t=t, ABCE=len_abce, ABDC=len_abdc, difference=len_abce - len_abdc)
    rep.close("length of ABCE is 1 + sqrt2 + t", len_abce, closed_abce, 1e-12)
    rep.close("length of ABDC is 2 sqrt2 + sqrt(2 - 2t + t^2)", len_abdc, closed_abdc, 1e-12)
    rep.holds("ABCE covers the parallelogram", covers(abce, K, tol).covered)
    rep.holds("ABDC covers the parallelogram", covers(abdc, K, tol).covered)
    rep.close("ABDC has the parallelogram as its hull", _hull_gap(abdc, K), 0.0, 1e-12)

    _, ps = parallelogram(PARALLELOGRAM_CROSSOVER)
    at_star = curve_length(Curve((ps["A"], ps["B"], ps["C"], ps["E"]))) - curve_length(
        Curve((ps["A"], ps["B"], ps["D"], ps["C"]))
    )
    rep.values["difference_at_crossover"] = at_star
    rep.close("the two lengths agree at t* = (3 sqrt2 + 2) / 4", at_star, 0.0, 1e-9)
    if t == 2.0:
        rep.close("at t = 2 ABCE exceeds ABDC by 3 - 2 sqrt2", len_abce - len_abdc, 3 - 2 * math.sqrt(2), 1e-9)
    if t > PARALLELOGRAM_CROSSOVER + 1e-9:
        rep.holds("past the crossover ABDC is shorter", len_abdc < len_abce, len_abdc, f"< {len_abce}")
    elif t < PARALLELOGRAM_CROSSOVER - 1e-9:
        rep.holds("before the crossover ABCE is shorter", len_abce < len_abdc, len_abce, f"< {len_abdc}")
    if optimize:
        res = _optimize(K, 4, restarts, seed, tol)
        rep.optimization = res
        rep.curves["optimizer"] = res.best_curve
        rep.values["optimizer_length"] = res.best_length
        target = min(len_abce, len_abdc)
        rep.holds(
            "optimizer is no longer than the better broken line",
            res.best_length <= target + 1e-4, res.best_length, f"<= {target} + 1e-4",
        )
    return rep


def _hull_gap(c, K):
    return hausdorff_distance(hull_of_curve(c), K)


def repro_halfdisk(n_segments: int = 256, tol: Tolerances = DEFAULT_TOLERANCES) -> ReproReport:
    """The arc of a half-disk is a curve of the equality family."""
    K, arc = half_disk(n_segments)
    rep = ReproReport("halfdisk", K)
    rep.curves["arc"] = arc
    per = perimeter(K)
    diam, p, q = diameter(K)
    length = curve_length(arc)
    rep.values.update(perimeter=per, diameter=diam, arc_length=length, slack=length - (per - diam))
    rep.close("diameter is the bounding chord", diam, 2.0, 1e-12)
    rep.holds("diameter is realised by the arc endpoints", {p, q} == {arc.start, arc.end})
    rep.close("arc length equals per - diam", length, per - diam, 1e-12)
    rep.holds(
        "the arc is classified as an equality case",
        equality_case_check(arc, K, tol) is EqualityCase.EQUALITY_VALID,
    )
    inscribed = 2 * n_segments * math.sin(math.pi / (2 * n_segments))
    rep.close("arc length matches the inscribed polygon formula", length, inscribed, 1e-12)
    rep.close("arc length approaches pi", length, math.pi, 2e-4)
    return rep


def repro_square(
    optimize: bool = True, restarts: int = 32, seed: int = 0, tol: Tolerances = DEFAULT_TOLERANCES
) -> ReproReport:
    """No covering curve of the square attains the bound: no edge is a diameter."""
    K = unit_square()
    rep = ReproReport("square", K)
    per, diam = perimeter(K), diameter(K)[0]
    bound = per - diam
    arc, arc_len = boundary_arc_candidates(K, tol)
    rep.curves["best boundary arc"] = arc
    rep.values.update(bound=bound, best_arc=arc_len)
    rep.close("lower bound is 4 - sqrt2", bound, 4 - math.sqrt(2), 1e-12)
    rep.close("best covering boundary arc has length 3", arc_len, 3.0, 1e-12)
    rep.holds("the best arc is a strict case", equality_case_check(arc, K, tol) is EqualityCase.STRICT)
    if optimize:
        res = _optimize(K, 4, restarts, seed, tol)
        rep.optimization = res
        rep.curves["optimizer"] = res.best_curve
        gap = res.best_length - bound
        rep.values.update(optimizer_length=res.best_length, gap_above_bound=gap)
        rep.holds(
            "optimizer length lies in [4 - sqrt2, 3]",
            bound - tol.eps_eq <= res.best_length <= 3 + tol.eps_eq,
            res.best_length, f"in [{bound}, 3]",
        )
        rep.holds("optimizer stays strictly above the bound", gap > tol.eps_eq, gap, "> 0")
        rep.holds(
            "optimizer curve is a strict case",
            equality_case_check(res.best_curve, K, tol) is EqualityCase.STRICT,
        )
    return rep


CASES = {
    "triangle": repro_triangle,
    "parallelogram": repro_parallelogram,
    "halfdisk": repro_halfdisk,
    "square": repro_square,
}
