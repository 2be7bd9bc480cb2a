"""End-to-end acceptance criteria, one test each.

Every test records a PASS or FAIL line; the lines are also printed in the
terminal summary so a plain ``pytest`` run shows them.
"""

import math
import time

import numpy as np

from conftest import brute_diameter
from hullcover import _fastpath
from hullcover.curves import Curve, covers, curve_length
from hullcover.geometry import DEFAULT_TOLERANCES as TOL
from hullcover.geometry import convex_hull, diameter, perimeter
from hullcover.optimizer import OptimizerConfig, minimize_covering_curve
from hullcover.repro import (
    PARALLELOGRAM_CROSSOVER,
    equilateral_triangle,
    half_disk,
    parallelogram,
    repro_halfdisk,
    repro_parallelogram,
    repro_square,
    repro_triangle,
)
from hullcover.theorems import (
    EqualityCase,
    closed_curve_check,
    covering_case,
    equality_case_check,
    half_perimeter_check,
    is_convex_traversal,
    main_inequality_check,
    monotonicity_check,
    random_closed_polyline,
    random_convex_polygon,
    random_nested_pair,
)

RESULTS: list[str] = []


def verdict(name: str, problems: list[str], detail: str) -> None:
    line = f"{'PASS' if not problems else 'FAIL'} {name}: {detail}"
    if problems:
        line += " | " + "; ".join(problems)
    RESULTS.append(line)
    print(line)
    assert not problems, line


def test_criterion_1_triangle_equality():
    problems = []
    K = equilateral_triangle()
    per, diam = perimeter(K), diameter(K)[0]
    for name, got, want in (("per", per, 3.0), ("diam", diam, 1.0), ("bound", per - diam, 2.0)):
        if abs(got - want) > 1e-12:
            problems.append(f"{name}={got!r}")
    rep = repro_triangle(optimize=False)
    arcs = list(rep.curves.values())
    for arc in arcs:
        r = covers(arc, K, TOL)
        if not r.covered or abs(r.slack) > 1e-12:
            problems.append(f"two-side arc slack {r.slack!r}, covered={r.covered}")
    _fastpath.warm_up()
    start = time.perf_counter()
    res = minimize_covering_curve(K, OptimizerConfig(n_vertices=3, restarts=32), TOL)
    elapsed = time.perf_counter() - start
    if abs(res.best_length - 2.0) > 1e-4:
        problems.append(f"optimizer length {res.best_length!r}")
    if elapsed >= 5.0:
        problems.append(f"optimizer took {elapsed:.2f}s")
    verdict(
        "1 triangle equality", problems,
        f"bound={per - diam:.12f}, {len(arcs)} two-side arcs at slack 0, optimizer={res.best_length:.9f} in {elapsed:.2f}s",
    )


def test_criterion_2_parallelogram_crossover():
    problems = []
    K, p = parallelogram(2.0)
    abce = Curve((p["A"], p["B"], p["C"], p["E"]))
    abdc = Curve((p["A"], p["B"], p["D"], p["C"]))
    la, lb = curve_length(abce), curve_length(abdc)
    if abs(lb - 3 * math.sqrt(2)) > 1e-9:
        problems.append(f"ABDC={lb!r}")
    if abs(la - (3 + math.sqrt(2))) > 1e-9:
        problems.append(f"ABCE={la!r}")
    if not (covers(abce, K, TOL).covered and covers(abdc, K, TOL).covered):
        problems.append("a broken line does not cover")
    if abs((la - lb) - 0.17157287525381) > 1e-9:
        problems.append(f"difference {la - lb!r}")
    at_star = repro_parallelogram(PARALLELOGRAM_CROSSOVER, optimize=False).values["difference"]
    if abs(at_star) > 1e-9:
        problems.append(f"difference at t* {at_star!r}")
    res = minimize_covering_curve(K, OptimizerConfig(n_vertices=4, restarts=32), TOL)
    if res.best_length > 3 * math.sqrt(2) + 1e-4:
        problems.append(f"optimizer {res.best_length!r}")
    verdict(
        "2 parallelogram crossover", problems,
        f"ABCE-ABDC={la - lb:.12f}, at t*={at_star:.2e}, optimizer={res.best_length:.9f} (3sqrt2={3 * math.sqrt(2):.9f})",
    )


def test_criterion_3_half_disk():
    problems = []
    K, arc = half_disk(256)
    case = equality_case_check(arc, K, TOL)
    if case is not EqualityCase.EQUALITY_VALID:
        problems.append(f"classified {case.value}")
    length = curve_length(arc)
    exact = perimeter(K) - diameter(K)[0]
    if abs(length - exact) > 1e-12:
        problems.append(f"length-(per-diam)={length - exact!r}")
    if abs(length - math.pi) > 2e-4:
        problems.append(f"length-pi={length - math.pi!r}")
    repro_halfdisk(256)
    verdict(
        "3 half-disk equality family", problems,
        f"{case.value}, length-(per-diam)={length - exact:.1e}, length-pi={length - math.pi:.2e}",
    )


def test_criterion_4_square_strict():
    problems = []
    rep = repro_square(optimize=True)
    bound, arc = rep.values["bound"], rep.values["best_arc"]
    length = rep.values["optimizer_length"]
    if abs(bound - (4 - math.sqrt(2))) > 1e-12:
        problems.append(f"bound {bound!r}")
    if abs(arc - 3) > 1e-12:
        problems.append(f"best arc {arc!r}")
    if not (bound - TOL.eps_eq <= length <= 3 + TOL.eps_eq):
        problems.append(f"optimizer {length!r} outside [4-sqrt2, 3]")
    case = equality_case_check(rep.optimization.best_curve, rep.figure, TOL)
    if case is not EqualityCase.STRICT:
        problems.append(f"classified {case.value}")
    verdict("4 square strictness", problems, f"bound={bound:.6f}, best arc={arc}, optimizer={length:.9f}, {case.value}")


def test_criterion_5_property_campaign():
    problems = []
    worst_main = worst_half = worst_closed = worst_mono = math.inf
    convex_ok = True
    start = time.perf_counter()
    for seed in range(10_000):
        K, c, _ = covering_case(seed)
        r = main_inequality_check(c, K, TOL)
        if not r.covered:
            problems.append(f"seed {seed}: generator produced a non-covering curve")
        worst_main = min(worst_main, r.slack)
        worst_half = min(worst_half, half_perimeter_check(c, K, TOL))
        loop = random_closed_polyline(20, seed)
        slack = closed_curve_check(loop, TOL)
        worst_closed = min(worst_closed, slack)
        if slack <= 1e-12 and not is_convex_traversal(loop):
            convex_ok = False
        inner, outer = random_nested_pair(seed)
        worst_mono = min(worst_mono, monotonicity_check(inner, outer, TOL))
    elapsed = time.perf_counter() - start
    if worst_main < -1e-9:
        problems.append(f"main slack {worst_main!r}")
    if worst_half < -1e-9:
        problems.append(f"half-perimeter slack {worst_half!r}")
    if worst_closed < -1e-12:
        problems.append(f"closed slack {worst_closed!r}")
    if not convex_ok:
        problems.append("zero-slack closed curve is not a convex traversal")
    if worst_mono < -1e-12:
        problems.append(f"monotonicity {worst_mono!r}")
    if elapsed >= 180:
        problems.append(f"took {elapsed:.0f}s")
    verdict(
        "5 property campaign", problems,
        f"3x10000 cases, min slacks main={worst_main:.3e} half={worst_half:.3e} "
        f"closed={worst_closed:.3e} monotone={worst_mono:.3e}, {elapsed:.1f}s",
    )


def ellipse_polygon(n, seed):
    # every sample on an ellipse is extreme, so the polygon keeps all n vertices
    rng = np.random.default_rng([seed, 6])
    theta = np.sort(rng.uniform(0, 2 * np.pi, n))
    a, b = rng.uniform(0.2, 3.0, 2)
    rot = rng.uniform(0, np.pi)
    x, y = a * np.cos(theta), b * np.sin(theta)
    pts = np.column_stack((x * np.cos(rot) - y * np.sin(rot), x * np.sin(rot) + y * np.cos(rot)))
    return convex_hull(map(tuple, pts))


def test_criterion_6_diameter_oracle():
    worst, largest = 0.0, 0
    for seed in range(1000):
        n = 3 + seed % 198
        K = ellipse_polygon(n, seed) if seed % 2 else random_convex_polygon(n, 50_000 + seed)
        largest = max(largest, len(K.vertices))
        ref = brute_diameter(K)
        worst = max(worst, abs(diameter(K)[0] - ref) / ref)
    problems = [] if worst <= 1e-12 else [f"relative error {worst!r}"]
    verdict("6 calipers vs brute force", problems, f"1000 polygons up to {largest} vertices, max rel error {worst:.2e}")


def test_criterion_7_optimality_certification():
    problems = []
    worst = math.inf
    for k in range(50):
        K = random_convex_polygon(3 + k % 6, 1000 + k)
        res = minimize_covering_curve(K, OptimizerConfig(n_vertices=len(K.vertices) + 1, restarts=8, seed=k), TOL)
        rep = res.report
        worst = min(worst, rep.contact_chord_residual)
        if not all(rep.endpoints_extreme):
            problems.append(f"polygon {k}: endpoint not extreme")
        if not rep.chord_meets_figure:
            problems.append(f"polygon {k}: chord misses figure")
        if rep.contact_chord_residual < -1e-6:
            problems.append(f"polygon {k}: residual {rep.contact_chord_residual!r}")
    verdict("7 necessary conditions", problems, f"50 polygons, min contact-chord residual {worst:.2e}")
