import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import brute_diameter, regular_polygon
from hullcover.curves import Curve, boundary_arc, covers, curve_length, hull_of_curve
from hullcover.errors import AngleNotRight, InvalidInput, NotCovering, NotNested, PointNotExternal
from hullcover.geometry import Point, add_point_hull, split_by_chord, convex_hull, diameter, distance, hausdorff_distance, perimeter, tangents_from_point
from hullcover.repro import half_disk, parallelogram
from hullcover.theorems import (
    COVERING_STYLES,
    CaseRecord,
    EqualityCase,
    add_point_inequality_check,
    campaign,
    covering_case,
    closed_curve_check,
    equality_case_check,
    half_perimeter_check,
    is_convex_traversal,
    main_inequality_check,
    monotonicity_check,
    random_closed_polyline,
    random_convex_polygon,
    random_covering_curve,
    random_nested_pair,
    run_case,
)

seeds = st.integers(0, 2**32)


class TestMainInequality:
    def test_triangle_sides(self, triangle, tol):
        assert abs(main_inequality_check(boundary_arc(triangle, 1, 0, "left"), triangle, tol).slack) <= 1e-12

    def test_closed_square_boundary(self, square, tol):
        loop = Curve(square.vertices + square.vertices[:1])
        assert main_inequality_check(loop, square, tol).slack == pytest.approx(math.sqrt(2), abs=1e-12)

    def test_parallelogram_abdc(self, tol):
        K, p = parallelogram(2.0)
        abdc = Curve((p["A"], p["B"], p["D"], p["C"]))
        per, diam = perimeter(K), diameter(K)[0]
        assert per == pytest.approx(4 + 2 * math.sqrt(2), abs=1e-12)
        assert diam == pytest.approx(math.sqrt(10), abs=1e-12)
        expected = 3 * math.sqrt(2) - (per - diam)
        assert main_inequality_check(abdc, K, tol).slack == pytest.approx(expected, abs=1e-12)

    def test_not_covering(self, square, tol):
        with pytest.raises(NotCovering):
            main_inequality_check(Curve.from_points([(0, 0), (1, 0)]), square, tol)

    @given(seeds, st.sampled_from(COVERING_STYLES), st.integers(3, 30))
    @settings(max_examples=150, deadline=None)
    def test_property(self, seed, style, n):
        K = random_convex_polygon(n, seed)
        c = random_covering_curve(K, seed, style)
        r = main_inequality_check(c, K)
        assert r.covered and r.slack >= -1e-9
        assert half_perimeter_check(c, K) >= -1e-9


class TestEqualityClassifier:
    def test_triangle(self, triangle, tol):
        assert equality_case_check(boundary_arc(triangle, 1, 0, "left"), triangle, tol) is EqualityCase.EQUALITY_VALID

    def test_half_disk(self, tol):
        K, arc = half_disk(256)
        assert equality_case_check(arc, K, tol) is EqualityCase.EQUALITY_VALID

    def test_square_strict(self, square, tol):
        three = Curve(square.vertices)
        assert equality_case_check(three, square, tol) is EqualityCase.STRICT

    def test_not_covering(self, square, tol):
        with pytest.raises(NotCovering):
            equality_case_check(Curve.from_points([(0, 0), (0, 1)]), square, tol)

    @pytest.mark.parametrize("seed", range(40))
    def test_diameter_arcs_are_equality_cases(self, seed, tol):
        K = random_convex_polygon(3 + seed % 20, seed)
        d, p, q = diameter(K)
        for piece in split_by_chord(K, p, q):
            if len(piece.vertices) < 3:
                continue
            assert diameter(piece)[0] == pytest.approx(d, abs=1e-15)
            i, j = piece.vertex_index(p), piece.vertex_index(q)
            side = "left" if (j - i) % len(piece.vertices) != 1 else "right"
            arc = boundary_arc(piece, i, j, side)
            assert len(arc.vertices) == len(piece.vertices)
            assert equality_case_check(arc, piece, tol) is EqualityCase.EQUALITY_VALID
            # any other chord on the same piece is a strict case
            k = next(k for k in range(len(piece.vertices)) if k not in (i, j))
            for other in (boundary_arc(piece, i, k, "left"), boundary_arc(piece, i, k, "right")):
                if covers(other, piece, tol).covered and d - distance(p, piece.vertices[k]) > tol.eps_eq:
                    assert equality_case_check(other, piece, tol) is EqualityCase.STRICT

    @pytest.mark.parametrize("seed", range(400))
    def test_soundness_against_recomputation(self, seed, tol):
        assert run_case(seed, tol).failure == ""
        K, c, _ = covering_case(seed)
        case = equality_case_check(c, K, tol)
        assert case is not EqualityCase.EQUALITY_VIOLATES_CHARACTERIZATION
        if case is EqualityCase.EQUALITY_VALID:
            # clause by clause, with the brute-force diameter
            hull = hull_of_curve(c)
            assert hausdorff_distance(hull, K) <= tol.eps_eq
            assert abs(distance(c.start, c.end) - brute_diameter(K)) <= tol.eps_eq
            assert abs(curve_length(c) + distance(c.start, c.end) - perimeter(hull)) <= tol.eps_eq


class TestClosedCurves:
    def test_square_loop(self, square):
        loop = Curve(square.vertices + square.vertices[:1])
        assert abs(closed_curve_check(loop)) <= 1e-12
        assert is_convex_traversal(loop)

    def test_doubled_edge(self):
        c = Curve.from_points([(0, 0), (2, 0), (1, 1), (2, 0), (0, 0)])
        hull_per = 2 + 2 * math.sqrt(2)
        assert closed_curve_check(c) == pytest.approx(4 + 2 * math.sqrt(2) - hull_per, abs=1e-12)
        assert not is_convex_traversal(c)

    def test_open_rejected(self):
        with pytest.raises(InvalidInput):
            closed_curve_check(Curve.from_points([(0, 0), (1, 0)]))

    @given(seeds)
    @settings(max_examples=200, deadline=None)
    def test_property(self, seed):
        c = random_closed_polyline(20, seed)
        slack = closed_curve_check(c)
        assert slack >= -1e-12
        if slack <= 1e-12:
            assert is_convex_traversal(c)


class TestMonotonicity:
    def test_examples(self, square):
        big = convex_hull([(-0.5, -0.5), (1.5, -0.5), (1.5, 1.5), (-0.5, 1.5)])
        assert monotonicity_check(square, big) == pytest.approx(4)
        assert monotonicity_check(square, square) == 0

    def test_not_nested(self, square):
        with pytest.raises(NotNested):
            monotonicity_check(convex_hull([(0, 0), (2, 0), (0, 2)]), square)

    @given(seeds)
    @settings(max_examples=200, deadline=None)
    def test_property(self, seed):
        inner, outer = random_nested_pair(seed)
        assert monotonicity_check(inner, outer) >= -1e-12


def _right_wedge_point(K, centre, direction):
    """Bisect along a ray for the point where the tangent wedge is a right angle."""
    def angle(r):
        return tangents_from_point(K, (centre[0] + r * direction[0], centre[1] + r * direction[1]))[2]

    lo, hi = 1.0, 100.0
    while angle(lo) <= math.pi / 2:
        lo *= 0.99
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if angle(mid) > math.pi / 2:
            lo = mid
        else:
            hi = mid
    return Point(centre[0] + lo * direction[0], centre[1] + lo * direction[1])


class TestAddPoint:
    def test_square_right_wedge(self, square, tol):
        A = Point(1.5, 0.5)
        assert tangents_from_point(square, A)[2] == pytest.approx(math.pi / 2, abs=1e-15)
        # pentagon perimeter 3 + sqrt2, tangent length sqrt(1/2)
        assert add_point_inequality_check(square, A, tol) == pytest.approx(1 - math.sqrt(2) / 2, abs=1e-12)

    def test_square_right_wedge_solved(self, square, tol):
        u = (1 / math.hypot(1, 0.3), 0.3 / math.hypot(1, 0.3))
        A = _right_wedge_point(square, (0.5, 0.5), u)
        A1, _, angle = tangents_from_point(square, A)
        assert abs(angle - math.pi / 2) <= tol.eps_eq
        slack = add_point_inequality_check(square, A, tol)
        direct = distance(A, A1) + perimeter(square) - perimeter(add_point_hull(square, A))
        assert slack == pytest.approx(direct, abs=1e-15) and slack > 0

    def test_64gon_right_wedge(self, tol):
        K = regular_polygon(64)
        A = _right_wedge_point(K, (0, 0), (math.cos(0.3), math.sin(0.3)))
        assert add_point_inequality_check(K, A, tol) > 0

    def test_acute_wedge_rejected(self, square, tol):
        with pytest.raises(AngleNotRight):
            add_point_inequality_check(square, (3, 3), tol)

    def test_inside_rejected(self, square, tol):
        with pytest.raises(PointNotExternal):
            add_point_inequality_check(square, (0.5, 0.5), tol)


class TestGenerators:
    def test_triangle_deterministic(self):
        a = random_convex_polygon(3, 1)
        assert len(a.vertices) == 3
        assert random_convex_polygon(3, 1) == a

    def test_hundred_gon_diameter(self):
        K = random_convex_polygon(100, 7)
        assert diameter(K)[0] == pytest.approx(brute_diameter(K), rel=1e-12)

    def test_small_n_rejected(self):
        with pytest.raises(InvalidInput):
            random_convex_polygon(2, 0)

    def test_vertex_tour_on_square(self, square):
        c = random_covering_curve(square, 3, "vertex_tour")
        assert set(square.vertices) <= set(c.vertices)
        assert covers(c, square).covered

    @pytest.mark.parametrize("style", COVERING_STYLES)
    def test_styles_cover_and_repeat(self, triangle, style):
        for seed in range(30):
            c = random_covering_curve(triangle, seed, style)
            assert covers(c, triangle).covered
            assert random_covering_curve(triangle, seed, style) == c

    def test_unknown_style(self, square):
        with pytest.raises(InvalidInput):
            random_covering_curve(square, 0, "zigzag")

    @given(seeds, st.integers(3, 60))
    @settings(max_examples=100, deadline=None)
    def test_half_perimeter_bound(self, seed, n):
        K = random_convex_polygon(n, seed)
        assert perimeter(K) >= 2 * diameter(K)[0]


def test_campaign_rows():
    recs = list(campaign(25, 42))
    assert [r.seed for r in recs] == list(range(42, 67))
    assert all(isinstance(r, CaseRecord) and r.failure == "" and r.covered for r in recs)
    assert all(len(r.csv_row()) == len(CaseRecord.CSV_COLUMNS) for r in recs)
    assert CaseRecord.CSV_COLUMNS == ("seed", "style", "n_vertices", "length", "perimeter", "diameter", "slack", "covered")
