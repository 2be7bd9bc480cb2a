import math

import numpy as np
import pytest

from hullcover.geometry import DEFAULT_TOLERANCES, ConvexFigure, convex_hull


def brute_diameter(K: ConvexFigure) -> float:
    v = K.array
    if len(v) < 2:
        return 0.0
    diff = v[:, None, :] - v[None, :, :]
    return float(np.sqrt((diff**2).sum(-1)).max())


def regular_polygon(n: int, radius: float = 1.0, phase: float = 0.0) -> ConvexFigure:
    return convex_hull(
        [(radius * math.cos(phase + 2 * math.pi * k / n), radius * math.sin(phase + 2 * math.pi * k / n)) for k in range(n)]
    )


@pytest.fixture
def tol():
    return DEFAULT_TOLERANCES


@pytest.fixture
def square():
    return convex_hull([(0, 0), (1, 0), (1, 1), (0, 1)])


@pytest.fixture
def triangle():
    return convex_hull([(0, 0), (1, 0), (0.5, math.sqrt(3) / 2)])


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in sorted(RESULTS):
            terminalreporter.write_line(line)
