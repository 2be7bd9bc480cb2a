"""Shortest curves whose convex hull covers a planar convex figure.

The central fact checked throughout is that any curve whose hull contains
a convex figure ``K`` is at least ``per(K) - diam(K)`` long, with equality
exactly when the curve is a boundary arc of ``K`` whose endpoint chord is a
diameter.
"""

from .curves import CoverageReport, Curve, boundary_arc, covers, curve_length, hull_of_curve, point_at
from .errors import (
    AngleNotRight,
    HullCoverError,
    InequalityViolation,
    InvalidInput,
    InvalidParameter,
    NotCovering,
    NotExtremePoint,
    NotNested,
    OptimizationFailed,
    PointNotExternal,
)
from .geometry import (
    ConvexFigure,
    FigureKind,
    Point,
    Tolerances,
    add_point_hull,
    contains_point,
    convex_hull,
    diameter,
    distance,
    perimeter,
    signed_distance,
    split_by_chord,
    tangents_from_point,
)
from .optimizer import (
    OptimalityReport,
    OptimizationResult,
    OptimizerConfig,
    boundary_arc_candidates,
    minimize_covering_curve,
    objective,
    optimality_report,
    sweep_budgets,
)
from .theorems import (
    EqualityCase,
    add_point_inequality_check,
    closed_curve_check,
    equality_case_check,
    main_inequality_check,
    monotonicity_check,
    random_convex_polygon,
    random_covering_curve,
)

__version__ = "0.1.0"
