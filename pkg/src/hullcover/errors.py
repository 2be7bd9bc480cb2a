"""Exception hierarchy shared by every module of the package."""


class HullCoverError(Exception):
    """Base class for all library errors."""


class InvalidInput(HullCoverError, ValueError):
    pass


class InvalidParameter(HullCoverError, ValueError):
    pass


class NotExtremePoint(HullCoverError, ValueError):
    pass


class PointNotExternal(HullCoverError, ValueError):
    pass


class AngleNotRight(HullCoverError, ValueError):
    pass


class NotCovering(HullCoverError):
    """The convex hull of a curve does not contain the figure."""


class NotNested(HullCoverError):
    """The first figure is not contained in the second one."""


class InequalityViolation(HullCoverError):
    """A checked inequality failed beyond tolerance.

    This can only happen through a bug (or a broken tolerance setting),
    so callers usually let it propagate.
    """


class OptimizationFailed(HullCoverError):
    pass
