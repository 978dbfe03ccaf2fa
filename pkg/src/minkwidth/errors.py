"""Exception types shared across the library."""


class GeometryError(Exception):
    """Base class for all numerical-geometry failures raised by minkwidth."""


class GridMismatch(GeometryError):
    """Operands live on different parameter grids."""


class NonZeroMean(GeometryError):
    """Integrand has a nonzero mean and admits no periodic antiderivative."""


class NotAntiPeriodic(GeometryError):
    """Function fails f(theta + pi) = -f(theta) on the grid."""


class DegenerateBall(GeometryError):
    """Unit-ball data violates positivity, symmetry or strict convexity."""


class NotConvex(GeometryError):
    """Curve data violates strict convexity (support radius h + h'' <= 0)."""


class DegenerateSignData(GeometryError):
    """Too many consecutive near-zero samples for a well-defined cusp count."""


class OnBoundary(GeometryError):
    """Query point sits on the boundary polyline within tolerance."""


class Tangency(GeometryError):
    """Curve intersection is non-transversal; the count is ill-defined."""


class NumericalBlowup(GeometryError):
    """Iteration diverged far beyond its initial scale."""
