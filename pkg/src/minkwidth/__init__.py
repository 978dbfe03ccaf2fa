"""Constant-width geometry of convex planar curves in Minkowski norms."""

from .errors import (
    DegenerateBall,
    DegenerateSignData,
    GeometryError,
    GridMismatch,
    NonZeroMean,
    NotAntiPeriodic,
    NotConvex,
    NumericalBlowup,
    OnBoundary,
    Tangency,
)
from .iteration import (
    CentralPointResult,
    IterationStep,
    IterationTrace,
    bbox_diameter,
    central_point,
    equidistant_sequences,
    iterate_involutes,
)
from .minkowski import (
    BallFrames,
    ConvexCurve,
    ParametricCurve,
    SymmetricBall,
    ball_area,
    ball_frames,
    cross,
    curve_derivative,
    curve_points,
    dual_ball,
    dual_curvature_radius,
    dual_evolute,
    equidistant,
    polar_frame,
    evolute,
    gauge_norm,
    minkowski_curvature_radius,
    mixed_area,
    resample_curve,
    support_from_points,
    v_length,
)
from .periodic import (
    ParamGrid,
    PeriodicFn,
    antipodal_shift,
    grid_integral,
    half_grid_integral,
    half_period_integral,
    spectral_antiderivative,
    spectral_derivative,
    trig_interp,
)
from .symmetry import (
    InvoluteResult,
    WidthDecomposition,
    area_split,
    asymmetry_measure,
    center_symmetry_set,
    cusp_count,
    decompose,
    involute,
    region_contains,
    signed_area,
    single_tracing,
)

__version__ = "0.1.0"
