"""Iterated involutes and the central point of a convex curve.

Alternating involutes in the primal and dual norms produce a nested
sequence of shrinking midpoint curves whose signed areas telescope; the
common limit is a single point, estimated here as the centroid of the
final iterate.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateSignData, NotConvex, NumericalBlowup
from .minkowski import ParametricCurve
from .periodic import PeriodicFn, half_period_integral
from .symmetry import WidthDecomposition, cusp_count, signed_area

__all__ = [
    "IterationStep",
    "IterationTrace",
    "CentralPointResult",
    "iterate_involutes",
    "central_point",
    "equidistant_sequences",
    "bbox_diameter",
]


@dataclass(frozen=True)
class IterationStep:
    """One rung of the involute ladder; involute fields are None at step 0."""

    index: int
    ae: ParametricCurve
    ae_radius: PeriodicFn
    inv: ParametricCurve | None
    inv_radius: PeriodicFn | None
    sa_ae: float
    sa_inv: float | None
    sup_ae_radius: float
    sup_inv_radius: float | None
    cusps_ae: int
    cusps_inv: int | None
    bbox_diam: float


@dataclass(frozen=True)
class IterationTrace:
    steps: tuple[IterationStep, ...]
    converged: bool


@dataclass(frozen=True)
class CentralPointResult:
    point: tuple[float, float]
    iterations: int
    final_diameter: float
    converged: bool


def bbox_diameter(points: np.ndarray) -> float:
    """Diagonal of the axis-aligned bounding box of the point set."""
    span = points.max(axis=0) - points.min(axis=0)
    return float(np.hypot(span[0], span[1]))


def _guarded_cusps(radius: PeriodicFn, floor: float) -> int:
    # Below the degeneracy floor the iterate is a point and the count is
    # reported as 0 rather than failing the odd->=3 parity.
    if radius.max_abs() < floor:
        return 0
    try:
        return cusp_count(radius)
    except DegenerateSignData:
        return 0


def iterate_involutes(
    dec: WidthDecomposition, steps: int, stop_diameter: float = 0.0
) -> IterationTrace:
    """Alternate involutes in the ball and its dual for the given step count.

    Step i+1 integrates the current radius against [u, u'] for the dual
    radius, moves to the dual involute, then integrates against [v, v'] to
    come back: the two signed areas drop by the corresponding squared-radius
    integrals at every step.  Stops early once the midpoint curve's bounding
    box falls below stop_diameter (0 disables early stopping).
    """
    if steps < 0 or steps > 10_000:
        raise ValueError(f"step count must be in [0, 10000], got {steps}")
    frames = dec.frames()
    u, v = frames.u.points, frames.v.points
    buu, bvv = frames.buu, frames.bvv
    grid = dec.ae.grid

    diam_scale = bbox_diameter(dec.curve.points)
    cusp_floor = 1e-13 * diam_scale
    blowup = 1e6 * max(dec.ae_radius.max_abs(), 1e-300)

    ae = dec.ae
    ae_radius = dec.ae_radius
    out = [
        IterationStep(
            index=0,
            ae=ae,
            ae_radius=ae_radius,
            inv=None,
            inv_radius=None,
            sa_ae=signed_area(ae),
            sa_inv=None,
            sup_ae_radius=ae_radius.max_abs(),
            sup_inv_radius=None,
            cusps_ae=_guarded_cusps(ae_radius, cusp_floor),
            cusps_inv=None,
            bbox_diam=bbox_diameter(ae.points),
        )
    ]
    converged = out[0].bbox_diam < stop_diameter
    for i in range(1, steps + 1):
        if converged:
            break
        inv_radius = 0.5 * half_period_integral(ae_radius * buu)
        inv = ParametricCurve(grid, ae.points + inv_radius.values[:, None] * v)
        ae_radius = -0.5 * half_period_integral(inv_radius * bvv)
        ae = ParametricCurve(grid, inv.points + ae_radius.values[:, None] * u)
        if max(ae_radius.max_abs(), inv_radius.max_abs()) > blowup:
            raise NumericalBlowup(
                f"radius grew beyond 1e6 * initial at step {i}"
            )
        step = IterationStep(
            index=i,
            ae=ae,
            ae_radius=ae_radius,
            inv=inv,
            inv_radius=inv_radius,
            sa_ae=signed_area(ae),
            sa_inv=signed_area(inv),
            sup_ae_radius=ae_radius.max_abs(),
            sup_inv_radius=inv_radius.max_abs(),
            cusps_ae=_guarded_cusps(ae_radius, cusp_floor),
            cusps_inv=_guarded_cusps(inv_radius, cusp_floor),
            bbox_diam=bbox_diameter(ae.points),
        )
        out.append(step)
        converged = step.bbox_diam < stop_diameter
    return IterationTrace(steps=tuple(out), converged=converged)


def central_point(
    dec: WidthDecomposition, abs_tol: float, max_steps: int = 500
) -> CentralPointResult:
    """Iterate involutes until the midpoint curve fits in an abs_tol box.

    The limit point is estimated as the centroid of the final iterate's
    samples, which averages out residual oscillation; the estimation error
    is bounded by the final bounding-box diameter.  A non-converged result
    (step cap reached) is returned with converged=False rather than raised,
    since the cap is only a safety device.
    """
    if abs_tol <= 0.0:
        raise ValueError(f"abs_tol must be positive, got {abs_tol}")
    trace = iterate_involutes(dec, max_steps, stop_diameter=abs_tol)
    last = trace.steps[-1]
    centroid = last.ae.points.mean(axis=0)
    return CentralPointResult(
        point=(float(centroid[0]), float(centroid[1])),
        iterations=last.index,
        final_diameter=last.bbox_diam,
        converged=trace.converged,
    )


def equidistant_sequences(
    trace: IterationTrace, dec: WidthDecomposition, c: float, d: float
) -> tuple[list[ParametricCurve], list[ParametricCurve]]:
    """Convex constant-width curves riding the iteration: ae_i + c u, inv_i + d v.

    c and d must dominate every radius sup-norm seen along the trace so the
    offsets stay convex.
    """
    sup_ae = max(s.sup_ae_radius for s in trace.steps)
    sups_inv = [s.sup_inv_radius for s in trace.steps if s.sup_inv_radius is not None]
    sup_inv = max(sups_inv) if sups_inv else 0.0
    if c < sup_ae:
        raise NotConvex(f"c = {c:.6g} is below the radius bound {sup_ae:.6g}")
    if d < sup_inv:
        raise NotConvex(f"d = {d:.6g} is below the radius bound {sup_inv:.6g}")
    frames = dec.frames()
    grid = dec.ae.grid
    primal = [
        ParametricCurve(grid, s.ae.points + c * frames.u.points) for s in trace.steps
    ]
    dual = [
        ParametricCurve(grid, s.inv.points + d * frames.v.points)
        for s in trace.steps
        if s.inv is not None
    ]
    return primal, dual
