"""Independent brute-force checkers backing the test suite.

Everything here deliberately uses different numerics than the spectral
core (finite differences, composite Simpson, shoelace sums, polyline
intersection) so failure modes stay independent.  Accuracy is second-order
or fourth-order, not spectral, and nothing is performance-tuned.
"""

from dataclasses import dataclass

import numpy as np
from scipy.integrate import simpson

from .errors import Tangency
from .minkowski import ConvexCurve, polar_frame
from .periodic import ParamGrid, PeriodicFn, spectral_derivative, trig_interp

__all__ = [
    "OracleConfig",
    "fd_derivative",
    "polyline_area",
    "chord_midpoint_count",
    "quadrature_half_integral",
]


@dataclass(frozen=True)
class OracleConfig:
    """Knobs for the brute-force checkers.

    refine_factor subdivides parameter grids before polyline work;
    fd_step, when set, is rounded to a whole number of grid steps for the
    finite-difference stencil (default: one grid step).
    """

    refine_factor: int = 10
    fd_step: float | None = None

    def __post_init__(self):
        if self.refine_factor < 2:
            raise ValueError(f"refine_factor must be >= 2, got {self.refine_factor}")
        if self.fd_step is not None and self.fd_step <= 0.0:
            raise ValueError(f"fd_step must be positive, got {self.fd_step}")


def fd_derivative(f: PeriodicFn, cfg: OracleConfig = OracleConfig()) -> PeriodicFn:
    """Central differences on the grid; O(step^2) accurate."""
    h = f.grid.step
    j = 1 if cfg.fd_step is None else max(1, int(round(cfg.fd_step / h)))
    vals = (np.roll(f.values, -j) - np.roll(f.values, j)) / (2.0 * j * h)
    return PeriodicFn(f.grid, vals)


def polyline_area(points: np.ndarray) -> float:
    """Signed shoelace area of a closed polyline."""
    pts = np.asarray(points, dtype=float)
    if pts.shape[0] < 3:
        raise ValueError("need at least 3 points")
    rolled = np.roll(pts, -1, axis=0)
    return 0.5 * float(np.sum(pts[:, 0] * rolled[:, 1] - pts[:, 1] * rolled[:, 0]))


def _refined_points(gamma: ConvexCurve, factor: int) -> np.ndarray:
    fine = ParamGrid(gamma.grid.n * factor)
    h = trig_interp(gamma.support, fine.theta)
    hp = trig_interp(spectral_derivative(gamma.support), fine.theta)
    e_r, e_t = polar_frame(fine.theta)
    return h[:, None] * e_r + hp[:, None] * e_t


def chord_midpoint_count(
    gamma: ConvexCurve, center, cfg: OracleConfig = OracleConfig()
) -> int:
    """Number of chords of gamma whose midpoint is the given center.

    Reflects the curve through the center and counts transversal polyline
    crossings with the original on a refined grid; each chord contributes
    two crossings, so the count is half of that.  Raises Tangency when any
    crossing is non-transversal within tolerance (for instance the center
    of a circle, where every chord works).
    """
    pts = _refined_points(gamma, cfg.refine_factor)
    c = np.asarray([float(center[0]), float(center[1])])
    refl = 2.0 * c - pts
    scale = float(np.max(np.abs(pts - c)))

    a1 = pts
    d1 = np.roll(pts, -1, axis=0) - pts
    a2 = refl
    d2 = np.roll(refl, -1, axis=0) - refl

    lo1 = np.minimum(a1, a1 + d1)
    hi1 = np.maximum(a1, a1 + d1)
    lo2 = np.minimum(a2, a2 + d2)
    hi2 = np.maximum(a2, a2 + d2)
    pad = 1e-12 * scale
    overlap = (
        (lo1[:, None, 0] <= hi2[None, :, 0] + pad)
        & (lo2[None, :, 0] <= hi1[:, None, 0] + pad)
        & (lo1[:, None, 1] <= hi2[None, :, 1] + pad)
        & (lo2[None, :, 1] <= hi1[:, None, 1] + pad)
    )
    ii, jj = np.nonzero(overlap)
    if ii.size == 0:
        return 0

    p, r = a1[ii], d1[ii]
    q, s = a2[jj], d2[jj]
    denom = r[:, 0] * s[:, 1] - r[:, 1] * s[:, 0]
    seg_scale = np.linalg.norm(r, axis=1) * np.linalg.norm(s, axis=1)
    parallel = np.abs(denom) <= 1e-9 * np.maximum(seg_scale, 1e-300)
    qp = q - p
    safe = np.where(parallel, 1.0, denom)
    t = (qp[:, 0] * s[:, 1] - qp[:, 1] * s[:, 0]) / safe
    w = (qp[:, 0] * r[:, 1] - qp[:, 1] * r[:, 0]) / safe
    # Half-open parameter ranges keep shared vertices from double counting.
    crossing = ~parallel & (t >= 0.0) & (t < 1.0) & (w >= 0.0) & (w < 1.0)

    # Parallel segments passing through each other signal tangency, as do
    # crossings at a grazing angle.
    line_dist = np.abs(qp[:, 0] * r[:, 1] - qp[:, 1] * r[:, 0]) / np.maximum(
        np.linalg.norm(r, axis=1), 1e-300
    )
    if np.any(parallel & (line_dist <= 1e-9 * scale)):
        raise Tangency("overlapping parallel segments; chord count ill-defined")
    sin_angle = np.abs(denom) / np.maximum(seg_scale, 1e-300)
    if np.any(crossing & (sin_angle < 1e-6)):
        raise Tangency("non-transversal crossing; chord count ill-defined")

    hits = int(np.count_nonzero(crossing))
    if hits % 2:
        raise Tangency(f"odd raw crossing count {hits}; grazing contact suspected")
    return hits // 2


def quadrature_half_integral(f: PeriodicFn, start_index: int) -> float:
    """Composite Simpson over [theta_k, theta_k + pi] using existing samples."""
    n = f.grid.n
    if n % 4 != 0:
        raise ValueError("Simpson over the half period needs n divisible by 4")
    idx = np.arange(start_index, start_index + n // 2 + 1) % n
    return float(simpson(f.values[idx], dx=f.grid.step))
