"""Width decomposition of a convex curve and its midpoint/involute geometry.

Central symmetrization splits a strictly convex curve gamma into the locus
of diameter midpoints (its area evolute) plus a scaled copy of a centrally
symmetric curve: gamma = ae + level * u.  In the norm whose unit ball is
that symmetric curve, gamma has constant width, the center symmetry set is
the Minkowski evolute, and the area evolute admits involutes in the dual
norm.  This module houses those constructions together with the signed
curvature-radius functions that drive them.
"""

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateSignData, NotConvex, OnBoundary
from .minkowski import (
    BallFrames,
    ConvexCurve,
    ParametricCurve,
    SymmetricBall,
    ball_frames,
    cross,
    curve_derivative,
    curve_points,
    polar_frame,
)
from .periodic import (
    PeriodicFn,
    half_period_integral,
    spectral_derivative,
)

__all__ = [
    "WidthDecomposition",
    "InvoluteResult",
    "decompose",
    "center_symmetry_set",
    "involute",
    "cusp_count",
    "signed_area",
    "area_split",
    "region_contains",
    "asymmetry_measure",
    "single_tracing",
]


@dataclass(frozen=True)
class WidthDecomposition:
    """A convex curve split as ae + level * u.

    ball is the mean-normalized central symmetrization of the curve (its
    support function has unit grid mean), ae is the area evolute sampled
    on the full grid (pi-periodic, traced twice), ae_radius is the signed
    Minkowski curvature radius of ae in that ball, and level is the
    equidistant level at which the original curve sits above the ae.
    """

    curve: ParametricCurve
    ball: SymmetricBall
    ae: ParametricCurve
    ae_radius: PeriodicFn
    level: float

    def frames(self) -> BallFrames:
        return ball_frames(self.ball)


@dataclass(frozen=True)
class InvoluteResult:
    """Involute of the area evolute in the dual norm.

    radius is the signed dual curvature radius: curve' = radius * v'.
    It is anti-periodic under the half shift, like ae_radius.
    """

    curve: ParametricCurve
    radius: PeriodicFn


def decompose(gamma: ConvexCurve) -> WidthDecomposition:
    """Split gamma into area evolute plus a normalized symmetric ball.

    The even part of the support function is divided by its grid mean, so
    homothetic inputs share one canonical ball; the mean is returned as the
    equidistant level.  The reconstruction gamma = ae + level * u holds to
    rounding by construction.
    """
    grid = gamma.grid
    h = gamma.support.values
    even = 0.5 * (h + np.roll(h, -grid.half))
    level = float(np.mean(even))
    ball = SymmetricBall(grid, PeriodicFn(grid, even / level))
    frames = ball_frames(ball)
    pts = curve_points(gamma)
    ae = ParametricCurve(grid, pts.points - level * frames.u.points)
    radius = cross(frames.u.points, curve_derivative(ae)) / frames.buu.values
    return WidthDecomposition(
        curve=pts,
        ball=ball,
        ae=ae,
        ae_radius=PeriodicFn(grid, radius),
        level=level,
    )


def center_symmetry_set(gamma: ConvexCurve) -> ParametricCurve:
    """Envelope of the diameters: the Minkowski evolute in the symmetrization ball.

    Equals ae - ae_radius * u pointwise, since the curvature radius of gamma
    in its own symmetrization ball is ae_radius + level.
    """
    dec = decompose(gamma)
    u = dec.frames().u.points
    return ParametricCurve(
        gamma.grid, dec.ae.points - dec.ae_radius.values[:, None] * u
    )


def involute(dec: WidthDecomposition) -> InvoluteResult:
    """Involute of the area evolute in the dual norm.

    The dual radius is half the running half-period integral of
    ae_radius * [u, u']; the curve is ae + radius * v.  Every dual
    equidistant of the result has the area evolute as its dual evolute.
    """
    frames = dec.frames()
    radius = 0.5 * half_period_integral(dec.ae_radius * frames.buu)
    pts = dec.ae.points + radius.values[:, None] * frames.v.points
    return InvoluteResult(curve=ParametricCurve(dec.ae.grid, pts), radius=radius)


def cusp_count(f: PeriodicFn) -> int:
    """Number of sign changes of an anti-periodic function over [0, pi).

    Counts with wrap to -f(0), so the result is odd for genuinely
    anti-periodic data.  Samples below 1e-12 * max|f| inherit the sign of
    the nearest nonzero neighbor to the left (deterministic tie-breaking);
    a run of n/8 or more such samples raises DegenerateSignData.
    """
    vals = f.values
    n = f.grid.n
    tol = 1e-12 * float(np.max(np.abs(vals)))
    small = np.abs(vals) <= tol
    if np.all(small):
        raise DegenerateSignData("all samples are near zero")
    run = _longest_circular_run(small)
    if run >= n // 8:
        raise DegenerateSignData(
            f"{run} consecutive near-zero samples (limit {n // 8})"
        )
    signs = _fill_signs_left(np.sign(vals), small)
    half = signs[: n // 2]
    seq = np.append(half, -signs[0])
    return int(np.sum(seq[1:] != seq[:-1]))


def _longest_circular_run(mask: np.ndarray) -> int:
    if not mask.any():
        return 0
    idx = np.flatnonzero(~mask)
    gaps = np.diff(idx) - 1
    wrap = idx[0] + (mask.size - idx[-1] - 1)
    return int(max(gaps.max(initial=0), wrap))


def _fill_signs_left(signs: np.ndarray, small: np.ndarray) -> np.ndarray:
    out = signs.copy()
    big = np.flatnonzero(~small)
    # Rotate so a decided sample comes first, forward-fill, rotate back.
    start = big[0]
    rolled = np.roll(out, -start)
    rolled_small = np.roll(small, -start)
    last = rolled[0]
    for i in range(rolled.size):
        if rolled_small[i]:
            rolled[i] = last
        else:
            last = rolled[i]
    return np.roll(rolled, start)


def signed_area(c: ParametricCurve) -> float:
    """Signed area of an ae-type curve: minus its self mixed area.

    With the doubly-traced convention used throughout (pi-periodic point
    samples over the full grid), this is -(1/2) * integral of [c, c'] and
    is non-negative for genuine area evolutes and their involutes, zero
    exactly when the curve degenerates to a point.
    """
    return -0.5 * c.grid.step * float(np.sum(cross(c.points, curve_derivative(c))))


def area_split(dec: WidthDecomposition, level: float, theta: float) -> tuple[float, float]:
    """Areas of the two parts a diameter cuts from the equidistant at the given level.

    theta is snapped to the nearest grid point; the first area is enclosed
    by the equidistant arc over [theta, theta + pi] closed by the diameter
    chord, the second is the rest.  Both come from shoelace quadrature over
    the polygonal samples, so they carry O(n^-2) discretization error.
    """
    sup = dec.ae_radius.max_abs()
    if level < sup:
        raise NotConvex(f"level {level:.6g} is below the cusp bound {sup:.6g}")
    grid = dec.ae.grid
    k = int(np.rint(theta / grid.step)) % grid.n
    u = dec.frames().u.points
    pts = dec.ae.points + level * u
    half_idx = np.arange(k, k + grid.half + 1) % grid.n
    first = _shoelace(pts[half_idx])
    total = _shoelace(pts)
    return first, total - first


def _shoelace(points: np.ndarray) -> float:
    rolled = np.roll(points, -1, axis=0)
    return 0.5 * float(np.sum(cross(points, rolled)))


def region_contains(boundary: ParametricCurve, point) -> bool:
    """Even-odd ray-crossing test against the sampled boundary polyline.

    pi-periodic boundaries (area evolutes, involutes) are reduced to a
    single tracing first.  Raises OnBoundary when the point lies within
    1e-9 of the polyline relative to its bounding-box diameter; rays that
    graze a vertex or run nearly parallel to an edge are retried in a
    different direction.
    """
    pts = single_tracing(boundary)
    x = np.asarray([float(point[0]), float(point[1])])
    diam = float(np.hypot(*(pts.max(axis=0) - pts.min(axis=0))))
    if diam == 0.0:
        raise OnBoundary("boundary is a single point")
    # Work in units where the bounding-box diameter is 1 and the query
    # point is the origin; all thresholds below are then scale-free.
    a = (pts - x) / diam
    b = np.roll(a, -1, axis=0)
    if _distance_to_polyline(np.zeros(2), a, b) <= 1e-9:
        raise OnBoundary("point within 1e-9 * diameter of the boundary")

    d = b - a
    golden = np.pi * (3.0 - np.sqrt(5.0))
    for attempt in range(64):
        ang = 0.5612 + attempt * golden
        ray = np.array([np.cos(ang), np.sin(ang)])
        # A vertex on or near the positive ray makes the parity ambiguous.
        along = a @ ray
        perp = ray[0] * a[:, 1] - ray[1] * a[:, 0]
        if np.any((np.abs(perp) < 1e-9) & (along > -1e-9)):
            continue
        denom = cross(np.broadcast_to(ray, d.shape), d)
        ok = np.abs(denom) > 1e-12
        safe = np.where(ok, denom, 1.0)
        s = -cross(np.broadcast_to(ray, a.shape), a) / safe
        t = cross(a, d) / safe
        hits = ok & (s > 0.0) & (s < 1.0) & (t > 0.0)
        return bool(np.count_nonzero(hits) % 2)
    raise RuntimeError("could not find a clean ray direction")


def _distance_to_polyline(x: np.ndarray, a: np.ndarray, b: np.ndarray) -> float:
    d = b - a
    length2 = np.sum(d * d, axis=1)
    t = np.clip(np.sum((x - a) * d, axis=1) / np.maximum(length2, 1e-300), 0.0, 1.0)
    proj = a + t[:, None] * d
    return float(np.min(np.linalg.norm(proj - x, axis=1)))


def single_tracing(c: ParametricCurve) -> np.ndarray:
    """Points of one geometric tracing: the first half when c is pi-periodic."""
    pts = c.points
    half = c.grid.half
    scale = float(np.max(np.abs(pts)))
    if scale == 0.0:
        return pts[:half]
    if np.max(np.abs(pts - np.roll(pts, -half, axis=0))) <= 1e-9 * scale:
        return pts[:half]
    return pts


def asymmetry_measure(dec: WidthDecomposition) -> float:
    """Maximum diameter-split area difference: 4 * level * max|involute radius|."""
    return 4.0 * dec.level * involute(dec).radius.max_abs()
