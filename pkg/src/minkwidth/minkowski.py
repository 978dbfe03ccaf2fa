"""Minkowski-plane primitives: unit balls, dual norms, lengths and areas.

A centrally symmetric, strictly convex unit ball with support function
a(theta) defines a norm on the plane.  Its boundary is parameterized by
outward normal angle as u = a e_r + a' e_theta, and the dual ball's
boundary is v = u'/[u, u'], which pairs with u through [u, v] = 1 and
[u', v] = 0 ([.,.] is the 2x2 determinant).

All lengths, areas and curvature radii here are signed; no absolute
values are inserted anywhere, so identities remain valid past cusps.
"""

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DegenerateBall, NotConvex
from .periodic import (
    ParamGrid,
    PeriodicFn,
    check_same_grid,
    grid_integral,
    spectral_derivative,
    trig_interp,
)

__all__ = [
    "ParametricCurve",
    "ConvexCurve",
    "SymmetricBall",
    "BallFrames",
    "polar_frame",
    "cross",
    "curve_points",
    "support_from_points",
    "curve_derivative",
    "ball_frames",
    "ball_area",
    "dual_ball",
    "gauge_norm",
    "v_length",
    "mixed_area",
    "minkowski_curvature_radius",
    "evolute",
    "dual_curvature_radius",
    "dual_evolute",
    "equidistant",
    "resample_curve",
]


def polar_frame(theta) -> tuple[np.ndarray, np.ndarray]:
    """Radial and tangential unit vectors e_r, e_theta at the given angles."""
    theta = np.asarray(theta, dtype=float)
    e_r = np.stack([np.cos(theta), np.sin(theta)], axis=-1)
    e_t = np.stack([-np.sin(theta), np.cos(theta)], axis=-1)
    return e_r, e_t


def cross(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Determinant [p, q] of point pairs, broadcasting over leading axes."""
    return p[..., 0] * q[..., 1] - p[..., 1] * q[..., 0]


@dataclass(frozen=True)
class ParametricCurve:
    """Closed plane curve as (x, y) samples on the grid; may have cusps."""

    grid: ParamGrid
    points: np.ndarray

    def __post_init__(self):
        pts = np.asarray(self.points, dtype=float)
        if pts.shape != (self.grid.n, 2):
            raise ValueError(f"expected shape ({self.grid.n}, 2), got {pts.shape}")
        if not np.all(np.isfinite(pts)):
            raise ValueError("curve points must be finite")
        pts = pts.copy()
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)


@dataclass(frozen=True)
class ConvexCurve:
    """Strictly convex curve given by its support function h, h + h'' > 0."""

    grid: ParamGrid
    support: PeriodicFn

    def __post_init__(self):
        check_same_grid(self.grid, self.support.grid)
        radius = self.support.values + _derivative2(self.support)
        if np.min(radius) <= 0.0:
            raise NotConvex(
                f"support radius h + h'' has minimum {np.min(radius):.3e} <= 0"
            )


@dataclass(frozen=True)
class SymmetricBall:
    """Centrally symmetric unit ball via a pi-periodic support function a > 0."""

    grid: ParamGrid
    support: PeriodicFn

    def __post_init__(self):
        check_same_grid(self.grid, self.support.grid)
        a = self.support.values
        if np.min(a) <= 0.0:
            raise DegenerateBall(f"support minimum {np.min(a):.3e} <= 0")
        asym = np.max(np.abs(a - np.roll(a, -self.grid.half)))
        if asym > 1e-12 * max(1.0, np.max(np.abs(a))):
            raise DegenerateBall(f"support is not pi-periodic (defect {asym:.3e})")
        radius = a + _derivative2(self.support)
        if np.min(radius) <= 0.0:
            raise DegenerateBall(
                f"curvature radius a + a'' has minimum {np.min(radius):.3e} <= 0"
            )


class BallFrames(NamedTuple):
    """Boundary curves of a ball and its dual together with their brackets."""

    u: ParametricCurve
    v: ParametricCurve
    buu: PeriodicFn  # [u, u']
    bvv: PeriodicFn  # [v, v']


def _derivative2(f: PeriodicFn) -> np.ndarray:
    return spectral_derivative(spectral_derivative(f)).values


def curve_points(curve: ConvexCurve) -> ParametricCurve:
    """Sample a support-function curve as points h e_r + h' e_theta."""
    e_r, e_t = polar_frame(curve.grid.theta)
    h = curve.support.values[:, None]
    hp = spectral_derivative(curve.support).values[:, None]
    return ParametricCurve(curve.grid, h * e_r + hp * e_t)


def support_from_points(c: ParametricCurve) -> ConvexCurve:
    """Recover the support function of a convex curve parameterized by normal angle.

    Valid only when the tangent at parameter theta is parallel to e_theta
    (true for all curves this library produces from support functions and
    their convex equidistants).
    """
    e_r, _ = polar_frame(c.grid.theta)
    h = np.sum(c.points * e_r, axis=1)
    return ConvexCurve(c.grid, PeriodicFn(c.grid, h))


def curve_derivative(c: ParametricCurve) -> np.ndarray:
    """Spectral derivative of the coordinate functions, shape (n, 2)."""
    x = PeriodicFn(c.grid, c.points[:, 0])
    y = PeriodicFn(c.grid, c.points[:, 1])
    return np.stack(
        [spectral_derivative(x).values, spectral_derivative(y).values], axis=1
    )


def resample_curve(c: ParametricCurve, factor: int) -> ParametricCurve:
    """Trigonometric resampling onto a grid refined by the given factor.

    Faithful for analytic curves; used to densify polylines before
    polyline-based predicates whose accuracy is only O(n^-2).
    """
    if factor < 1:
        raise ValueError(f"factor must be >= 1, got {factor}")
    if factor == 1:
        return c
    fine = ParamGrid(c.grid.n * factor)
    x = trig_interp(PeriodicFn(c.grid, c.points[:, 0]), fine.theta)
    y = trig_interp(PeriodicFn(c.grid, c.points[:, 1]), fine.theta)
    return ParametricCurve(fine, np.stack([x, y], axis=1))


def ball_frames(ball: SymmetricBall) -> BallFrames:
    """Boundary u, dual boundary v = u'/[u,u'] and the brackets [u,u'], [v,v'].

    Brackets are evaluated by spectral differentiation of the coordinates,
    not by the closed forms a(a + a'') and 1/a^2; the closed forms are
    verified against this routine in the test suite.
    """
    grid = ball.grid
    e_r, e_t = polar_frame(grid.theta)
    a = ball.support.values[:, None]
    ap = spectral_derivative(ball.support).values[:, None]
    u_pts = a * e_r + ap * e_t
    u = ParametricCurve(grid, u_pts)
    du = curve_derivative(u)
    buu = cross(u_pts, du)
    if np.min(buu) <= 0.0:
        raise DegenerateBall(f"[u, u'] has minimum {np.min(buu):.3e} <= 0")
    v_pts = du / buu[:, None]
    v = ParametricCurve(grid, v_pts)
    dv = curve_derivative(v)
    bvv = cross(v_pts, dv)
    return BallFrames(u, v, PeriodicFn(grid, buu), PeriodicFn(grid, bvv))


def ball_area(ball: SymmetricBall) -> float:
    """Enclosed area of the unit ball, (1/2) * integral of [u, u']."""
    return 0.5 * grid_integral(ball_frames(ball).buu)


def dual_ball(ball: SymmetricBall) -> SymmetricBall:
    """Ball whose boundary is the dual curve v, as a support function.

    v is not parameterized by its own normal angle, so the support function
    is extracted by reparameterization: for each target angle phi, solve for
    the parameter t at which v's tangent direction is e_theta(phi) (monotone
    tangent-angle inversion refined by Newton steps on the trigonometric
    interpolant), then read off b(phi) = <v(t), e_r(phi)>.

    Applying dual_ball twice returns the original ball.
    """
    grid = ball.grid
    frames = ball_frames(ball)
    vx = PeriodicFn(grid, frames.v.points[:, 0])
    vy = PeriodicFn(grid, frames.v.points[:, 1])
    dv = curve_derivative(frames.v)

    # Tangent angle of v: tangent parallel to e_theta(psi) means the tangent
    # vector itself points at angle psi + pi/2.
    psi = np.unwrap(np.arctan2(dv[:, 1], dv[:, 0])) - 0.5 * np.pi
    offset = PeriodicFn(grid, psi - grid.theta)
    offset_d = spectral_derivative(offset)

    theta_ext = np.concatenate(
        [grid.theta - 2 * np.pi, grid.theta, grid.theta + 2 * np.pi]
    )
    psi_ext = np.concatenate([psi - 2 * np.pi, psi, psi + 2 * np.pi])
    t = np.interp(grid.theta, psi_ext, theta_ext)
    for _ in range(4):
        residual = t + trig_interp(offset, t) - grid.theta
        t = t - residual / (1.0 + trig_interp(offset_d, t))

    e_r, _ = polar_frame(grid.theta)
    b = trig_interp(vx, t) * e_r[:, 0] + trig_interp(vy, t) * e_r[:, 1]
    if np.min(b) < 0.0:
        # Wrong antipodal branch of the tangent-angle inversion.
        b = trig_interp(vx, t + np.pi) * e_r[:, 0] + trig_interp(vy, t + np.pi) * e_r[:, 1]
    # Project out solver noise so the result is symmetric to rounding.
    b = 0.5 * (b + np.roll(b, -grid.half))
    return SymmetricBall(grid, PeriodicFn(grid, b))


def gauge_norm(ball: SymmetricBall, point) -> float:
    """Minkowski norm of a point: the t >= 0 with point = t * (boundary point).

    Computed as max over theta of <point, e_r(theta)> / a(theta) on the
    grid, then polished by a parabolic step and Newton iterations on the
    trigonometric interpolant around the maximizer.
    """
    x, y = float(point[0]), float(point[1])
    if x == 0.0 and y == 0.0:
        return 0.0
    grid = ball.grid
    a = ball.support
    ap = spectral_derivative(a)
    app = spectral_derivative(ap)
    q = (x * np.cos(grid.theta) + y * np.sin(grid.theta)) / a.values
    m = int(np.argmax(q))
    qm, q0, qp = q[m - 1], q[m], q[(m + 1) % grid.n]
    denom = qm - 2.0 * q0 + qp
    shift = 0.5 * (qm - qp) / denom if denom < 0.0 else 0.0
    t = grid.theta[m] + np.clip(shift, -1.0, 1.0) * grid.step

    for _ in range(3):
        at = trig_interp(a, t)[0]
        a1 = trig_interp(ap, t)[0]
        a2 = trig_interp(app, t)[0]
        p = x * np.cos(t) + y * np.sin(t)
        p1 = -x * np.sin(t) + y * np.cos(t)
        q1 = (p1 * at - p * a1) / at**2
        q2 = -p * (at + a2) / at**2 - 2.0 * a1 * q1 / at
        if q2 >= 0.0:
            break
        step = np.clip(-q1 / q2, -grid.step, grid.step)
        t = t + step

    val = (x * np.cos(t) + y * np.sin(t)) / trig_interp(a, t)[0]
    return float(max(q0, val))


def v_length(c: ParametricCurve, ball: SymmetricBall) -> float:
    """Signed Minkowski length of c in the dual norm.

    With c' = lambda * v and [u, v] = 1, the speed is lambda = [u, c'];
    lambda may be negative past cusps and no absolute value is taken.
    """
    check_same_grid(c.grid, ball.grid)
    frames = ball_frames(ball)
    lam = cross(frames.u.points, curve_derivative(c))
    return c.grid.step * float(np.sum(lam))


def mixed_area(p: ParametricCurve, q: ParametricCurve) -> float:
    """Mixed area A(p, q) = (1/2) * integral of [p, q'] over [0, 2*pi).

    Symmetric in its arguments up to rounding (integration by parts), and
    A(p, p) is the enclosed signed area for simple curves traced once.
    """
    check_same_grid(p.grid, q.grid)
    return 0.5 * p.grid.step * float(np.sum(cross(p.points, curve_derivative(q))))


def minkowski_curvature_radius(c: ParametricCurve, ball: SymmetricBall) -> PeriodicFn:
    """Signed curvature radius mu with c' = mu * [u, u'] * v = mu * u'."""
    check_same_grid(c.grid, ball.grid)
    frames = ball_frames(ball)
    lam = cross(frames.u.points, curve_derivative(c))
    return PeriodicFn(c.grid, lam / frames.buu.values)


def evolute(c: ParametricCurve, ball: SymmetricBall) -> ParametricCurve:
    """Envelope of the Minkowski normals, c - mu * u.

    All equidistants of c share this evolute.
    """
    mu = minkowski_curvature_radius(c, ball).values
    u = ball_frames(ball).u.points
    return ParametricCurve(c.grid, c.points - mu[:, None] * u)


def dual_curvature_radius(c: ParametricCurve, ball: SymmetricBall) -> PeriodicFn:
    """Signed curvature radius of c in the dual norm: [v, c'] / [v, v'].

    Uses the dual frame v at the shared parameter rather than the dual
    ball's own normal-angle parameterization, so it applies directly to
    curves whose tangent is parallel to v'.
    """
    check_same_grid(c.grid, ball.grid)
    frames = ball_frames(ball)
    num = cross(frames.v.points, curve_derivative(c))
    return PeriodicFn(c.grid, num / frames.bvv.values)


def dual_evolute(c: ParametricCurve, ball: SymmetricBall) -> ParametricCurve:
    """Envelope of the dual-norm normals, c - (dual radius) * v."""
    rad = dual_curvature_radius(c, ball).values
    v = ball_frames(ball).v.points
    return ParametricCurve(c.grid, c.points - rad[:, None] * v)


def equidistant(c: ParametricCurve, ball: SymmetricBall, offset: float) -> ParametricCurve:
    """Constant-offset curve c + offset * u in the Minkowski normal direction."""
    check_same_grid(c.grid, ball.grid)
    u = ball_frames(ball).u.points
    return ParametricCurve(c.grid, c.points + offset * u)
