import numpy as np
import pytest

from minkwidth import ConvexCurve, ParamGrid, PeriodicFn, SymmetricBall, decompose, involute
from minkwidth.curvespec import build_convex_curve, random_curve_spec

N = 512


@pytest.fixture(scope="session")
def grid():
    return ParamGrid(N)


@pytest.fixture(scope="session")
def deltoid(grid):
    h = PeriodicFn(grid, 10.0 + np.sin(3 * grid.theta))
    return ConvexCurve(grid, h)


@pytest.fixture(scope="session")
def deltoid_dec(deltoid):
    return decompose(deltoid)


@pytest.fixture(scope="session")
def deltoid_inv(deltoid_dec):
    return involute(deltoid_dec)


def random_convex(rng, grid_n=N, **kw) -> ConvexCurve:
    return build_convex_curve(random_curve_spec(rng, grid_n=grid_n, **kw))


def random_ball(rng, grid, max_freq=6) -> SymmetricBall:
    spec = random_curve_spec(rng, grid_n=grid.n, max_freq=max_freq, symmetric=True)
    curve = build_convex_curve(spec)
    return SymmetricBall(grid, curve.support)
