import numpy as np
import pytest

from minkwidth import (
    ConvexCurve,
    DegenerateSignData,
    NotConvex,
    OnBoundary,
    ParamGrid,
    ParametricCurve,
    PeriodicFn,
    antipodal_shift,
    area_split,
    asymmetry_measure,
    ball_frames,
    center_symmetry_set,
    cusp_count,
    curve_derivative,
    decompose,
    equidistant,
    half_grid_integral,
    involute,
    region_contains,
    signed_area,
    single_tracing,
    spectral_derivative,
    support_from_points,
    v_length,
)

from conftest import random_convex


def circle_support(grid, radius, center=(0.0, 0.0)):
    h = radius + center[0] * np.cos(grid.theta) + center[1] * np.sin(grid.theta)
    return ConvexCurve(grid, PeriodicFn(grid, h))


# ---------------------------------------------------------------- decompose


def test_decompose_circle(grid):
    dec = decompose(circle_support(grid, 2.0))
    assert np.max(np.abs(dec.ae.points)) <= 1e-10
    assert np.max(np.abs(dec.ball.support.values - 1.0)) <= 1e-12
    assert dec.level == pytest.approx(2.0)
    assert dec.ae_radius.max_abs() <= 1e-10


def test_decompose_offset_circle_moves_only_midcurve(grid):
    dec = decompose(circle_support(grid, 2.0, center=(0.7, -0.3)))
    assert np.max(np.abs(dec.ae.points - np.array([0.7, -0.3]))) <= 1e-10
    assert np.max(np.abs(dec.ball.support.values - 1.0)) <= 1e-10
    assert dec.ae_radius.max_abs() <= 1e-9


def test_decompose_deltoid_closed_forms(grid, deltoid_dec):
    th = grid.theta
    assert np.max(np.abs(deltoid_dec.ball.support.values - 1.0)) <= 1e-12
    assert deltoid_dec.level == pytest.approx(10.0)
    assert np.max(np.abs(deltoid_dec.ae_radius.values + 8 * np.sin(3 * th))) <= 1e-8
    expected = np.stack(
        [2 * np.sin(2 * th) - np.sin(4 * th), 2 * np.cos(2 * th) + np.cos(4 * th)],
        axis=1,
    )
    assert np.max(np.abs(deltoid_dec.ae.points - expected)) <= 1e-10


def test_decompose_reconstruction(deltoid_dec):
    fr = deltoid_dec.frames()
    rebuilt = deltoid_dec.ae.points + deltoid_dec.level * fr.u.points
    diam = np.max(np.abs(deltoid_dec.curve.points))
    assert np.max(np.abs(deltoid_dec.curve.points - rebuilt)) <= 1e-10 * diam


def test_decompose_invariants_random():
    rng = np.random.default_rng(17)
    for _ in range(5):
        dec = decompose(random_convex(rng))
        alpha = dec.ae_radius
        scale = max(1.0, alpha.max_abs())
        assert np.max(np.abs(antipodal_shift(alpha).values + alpha.values)) <= 1e-10 * scale
        dm = curve_derivative(dec.ae)
        du = curve_derivative(dec.frames().u)
        resid = dm - alpha.values[:, None] * du
        assert np.max(np.abs(resid)) <= 1e-9 * max(1.0, np.max(np.abs(dm)))


def test_decompose_ball_unique_up_to_homothety():
    rng = np.random.default_rng(19)
    gamma = random_convex(rng)
    dec = decompose(gamma)
    shifted = equidistant(dec.ae, dec.ball, dec.level + 0.4)
    dec2 = decompose(support_from_points(shifted))
    ratio = dec2.ball.support.values / dec.ball.support.values
    assert np.max(np.abs(ratio - ratio.mean())) <= 1e-9


# ------------------------------------------------------- center symmetry set


def test_css_of_circle_is_center(grid):
    css = center_symmetry_set(circle_support(grid, 1.5, center=(0.2, 0.9)))
    assert np.max(np.abs(css.points - np.array([0.2, 0.9]))) <= 1e-9


def test_css_two_formulas_agree(grid, deltoid, deltoid_dec):
    css = center_symmetry_set(deltoid)
    mu = deltoid_dec.ae_radius.values + deltoid_dec.level
    u = deltoid_dec.frames().u.points
    direct = deltoid_dec.curve.points - mu[:, None] * u
    assert np.max(np.abs(css.points - direct)) <= 1e-9


def test_css_of_symmetric_curve_degenerates(grid):
    rng = np.random.default_rng(23)
    sym = random_convex(rng, symmetric=True)
    css = center_symmetry_set(sym)
    span = css.points.max(axis=0) - css.points.min(axis=0)
    assert np.hypot(*span) <= 1e-9


# ------------------------------------------------------------------ involute


def test_involute_symmetric_is_center(grid):
    rng = np.random.default_rng(29)
    dec = decompose(random_convex(rng, symmetric=True))
    inv = involute(dec)
    assert inv.radius.max_abs() <= 1e-10
    assert np.max(np.abs(inv.curve.points - dec.ae.points)) <= 1e-9


def test_involute_deltoid_closed_forms(grid, deltoid_inv):
    th = grid.theta
    assert np.max(np.abs(deltoid_inv.radius.values + (8 / 3) * np.cos(3 * th))) <= 1e-8
    expected = np.stack(
        [
            (2 / 3) * np.sin(2 * th) + (1 / 3) * np.sin(4 * th),
            (2 / 3) * np.cos(2 * th) - (1 / 3) * np.cos(4 * th),
        ],
        axis=1,
    )
    assert np.max(np.abs(deltoid_inv.curve.points - expected)) <= 1e-8


def test_involute_derivative_identities():
    rng = np.random.default_rng(31)
    for _ in range(5):
        dec = decompose(random_convex(rng))
        inv = involute(dec)
        fr = dec.frames()
        beta = inv.radius
        scale = max(1.0, beta.max_abs())
        assert np.max(np.abs(antipodal_shift(beta).values + beta.values)) <= 1e-10 * scale
        dn = curve_derivative(inv.curve)
        dv = curve_derivative(fr.v)
        assert np.max(np.abs(dn - beta.values[:, None] * dv)) <= 1e-9 * max(
            1.0, np.max(np.abs(dn))
        )
        dbeta = spectral_derivative(beta)
        target = -(dec.ae_radius * fr.buu)
        assert np.max(np.abs(dbeta.values - target.values)) <= 1e-9 * max(
            1.0, target.max_abs()
        )


# -------------------------------------------------------------------- cusps


def test_cusp_count_deltoid(deltoid_dec, deltoid_inv):
    assert cusp_count(deltoid_dec.ae_radius) == 3
    assert cusp_count(deltoid_inv.radius) == 3


def test_cusp_count_matches_refined_grid_oracle(grid):
    f = PeriodicFn(grid, np.sin(5 * grid.theta) + 0.1 * np.sin(3 * grid.theta))
    fine = np.linspace(0.0, np.pi, 10 * grid.n, endpoint=False)
    vals = np.sin(5 * fine) + 0.1 * np.sin(3 * fine)
    seq = np.sign(np.append(vals, -vals[0]))
    brute = int(np.sum(seq[1:] != seq[:-1]))
    assert cusp_count(f) == brute == 5


def test_cusp_count_is_odd_for_antiperiodic(grid):
    rng = np.random.default_rng(37)
    for _ in range(10):
        vals = sum(rng.normal() / m * np.sin(m * grid.theta + rng.uniform(0, np.pi)) for m in (1, 3, 5, 7, 9))
        count = cusp_count(PeriodicFn(grid, vals))
        assert count % 2 == 1


def test_cusp_count_degenerate_data(grid):
    with pytest.raises(DegenerateSignData):
        cusp_count(PeriodicFn(grid, np.zeros(grid.n)))
    spike = np.zeros(grid.n)
    spike[1] = 1.0
    spike[1 + grid.half] = -1.0
    with pytest.raises(DegenerateSignData):
        cusp_count(PeriodicFn(grid, spike))


# -------------------------------------------------------------- signed area


def test_signed_area_constant_curve(grid):
    pts = np.tile([1.2, -0.7], (grid.n, 1))
    assert signed_area(ParametricCurve(grid, pts)) == 0.0


def test_signed_area_deltoid_values(deltoid_dec, deltoid_inv):
    assert abs(signed_area(deltoid_dec.ae) - 4 * np.pi) <= 1e-8
    assert abs(signed_area(deltoid_inv.curve) - 4 * np.pi / 9) <= 1e-8


def test_signed_area_difference_identity(deltoid_dec, deltoid_inv):
    lhs = signed_area(deltoid_dec.ae) - signed_area(deltoid_inv.curve)
    fr = deltoid_dec.frames()
    rhs = half_grid_integral(deltoid_inv.radius * deltoid_inv.radius * fr.bvv)
    assert abs(lhs - 32 * np.pi / 9) <= 1e-8
    assert abs(rhs - 32 * np.pi / 9) <= 1e-8
    assert abs(lhs - rhs) <= 1e-8 * (1 + abs(lhs))


def test_signed_area_difference_identity_random():
    rng = np.random.default_rng(43)
    for _ in range(5):
        dec = decompose(random_convex(rng))
        inv = involute(dec)
        lhs = signed_area(dec.ae) - signed_area(inv.curve)
        rhs = half_grid_integral(inv.radius * inv.radius * dec.frames().bvv)
        assert abs(lhs - rhs) <= 1e-8 * (1 + abs(lhs))


def test_signed_area_nonnegative_random():
    rng = np.random.default_rng(47)
    for _ in range(5):
        dec = decompose(random_convex(rng))
        assert signed_area(dec.ae) >= -1e-9
        assert signed_area(involute(dec).curve) >= -1e-9


# -------------------------------------------------------------- area split


def test_area_split_symmetric_halves(grid):
    rng = np.random.default_rng(53)
    dec = decompose(random_convex(rng, symmetric=True))
    for th in (0.0, 1.0, 2.5):
        a1, a2 = area_split(dec, 2.0, th)
        assert abs(a1 - a2) <= 1e-9 * (a1 + a2)


def test_area_split_deltoid_at_zero(deltoid_dec):
    a1, a2 = area_split(deltoid_dec, 10.0, 0.0)
    total = a1 + a2
    assert abs((a1 - a2) + 320.0 / 3.0) <= 1e-5 * total


def test_area_split_law_random_angles(deltoid_dec, deltoid_inv):
    rng = np.random.default_rng(59)
    grid = deltoid_dec.ae.grid
    a1, a2 = area_split(deltoid_dec, 10.0, 0.0)
    total = a1 + a2
    for th in rng.uniform(0, 2 * np.pi, 8):
        k = int(np.rint(th / grid.step)) % grid.n
        a1, a2 = area_split(deltoid_dec, 10.0, th)
        beta_k = deltoid_inv.radius.values[k]
        assert abs((a1 - a2) - 40.0 * beta_k) <= 1e-5 * total


def test_area_split_rejects_subcritical_level(deltoid_dec):
    with pytest.raises(NotConvex):
        area_split(deltoid_dec, 7.9, 0.0)


# ------------------------------------------------------------- containment


def test_region_contains_trivial_points(deltoid_dec):
    assert region_contains(deltoid_dec.ae, (0.0, 0.0))
    assert not region_contains(deltoid_dec.ae, (100.0, 0.0))


def test_region_contains_raises_on_boundary(deltoid_dec):
    pts = single_tracing(deltoid_dec.ae)
    with pytest.raises(OnBoundary):
        region_contains(deltoid_dec.ae, pts[10])


def test_involute_inside_midcurve_region(deltoid_dec, deltoid_inv):
    inside = _containment_fractions(deltoid_dec.ae, deltoid_inv.curve, deltoid_inv.radius)
    assert inside == 1.0


def _containment_fractions(boundary, curve, radius):
    # Samples adjacent to the involute's cusps touch the boundary and are
    # excluded, as are points the parity test reports as on the polyline.
    vals = radius.values
    flips = np.flatnonzero(np.sign(vals) != np.sign(np.roll(vals, -1)))
    excluded = set()
    for k in flips:
        for off in (-1, 0, 1, 2):
            excluded.add((k + off) % len(vals))
    hits = total = 0
    for k in range(len(vals)):
        if k in excluded:
            continue
        total += 1
        try:
            hits += bool(region_contains(boundary, curve.points[k]))
        except OnBoundary:
            total -= 1
    return hits / total


def test_involute_inside_midcurve_region_random():
    rng = np.random.default_rng(61)
    for _ in range(3):
        dec = decompose(random_convex(rng))
        inv = involute(dec)
        assert _containment_fractions(dec.ae, inv.curve, inv.radius) == 1.0


# -------------------------------------------------------- asymmetry measure


def test_asymmetry_symmetric_zero(grid):
    rng = np.random.default_rng(67)
    dec = decompose(random_convex(rng, symmetric=True))
    assert asymmetry_measure(dec) <= 1e-9


def test_asymmetry_deltoid_value(deltoid_dec):
    assert abs(asymmetry_measure(deltoid_dec) - 320.0 / 3.0) <= 1e-8


def test_asymmetry_matches_max_area_split(deltoid_dec):
    grid = deltoid_dec.ae.grid
    splits = []
    for k in range(0, grid.n, 8):
        a1, a2 = area_split(deltoid_dec, deltoid_dec.level, grid.theta[k])
        splits.append(abs(a1 - a2))
    total = sum(area_split(deltoid_dec, deltoid_dec.level, 0.0))
    assert abs(max(splits) - asymmetry_measure(deltoid_dec)) <= 1e-4 * total


def test_asymmetry_scales_quadratically(grid, deltoid):
    t = 3.0
    scaled = ConvexCurve(grid, PeriodicFn(grid, t * deltoid.support.values))
    m_base = asymmetry_measure(decompose(deltoid))
    m_scaled = asymmetry_measure(decompose(scaled))
    assert abs(m_scaled - t * t * m_base) <= 1e-8 * m_scaled


# ------------------------------------------------------------ misc checks


def test_midcurve_v_length_vanishes_random():
    rng = np.random.default_rng(71)
    for _ in range(5):
        dec = decompose(random_convex(rng))
        assert abs(v_length(dec.ae, dec.ball)) <= 1e-9
