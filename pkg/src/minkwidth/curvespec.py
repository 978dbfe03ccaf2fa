"""Curve specifications: JSON schema, presets and random generation.

A curve spec is a grid size plus a support function given as Fourier data
h(theta) = a0 + sum(cos_terms) + sum(sin_terms).  Random specs bound the
amplitude of frequency m by a budget proportional to 1/(m^2 + 1) with the
budgets summing below a0, which forces h + h'' > 0 by construction.
"""

import json
from dataclasses import dataclass, field

import numpy as np

from .minkowski import ConvexCurve
from .periodic import ParamGrid, PeriodicFn

__all__ = [
    "SpecError",
    "CurveSpec",
    "PRESETS",
    "parse_spec_dict",
    "load_curve_spec",
    "spec_to_dict",
    "build_convex_curve",
    "random_curve_spec",
]


class SpecError(ValueError):
    """Malformed curve spec; the message names the offending field."""


@dataclass(frozen=True)
class CurveSpec:
    grid_n: int
    a0: float
    cos_terms: tuple[tuple[int, float], ...] = field(default_factory=tuple)
    sin_terms: tuple[tuple[int, float], ...] = field(default_factory=tuple)
    name: str = "custom"


# The deltoid preset is the library's worked example: a three-cusped
# midpoint curve sitting 10 units inside a convex oval.
PRESETS: dict[str, CurveSpec] = {
    "deltoid": CurveSpec(grid_n=512, a0=10.0, sin_terms=((3, 1.0),), name="deltoid"),
    "circle": CurveSpec(grid_n=512, a0=1.0, name="circle"),
    "offset-circle": CurveSpec(
        grid_n=512,
        a0=1.0,
        cos_terms=((1, 0.25),),
        sin_terms=((1, 0.15),),
        name="offset-circle",
    ),
}
PRESETS["paper-deltoid"] = PRESETS["deltoid"]


def _parse_terms(raw, label: str) -> tuple[tuple[int, float], ...]:
    if raw is None:
        return ()
    if not isinstance(raw, (list, tuple)):
        raise SpecError(f"field '{label}' must be a list of [frequency, coefficient] pairs")
    out = []
    for item in raw:
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise SpecError(f"field '{label}' entries must be [frequency, coefficient] pairs")
        freq, coeff = item
        if not isinstance(freq, int) or isinstance(freq, bool) or freq < 1:
            raise SpecError(f"field '{label}' frequency must be a positive integer, got {freq!r}")
        coeff = float(coeff)
        if not np.isfinite(coeff):
            raise SpecError(f"field '{label}' coefficient must be finite")
        out.append((freq, coeff))
    return tuple(out)


def parse_spec_dict(data: dict, grid_override: int | None = None) -> CurveSpec:
    if not isinstance(data, dict):
        raise SpecError("spec must be a JSON object")
    grid_n = grid_override if grid_override is not None else data.get("grid_n", 512)
    if not isinstance(grid_n, int) or isinstance(grid_n, bool):
        raise SpecError(f"field 'grid_n' must be an integer, got {grid_n!r}")
    if grid_n % 2 != 0 or grid_n < 16:
        raise SpecError(f"field 'grid_n' must be even and >= 16, got {grid_n}")

    source = data.get("source")
    if isinstance(source, str):
        preset = PRESETS.get(source)
        if preset is None:
            raise SpecError(
                f"field 'source' names unknown preset {source!r}; "
                f"known: {sorted(set(PRESETS))}"
            )
        return CurveSpec(
            grid_n=grid_n,
            a0=preset.a0,
            cos_terms=preset.cos_terms,
            sin_terms=preset.sin_terms,
            name=preset.name,
        )
    if isinstance(source, dict):
        if "a0" not in source:
            raise SpecError("field 'source.a0' is required for Fourier specs")
        a0 = float(source["a0"])
        if not np.isfinite(a0):
            raise SpecError("field 'source.a0' must be finite")
        return CurveSpec(
            grid_n=grid_n,
            a0=a0,
            cos_terms=_parse_terms(source.get("cos"), "source.cos"),
            sin_terms=_parse_terms(source.get("sin"), "source.sin"),
            name=str(data.get("name", "custom")),
        )
    raise SpecError("field 'source' must be a preset name or a Fourier object")


def load_curve_spec(path, grid_override: int | None = None) -> CurveSpec:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise SpecError(f"cannot read spec file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SpecError(f"spec file is not valid JSON: {exc}") from exc
    return parse_spec_dict(data, grid_override)


def spec_to_dict(spec: CurveSpec) -> dict:
    return {
        "name": spec.name,
        "grid_n": spec.grid_n,
        "source": {
            "a0": spec.a0,
            "cos": [list(t) for t in spec.cos_terms],
            "sin": [list(t) for t in spec.sin_terms],
        },
    }


def support_values(spec: CurveSpec, theta: np.ndarray) -> np.ndarray:
    h = np.full_like(theta, spec.a0)
    for freq, coeff in spec.cos_terms:
        h += coeff * np.cos(freq * theta)
    for freq, coeff in spec.sin_terms:
        h += coeff * np.sin(freq * theta)
    return h


def build_convex_curve(spec: CurveSpec) -> ConvexCurve:
    """Instantiate the spec on its grid; raises NotConvex if h + h'' <= 0."""
    grid = ParamGrid(spec.grid_n)
    return ConvexCurve(grid, PeriodicFn(grid, support_values(spec, grid.theta)))


def random_curve_spec(
    rng: np.random.Generator,
    grid_n: int = 512,
    a0: float = 1.0,
    max_freq: int = 6,
    symmetric: bool = False,
    name: str = "random",
) -> CurveSpec:
    """Random analytic convex curve with h + h'' > 0 guaranteed.

    The amplitude of frequency m is drawn within a budget proportional to
    1/(m^2 + 1), and the budgets sum to 0.9 * a0, so the curvature radius
    stays positive whatever the draw.  With symmetric=True only even
    frequencies are used and the result is centrally symmetric.
    """
    freqs = [m for m in range(1, max_freq + 1) if not symmetric or m % 2 == 0]
    # Each term costs |coeff| * (m^2 + 1) against a total budget of 0.9 a0,
    # split evenly over the frequencies and halved across cos and sin.
    share = 0.9 * a0 / len(freqs)
    cos_terms = []
    sin_terms = []
    for m in freqs:
        per_part = 0.5 * share / (m * m + 1.0)
        c = rng.uniform(-per_part, per_part)
        s = rng.uniform(-per_part, per_part)
        if c != 0.0:
            cos_terms.append((m, c))
        if s != 0.0:
            sin_terms.append((m, s))
    return CurveSpec(
        grid_n=grid_n,
        a0=a0,
        cos_terms=tuple(cos_terms),
        sin_terms=tuple(sin_terms),
        name=name,
    )
