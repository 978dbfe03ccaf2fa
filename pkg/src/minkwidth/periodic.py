"""Uniform periodic grids and spectral calculus on [0, 2*pi).

Every scalar quantity in the library is stored as samples on a shared
equispaced grid and manipulated through its trigonometric interpolant, so
differentiation, antidifferentiation and half-period integrals of analytic
data are accurate to rounding.  The grid size is required to be even so
that the antipodal map theta -> theta + pi is an exact index shift by n/2.

All containers are immutable after construction and every function here is
pure; concurrent use over disjoint inputs is safe.
"""

from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import GridMismatch, NonZeroMean, NotAntiPeriodic

__all__ = [
    "ParamGrid",
    "PeriodicFn",
    "spectral_derivative",
    "spectral_antiderivative",
    "half_period_integral",
    "antipodal_shift",
    "trig_interp",
    "grid_integral",
    "half_grid_integral",
]


@dataclass(frozen=True)
class ParamGrid:
    """Equispaced angles theta_k = 2*pi*k/n, k = 0..n-1.

    n must be even and at least 16 so theta + pi lands back on the grid
    (index shift k -> k + n/2 mod n).
    """

    n: int

    def __post_init__(self):
        if self.n % 2 != 0 or self.n < 16:
            raise ValueError(f"grid size must be even and >= 16, got {self.n}")

    @cached_property
    def theta(self) -> np.ndarray:
        th = np.arange(self.n) * (2.0 * np.pi / self.n)
        th.setflags(write=False)
        return th

    @property
    def step(self) -> float:
        return 2.0 * np.pi / self.n

    @property
    def half(self) -> int:
        return self.n // 2


@dataclass(frozen=True)
class PeriodicFn:
    """Real 2*pi-periodic scalar function as samples f(theta_k)."""

    grid: ParamGrid
    values: np.ndarray

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=float)
        if vals.shape != (self.grid.n,):
            raise ValueError(
                f"expected {self.grid.n} samples, got shape {vals.shape}"
            )
        if not np.all(np.isfinite(vals)):
            raise ValueError("samples must be finite")
        vals = vals.copy()
        vals.setflags(write=False)
        object.__setattr__(self, "values", vals)

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.values)))

    # Pointwise arithmetic keeps formula code close to the math it encodes.
    def _coerce(self, other):
        if isinstance(other, PeriodicFn):
            check_same_grid(self.grid, other.grid)
            return other.values
        return other

    def __add__(self, other):
        return PeriodicFn(self.grid, self.values + self._coerce(other))

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        return PeriodicFn(self.grid, self.values - self._coerce(other))

    def __mul__(self, other):
        return PeriodicFn(self.grid, self.values * self._coerce(other))

    def __rmul__(self, other):
        return self.__mul__(other)

    def __neg__(self):
        return PeriodicFn(self.grid, -self.values)


def check_same_grid(a: ParamGrid, b: ParamGrid) -> None:
    if a.n != b.n:
        raise GridMismatch(f"grids of size {a.n} and {b.n} do not match")


def _derivative_values(values: np.ndarray) -> np.ndarray:
    n = values.shape[0]
    coeffs = np.fft.rfft(values)
    k = np.arange(n // 2 + 1)
    coeffs *= 1j * k
    # Zeroing the Nyquist mode keeps the derivative of real samples real
    # and odd-symmetric in frequency.
    coeffs[-1] = 0.0
    return np.fft.irfft(coeffs, n)


def spectral_derivative(f: PeriodicFn) -> PeriodicFn:
    """Derivative of the trigonometric interpolant of f.

    Exact (to rounding) for band-limited input with bandwidth < n/2.
    """
    return PeriodicFn(f.grid, _derivative_values(f.values))


def spectral_antiderivative(f: PeriodicFn) -> PeriodicFn:
    """The unique zero-mean periodic antiderivative G with G' = f.

    Raises NonZeroMean when |mean(f)| exceeds 1e-10 * max(1, max|f|): such
    an f has no periodic antiderivative, which usually means an upstream
    symmetry was violated.
    """
    n = f.grid.n
    coeffs = np.fft.rfft(f.values)
    mean = coeffs[0].real / n
    tol = 1e-10 * max(1.0, f.max_abs())
    if abs(mean) > tol:
        raise NonZeroMean(f"mean {mean:.3e} exceeds tolerance {tol:.3e}")
    k = np.arange(n // 2 + 1)
    coeffs[1:] = coeffs[1:] / (1j * k[1:])
    coeffs[0] = 0.0
    coeffs[-1] = 0.0
    return PeriodicFn(f.grid, np.fft.irfft(coeffs, n))


def half_period_integral(f: PeriodicFn) -> PeriodicFn:
    """F(theta) = integral of f over [theta, theta + pi].

    Requires f to be anti-periodic under the half shift,
    f(theta + pi) = -f(theta); then F(theta + pi) = -F(theta) holds exactly
    as index arithmetic and F' = -2 f in the spectral sense.
    """
    half = f.grid.half
    tol = 1e-9 * max(1.0, f.max_abs())
    defect = np.max(np.abs(f.values + np.roll(f.values, -half)))
    if defect > tol:
        raise NotAntiPeriodic(
            f"anti-periodicity defect {defect:.3e} exceeds tolerance {tol:.3e}"
        )
    g = spectral_antiderivative(f).values
    return PeriodicFn(f.grid, np.roll(g, -half) - g)


def antipodal_shift(f: PeriodicFn) -> PeriodicFn:
    """g with g(theta_k) = f(theta_k + pi); an exact involution."""
    return PeriodicFn(f.grid, np.roll(f.values, -f.grid.half))


def trig_interp(f: PeriodicFn, theta) -> np.ndarray:
    """Evaluate the trigonometric interpolant of f at arbitrary angles."""
    theta = np.atleast_1d(np.asarray(theta, dtype=float))
    n = f.grid.n
    coeffs = np.fft.rfft(f.values)
    k = np.arange(1, n // 2)
    phase = np.outer(theta, k)
    out = (
        coeffs[0].real
        + 2.0 * (np.cos(phase) @ coeffs[1:-1].real - np.sin(phase) @ coeffs[1:-1].imag)
        + coeffs[-1].real * np.cos((n // 2) * theta)
    ) / n
    return out


def grid_integral(f: PeriodicFn) -> float:
    """Integral over [0, 2*pi); the rectangle rule is spectrally accurate."""
    return f.grid.step * float(np.sum(f.values))


def half_grid_integral(f: PeriodicFn) -> float:
    """Integral over [0, pi); spectrally accurate for pi-periodic f."""
    return f.grid.step * float(np.sum(f.values[: f.grid.half]))
