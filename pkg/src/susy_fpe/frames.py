"""Grid and solution-frame value types shared by the solver and the oracles."""

from dataclasses import dataclass

import numpy as np

from .errors import DomainError

_trapz = getattr(np, "trapezoid", None) or np.trapz

MIN_GRID_POINTS = 16
UNIFORMITY_RTOL = 1e-12


@dataclass(frozen=True, eq=False)
class Grid:
    """Uniform, strictly increasing abscissae."""

    x: np.ndarray

    def __post_init__(self):
        x = np.asarray(self.x, dtype=float)
        object.__setattr__(self, "x", x)
        if x.ndim != 1 or x.size < MIN_GRID_POINTS:
            raise DomainError(f"grid needs at least {MIN_GRID_POINTS} points")
        dx = np.diff(x)
        if np.any(dx <= 0.0):
            raise DomainError("grid points must be strictly increasing")
        h = (x[-1] - x[0]) / (x.size - 1)
        if np.max(np.abs(dx - h)) > UNIFORMITY_RTOL * max(abs(h), 1.0):
            raise DomainError("grid spacing must be uniform")

    @classmethod
    def uniform(cls, lo, hi, m):
        if not lo < hi:
            raise DomainError(f"grid bounds must satisfy lo < hi, got [{lo}, {hi}]")
        return cls(np.linspace(float(lo), float(hi), int(m)))

    @property
    def lo(self):
        return float(self.x[0])

    @property
    def hi(self):
        return float(self.x[-1])

    @property
    def m(self):
        return int(self.x.size)

    @property
    def h(self):
        return float((self.x[-1] - self.x[0]) / (self.x.size - 1))


@dataclass(frozen=True, eq=False)
class SolutionFrame:
    """Density values over a grid at one (s, t) pair."""

    grid: Grid
    t: float
    s: float
    values: np.ndarray

    def __post_init__(self):
        values = np.asarray(self.values, dtype=float)
        object.__setattr__(self, "values", values)
        if values.shape != self.grid.x.shape:
            raise DomainError("frame values must match the grid shape")
        if not np.all(np.isfinite(values)):
            raise DomainError("frame values must be finite")

    def mass(self):
        """Trapezoid mass over the grid."""
        return float(_trapz(self.values, self.grid.x))

    def min_value(self):
        return float(np.min(self.values))
