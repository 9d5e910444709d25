"""Rectangular evaluation grids."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError

MAX_POINTS = 4096


@dataclass(frozen=True)
class GridSpec:
    z_min: float
    z_max: float
    t_min: float
    t_max: float
    n_z: int
    n_t: int

    def __post_init__(self):
        if not (np.isfinite([self.z_min, self.z_max, self.t_min, self.t_max]).all()):
            raise DomainError("grid extents must be finite")
        if self.z_max <= self.z_min or self.t_max <= self.t_min:
            raise DomainError("grid needs max > min on each axis")
        for n in (self.n_z, self.n_t):
            if not 2 <= n <= MAX_POINTS:
                raise DomainError(f"grid point count {n} outside [2, {MAX_POINTS}]")

    @classmethod
    def square(cls, extent: float, n: int) -> "GridSpec":
        """Symmetric grid ``[-extent, extent]^2`` with ``n`` points per axis."""
        return cls(-extent, extent, -extent, extent, n, n)

    @classmethod
    def with_spacing(cls, extent: float, h: float) -> "GridSpec":
        """Symmetric square grid whose spacing is (to rounding) ``h``."""
        n = int(round(2 * extent / h)) + 1
        return cls.square(extent, n)

    @property
    def z(self) -> np.ndarray:
        return np.linspace(self.z_min, self.z_max, self.n_z)

    @property
    def t(self) -> np.ndarray:
        return np.linspace(self.t_min, self.t_max, self.n_t)

    @property
    def dz(self) -> float:
        return (self.z_max - self.z_min) / (self.n_z - 1)

    @property
    def dt(self) -> float:
        return (self.t_max - self.t_min) / (self.n_t - 1)

    def mesh(self) -> tuple[np.ndarray, np.ndarray]:
        return np.meshgrid(self.z, self.t, indexing="ij")

    @property
    def half_width(self) -> float:
        """Smallest distance from the origin to a grid edge, per axis."""
        return min(-self.z_min, self.z_max, -self.t_min, self.t_max)


def trapezoid_weights(n: int, h: float) -> np.ndarray:
    w = np.full(n, h)
    w[0] = w[-1] = 0.5 * h
    return w
