"""Light-cone coordinates, boosts as squeezes, and the boosted Gaussian.

A boost along z with rapidity ``eta`` acts on the (z, t) separation with the
half-angle matrix [[cosh(eta/2), sinh(eta/2)], [sinh(eta/2), cosh(eta/2)]],
which in light-cone variables ``u = (z+t)/sqrt2, v = (z-t)/sqrt2`` is the
squeeze ``u -> e^(eta/2) u, v -> e^(-eta/2) v``.  The boosted ground state is

    psi_eta(z, t) = pi^(-1/2) exp(-(e^(-eta) u^2 + e^(eta) v^2) / 2).

All the eta/2 versus eta bookkeeping goes through :func:`squeeze_factor`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .basis import QuadratureRule, product_rule
from .coupled import check_eta
from .errors import DomainError
from .grid import GridSpec

_SQRT2 = math.sqrt(2.0)
RESIDUAL_EXTENT = 4.0
RESIDUAL_MAX_SPACING = 0.05


@dataclass(frozen=True)
class SpacetimePoint:
    z: float
    t: float


@dataclass(frozen=True)
class LightConePoint:
    u: float
    v: float


@dataclass(frozen=True)
class SqueezeEllipse:
    """1/e contour of the boosted density, semi-axes along u and v."""

    semi_u: float
    semi_v: float

    @property
    def area(self) -> float:
        return math.pi * self.semi_u * self.semi_v

    @property
    def aspect_ratio(self) -> float:
        return self.semi_u / self.semi_v


def squeeze_factor(eta: float) -> float:
    """Stretch applied to u by a boost of rapidity eta (v gets the inverse)."""
    return math.exp(0.5 * eta)


def to_light_cone(p: SpacetimePoint) -> LightConePoint:
    return LightConePoint((p.z + p.t) / _SQRT2, (p.z - p.t) / _SQRT2)


def from_light_cone(p: LightConePoint) -> SpacetimePoint:
    return SpacetimePoint((p.u + p.v) / _SQRT2, (p.u - p.v) / _SQRT2)


def boost_point(eta: float, p: SpacetimePoint) -> SpacetimePoint:
    ch = math.cosh(0.5 * eta)
    sh = math.sinh(0.5 * eta)
    return SpacetimePoint(p.z * ch + p.t * sh, p.z * sh + p.t * ch)


def boost_light_cone(eta: float, p: LightConePoint) -> LightConePoint:
    s = squeeze_factor(eta)
    return LightConePoint(s * p.u, p.v / s)


def boosted_wavefunction(eta: float, z, t):
    """Amplitude of the boosted ground state at (z, t); arrays broadcast."""
    eta = check_eta(eta)
    s2 = squeeze_factor(eta) ** 2
    z = np.asarray(z, dtype=float)
    t = np.asarray(t, dtype=float)
    u = (z + t) / _SQRT2
    v = (z - t) / _SQRT2
    val = np.exp(-0.5 * (u * u / s2 + s2 * v * v)) / math.sqrt(math.pi)
    return float(val) if val.ndim == 0 else val


def quadratic_form(eta: float) -> np.ndarray:
    """Matrix M with ``psi_eta = pi^(-1/2) exp(-x.M.x / 2)`` in (z, t)."""
    ch, sh = math.cosh(eta), math.sinh(eta)
    return np.array([[ch, -sh], [-sh, ch]])


def _check_residual_grid(grid: GridSpec):
    lo = min(grid.z_min, grid.t_min)
    hi = max(grid.z_max, grid.t_max)
    if lo < -RESIDUAL_EXTENT or hi > RESIDUAL_EXTENT:
        raise DomainError(f"residual grid must lie within |z|, |t| <= {RESIDUAL_EXTENT}")
    if max(grid.dz, grid.dt) > RESIDUAL_MAX_SPACING + 1e-12:
        raise DomainError(f"residual grid spacing must be <= {RESIDUAL_MAX_SPACING}")


def residual_field(eta: float, grid: GridSpec, fd_step: float | None = None) -> np.ndarray:
    """``R = ((z^2 - t^2) psi - psi_zz + psi_tt) / 2`` sampled on ``grid``.

    Second derivatives are analytic unless ``fd_step`` is given, in which case
    second-order central differences with that step are used.
    """
    eta = check_eta(eta)
    _check_residual_grid(grid)
    z, t = grid.mesh()
    psi = boosted_wavefunction(eta, z, t)
    if fd_step is None:
        m = quadratic_form(eta)
        gz = m[0, 0] * z + m[0, 1] * t
        gt = m[1, 0] * z + m[1, 1] * t
        psi_zz = (gz * gz - m[0, 0]) * psi
        psi_tt = (gt * gt - m[1, 1]) * psi
    else:
        h = float(fd_step)
        psi_zz = (boosted_wavefunction(eta, z + h, t) - 2 * psi + boosted_wavefunction(eta, z - h, t)) / h**2
        psi_tt = (boosted_wavefunction(eta, z, t + h) - 2 * psi + boosted_wavefunction(eta, z, t - h)) / h**2
    return 0.5 * ((z * z - t * t) * psi - psi_zz + psi_tt)


def invariant_equation_residual(eta: float, grid: GridSpec, fd_step: float | None = None) -> float:
    """Max |R| over the grid; zero for the boosted ground state."""
    return float(np.abs(residual_field(eta, grid, fd_step)).max())


def squeeze_ellipse(eta: float) -> SqueezeEllipse:
    s = squeeze_factor(check_eta(eta))
    return SqueezeEllipse(s, 1.0 / s)


def lightcone_rule(eta: float, rule: QuadratureRule):
    """2D Gauss-Hermite nodes aligned with the squeezed light-cone axes.

    Returns ``(z, t, w)`` such that ``sum(w * f(z, t))`` integrates ``f``
    over the plane.  The rule is rotated to (u, v) and stretched by the
    squeeze, so it stays accurate for any rapidity.
    """
    a, b, w = product_rule(rule)
    s = squeeze_factor(eta)
    u = s * a
    v = b / s
    return (u + v) / _SQRT2, (u - v) / _SQRT2, w


def spatial_marginal_variance(eta: float) -> float:
    """Var(z) of the boosted density, ``cosh(eta) / 2``."""
    return 0.5 * math.cosh(check_eta(eta))


def spatial_marginal_variance_quadrature(eta: float, rule: QuadratureRule) -> float:
    """Var(z) by plain 2D quadrature of ``z^2 |psi_eta|^2`` over (z, t)."""
    z, t, w = product_rule(rule)
    rho = boosted_wavefunction(eta, z, t) ** 2
    norm = np.sum(w * rho)
    mean = np.sum(w * z * rho) / norm
    return float(np.sum(w * (z - mean) ** 2 * rho) / norm)


def lightcone_band_probability(eta: float, half_width: float = 0.2, n_u: int = 96, n_v: int = 64) -> float:
    """Probability that ``|v| < half_width`` under ``|psi_eta|^2``.

    Measured numerically: Gauss-Hermite in u (stretched by the squeeze) and
    Gauss-Legendre across the band in v, evaluating the wave function at the
    mapped (z, t) points.
    """
    from .basis import gauss_hermite

    eta = check_eta(eta)
    gh = gauss_hermite(n_u)
    a = gh.nodes * squeeze_factor(eta)
    wa = gh.scaled_weights * squeeze_factor(eta)
    xv, wv = np.polynomial.legendre.leggauss(n_v)
    v = half_width * xv
    wv = half_width * wv
    u_m, v_m = np.meshgrid(a, v, indexing="ij")
    z = (u_m + v_m) / _SQRT2
    t = (u_m - v_m) / _SQRT2
    rho = boosted_wavefunction(eta, z, t) ** 2
    return float(np.sum(np.outer(wa, wv) * rho))
