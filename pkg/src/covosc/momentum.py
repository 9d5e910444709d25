"""Quark-pair kinematics and the momentum-energy wave function.

With ``q_u = (q0 - qz)/sqrt2`` and ``q_v = (q0 + qz)/sqrt2`` the boosted
momentum-energy wave function is

    phi_eta(qz, q0) = pi^(-1/2) exp(-(e^eta q_u^2 + e^-eta q_v^2) / 2),

the Fourier transform of the space-time function under the kernel
``exp(i (qz z - q0 t)) / 2 pi``.  Both longitudinal widths grow like
``sqrt(cosh(eta) / 2)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .basis import QuadratureRule, product_rule
from .coupled import check_eta
from .covariant import boosted_wavefunction, squeeze_factor
from .errors import DomainError
from .grid import GridSpec, trapezoid_weights

_SQRT2 = math.sqrt(2.0)
# x = (x_a - x_b) * RELATIVE_SCALE; the other reading of the grouping is sqrt2 / 2.
RELATIVE_SCALE = 1.0 / (2.0 * _SQRT2)
MOMENTUM_SCALE = _SQRT2

FOURIER_MIN_EXTENT = 8.0
FOURIER_MIN_POINTS = 256


@dataclass(frozen=True)
class QuarkPairCoords:
    x_a: tuple[float, float]
    x_b: tuple[float, float]


@dataclass(frozen=True)
class QuarkPairMomenta:
    p_a: tuple[float, float]
    p_b: tuple[float, float]


@dataclass(frozen=True)
class MomentumPoint:
    q_z: float
    q_0: float


def pair_to_relative(pair: QuarkPairCoords):
    """Return ``(X, x)``: hadron position and scaled quark separation."""
    xa = np.asarray(pair.x_a, dtype=float)
    xb = np.asarray(pair.x_b, dtype=float)
    return (xa + xb) / 2.0, (xa - xb) * RELATIVE_SCALE


def relative_to_pair(X, x) -> QuarkPairCoords:
    X = np.asarray(X, dtype=float)
    d = np.asarray(x, dtype=float) / RELATIVE_SCALE
    return QuarkPairCoords(tuple(X + d / 2), tuple(X - d / 2))


def momenta_to_relative(pair: QuarkPairMomenta):
    """Return ``(P, q)``: total four-momentum and scaled momentum separation."""
    pa = np.asarray(pair.p_a, dtype=float)
    pb = np.asarray(pair.p_b, dtype=float)
    return pa + pb, MOMENTUM_SCALE * (pa - pb)


def relative_to_momenta(P, q) -> QuarkPairMomenta:
    P = np.asarray(P, dtype=float)
    d = np.asarray(q, dtype=float) / MOMENTUM_SCALE
    return QuarkPairMomenta(tuple(P / 2 + d / 2), tuple(P / 2 - d / 2))


def to_momentum_light_cone(p: MomentumPoint) -> tuple[float, float]:
    return (p.q_0 - p.q_z) / _SQRT2, (p.q_0 + p.q_z) / _SQRT2


def from_momentum_light_cone(q_u, q_v) -> MomentumPoint:
    return MomentumPoint((q_v - q_u) / _SQRT2, (q_u + q_v) / _SQRT2)


def momentum_wavefunction(eta: float, q_z, q_0):
    eta = check_eta(eta)
    s2 = squeeze_factor(eta) ** 2
    q_z = np.asarray(q_z, dtype=float)
    q_0 = np.asarray(q_0, dtype=float)
    q_u = (q_0 - q_z) / _SQRT2
    q_v = (q_0 + q_z) / _SQRT2
    val = np.exp(-0.5 * (s2 * q_u * q_u + q_v * q_v / s2)) / math.sqrt(math.pi)
    return float(val) if val.ndim == 0 else val


def default_probe() -> GridSpec:
    return GridSpec.square(4.0, 41)


def fourier_transform(eta: float, grid: GridSpec, probe: GridSpec, kernel_sign: int = 1) -> np.ndarray:
    """Discretized ``(1/2pi) int psi_eta(z,t) exp(i s (qz z - q0 t)) dz dt``.

    Direct trapezoid quadrature on ``grid``; the kernel factorizes so the double
    sum is two matrix products.  ``kernel_sign = -1`` conjugates the time part
    only, which is the wrong convention kept for fault tests.
    """
    z, t = grid.z, grid.t
    wz = trapezoid_weights(grid.n_z, grid.dz)
    wt = trapezoid_weights(grid.n_t, grid.dt)
    zz, tt = grid.mesh()
    f = boosted_wavefunction(eta, zz, tt) * np.outer(wz, wt)
    ez = np.exp(1j * np.outer(probe.z, z))
    et = np.exp(-1j * kernel_sign * np.outer(probe.t, t))
    return ez @ f @ et.T / (2.0 * math.pi)


def fourier_duality_check(eta: float, grid: GridSpec, probe: GridSpec | None = None, kernel_sign: int = 1) -> float:
    """Max |numerical transform - phi_eta| over the probe grid.

    The complex difference bounds both the modulus and the phase error.
    """
    eta = check_eta(eta)
    if grid.half_width < FOURIER_MIN_EXTENT:
        raise DomainError(f"Fourier grid must extend at least +-{FOURIER_MIN_EXTENT} on each axis")
    if min(grid.n_z, grid.n_t) < FOURIER_MIN_POINTS:
        raise DomainError(f"Fourier grid needs >= {FOURIER_MIN_POINTS} points per axis")
    probe = probe or default_probe()
    F = fourier_transform(eta, grid, probe, kernel_sign)
    qz, q0 = probe.mesh()
    return float(np.abs(F - momentum_wavefunction(eta, qz, q0)).max())


def momentum_marginal_variance(eta: float) -> float:
    """Var(q_z) of the boosted momentum density, ``cosh(eta) / 2``."""
    return 0.5 * math.cosh(check_eta(eta))


def momentum_marginal_variance_quadrature(eta: float, rule: QuadratureRule) -> float:
    qz, q0, w = product_rule(rule)
    rho = momentum_wavefunction(eta, qz, q0) ** 2
    norm = np.sum(w * rho)
    mean = np.sum(w * qz * rho) / norm
    return float(np.sum(w * (qz - mean) ** 2 * rho) / norm)


@dataclass(frozen=True)
class PartonProfile:
    eta: float
    axis: np.ndarray
    position_density: np.ndarray
    momentum_density: np.ndarray
    sigma_z: float
    sigma_q: float


def _marginal(values: np.ndarray, h: float) -> np.ndarray:
    w = trapezoid_weights(values.shape[1], h)
    dens = values @ w
    return dens / (dens.sum() * h)


def parton_profile(eta: float, grid: GridSpec) -> PartonProfile:
    """Longitudinal marginals of both squeezed densities on ``grid.z``.

    The second variable (t or q0) is integrated out by the trapezoid rule on
    the same axis, so the axis should cover the widest marginal comfortably.
    """
    eta = check_eta(eta)
    x = grid.z
    h = grid.dz
    a, b = np.meshgrid(x, x, indexing="ij")
    pos = _marginal(boosted_wavefunction(eta, a, b) ** 2, h)
    mom = _marginal(momentum_wavefunction(eta, a, b) ** 2, h)

    def sigma(d):
        mean = np.sum(x * d) * h
        return math.sqrt(np.sum((x - mean) ** 2 * d) * h)

    return PartonProfile(eta, x, pos, mom, sigma(pos), sigma(mom))
