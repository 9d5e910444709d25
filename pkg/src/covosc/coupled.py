"""Two coupled oscillators of equal mass and their normal modes.

The potential ``A x1^2 + A x2^2 + 2 C x1 x2`` is diagonalized by the 45 degree
rotation to ``y1 = (x1 + x2)/sqrt 2``, ``y2 = (x1 - x2)/sqrt 2``; the two mode
stiffnesses ``A + C`` and ``A - C`` are then written as ``K exp(-+2 eta)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, RangeError

ETA_LIMIT = 20.0
_SQRT2 = math.sqrt(2.0)


@dataclass(frozen=True)
class OscillatorParams:
    m: float
    A: float
    C: float

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.m, self.A, self.C)):
            raise DomainError("oscillator parameters must be finite")
        if self.m <= 0:
            raise DomainError(f"mass must be positive, got m={self.m}")
        if self.A <= abs(self.C):
            raise DomainError(f"overdamped coupling: need A > |C|, got A={self.A}, C={self.C}")


@dataclass(frozen=True)
class NormalModeData:
    K: float
    eta: float
    omega: float
    omega_slow: float
    omega_fast: float


@dataclass(frozen=True)
class PhaseSpaceState:
    x1: float
    x2: float
    p1: float = 0.0
    p2: float = 0.0

    def __post_init__(self):
        if not all(math.isfinite(v) for v in (self.x1, self.x2, self.p1, self.p2)):
            raise DomainError("phase-space coordinates must be finite")


def normal_modes(params: OscillatorParams) -> NormalModeData:
    """K, eta, omega and the two mode frequencies ``omega * exp(+-eta)``.

    ``omega_slow = omega exp(eta)`` belongs to the out-of-phase mode y2
    (stiffness ``A - C``), ``omega_fast = omega exp(-eta)`` to the in-phase
    mode y1.  The labels are ordered slow <= fast when ``C >= 0``.
    """
    A, C, m = params.A, params.C, params.m
    K = math.sqrt((A - C) * (A + C))
    # 0.25 ln((A-C)/(A+C)) without the cancellation for small C/A
    eta = -0.5 * math.atanh(C / A)
    omega = math.sqrt(K / m)
    return NormalModeData(K, eta, omega, omega * math.exp(eta), omega * math.exp(-eta))


def eigenfrequency_oracle(params: OscillatorParams) -> tuple[float, float]:
    """Frequencies from the eigenvalues ``A + C, A - C`` of [[A, C], [C, A]].

    Independent of :func:`normal_modes`: no K or eta is formed.
    """
    A, C, m = params.A, params.C, params.m
    return math.sqrt((A + C) / m), math.sqrt((A - C) / m)


def to_normal_coords(x1, x2):
    return (x1 + x2) / _SQRT2, (x1 - x2) / _SQRT2


def from_normal_coords(y1, y2):
    return (y1 + y2) / _SQRT2, (y1 - y2) / _SQRT2


def to_oscillator_units(x, params: OscillatorParams):
    """Physical position -> dimensionless, scaling by ``(m K)^(1/4)``."""
    K = normal_modes(params).K
    return np.asarray(x) * (params.m * K) ** 0.25


def hamiltonian_value(params: OscillatorParams, state: PhaseSpaceState) -> float:
    """Energy in the original coordinates."""
    s = state
    kinetic = (s.p1**2 + s.p2**2) / params.m
    potential = params.A * s.x1**2 + params.A * s.x2**2 + 2.0 * params.C * s.x1 * s.x2
    return 0.5 * (kinetic + potential)


def hamiltonian_normal_form(params: OscillatorParams, state: PhaseSpaceState) -> float:
    """Energy evaluated in normal coordinates, momenta rotated like positions."""
    modes = normal_modes(params)
    y1, y2 = to_normal_coords(state.x1, state.x2)
    py1, py2 = to_normal_coords(state.p1, state.p2)
    kinetic = (py1**2 + py2**2) / (2.0 * params.m)
    potential = 0.5 * modes.K * (math.exp(-2 * modes.eta) * y1**2 + math.exp(2 * modes.eta) * y2**2)
    return kinetic + potential


def check_eta(eta: float) -> float:
    eta = float(eta)
    if not math.isfinite(eta) or abs(eta) > ETA_LIMIT:
        raise RangeError(f"|eta| must be <= {ETA_LIMIT}, got {eta}")
    return eta


def ground_state(eta: float, x1, x2):
    """Entangled ground state in the original oscillator coordinates."""
    eta = check_eta(eta)
    x1 = np.asarray(x1, dtype=float)
    x2 = np.asarray(x2, dtype=float)
    s = x1 + x2
    d = x1 - x2
    val = np.exp(-0.25 * (math.exp(-eta) * s * s + math.exp(eta) * d * d)) / math.sqrt(math.pi)
    return float(val) if val.ndim == 0 else val
