"""Schmidt expansion of the coupled ground state.

    psi_eta(x1, x2) = sum_k c_k phi_k(x1) phi_k(x2),
    c_k = tanh(eta/2)^k / cosh(eta/2),

so the Schmidt probabilities ``p_k = (1 - lam^2) lam^(2k)`` form a geometric
sequence in ``lam = tanh(eta/2)``.  The projection and kernel routines below
recover these numbers from the Gaussian itself and serve as oracles.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import LinAlgError, eigh
from scipy.special import xlogy

from .basis import QuadratureRule, hermite_functions, product_rule
from .coupled import check_eta, ground_state
from .errors import DomainError, NumericError


@dataclass(frozen=True)
class SchmidtSeries:
    lam: float
    coefficients: np.ndarray

    @property
    def kmax(self) -> int:
        return len(self.coefficients) - 1

    @property
    def truncation_deficit(self) -> float:
        """``1 - sum c_k^2``, equal to ``lam^(2(kmax+1))``."""
        return self.lam ** (2 * (self.kmax + 1))


@dataclass(frozen=True)
class SchmidtSpectrum:
    probabilities: np.ndarray


def expansion_coefficients(eta: float, kmax: int) -> SchmidtSeries:
    eta = check_eta(eta)
    if kmax < 0:
        raise DomainError(f"kmax must be non-negative, got {kmax}")
    lam = math.tanh(eta / 2)
    k = np.arange(kmax + 1)
    coeffs = lam**k / math.cosh(eta / 2)
    return SchmidtSeries(lam, coeffs)


def schmidt_probabilities(eta: float, kmax: int) -> np.ndarray:
    """Closed-form ``p_k = (1 - lam^2) lam^(2k)`` for ``k <= kmax``."""
    lam2 = math.tanh(check_eta(eta) / 2) ** 2
    return (1.0 - lam2) * lam2 ** np.arange(kmax + 1)


def projection_matrix(eta: float, kmax: int, rule: QuadratureRule) -> np.ndarray:
    """All overlaps ``<phi_j phi_k, psi_eta>`` for ``j, k <= kmax``.

    Computed by tensor-product quadrature of the Gaussian; the diagonal is the
    Schmidt coefficient sequence and the off-diagonal part should vanish.
    """
    x1, x2, w = product_rule(rule)
    psi = ground_state(eta, x1, x2) * w
    if not np.all(np.isfinite(psi)):
        raise NumericError("ground state not finite on quadrature nodes")
    phi = hermite_functions(kmax, rule.nodes)
    return phi @ psi @ phi.T


def coefficient_projection_oracle(eta: float, k: int, rule: QuadratureRule, j: int | None = None) -> float:
    """Quadrature overlap ``<phi_j phi_k, psi_eta>`` (``j`` defaults to ``k``)."""
    j = k if j is None else j
    if max(j, k) > 60:
        raise DomainError("projection oracle supports indices up to 60")
    if rule.order < 96:
        raise DomainError(f"projection oracle needs quadrature order >= 96, got {rule.order}")
    return float(projection_matrix(eta, max(j, k), rule)[j, k])


def reconstruct(eta: float, x1, x2, kmax: int):
    """Partial Schmidt sum up to ``kmax``.

    The squared L2 distance to the full ground state is the truncation deficit
    ``lam^(2(kmax+1))``.
    """
    series = expansion_coefficients(eta, kmax)
    x1 = np.asarray(x1, dtype=float)
    x2 = np.asarray(x2, dtype=float)
    a = hermite_functions(kmax, x1)
    b = hermite_functions(kmax, x2)
    val = np.tensordot(series.coefficients, a * b, axes=1)
    return float(val) if val.ndim == 0 else val


def reduced_density_matrix(eta: float, rule: QuadratureRule) -> np.ndarray:
    """Symmetrized Nystrom discretization of ``rho(x1, x1')``.

    ``rho`` integrates the partner coordinate out of ``psi psi``.  Scaling by
    ``sqrt(W_i W_j)`` (W the weight-compensated quadrature weights) keeps the
    matrix symmetric with the integral operator's spectrum.
    """
    x1, x2, _ = product_rule(rule)
    psi = ground_state(eta, x1, x2)
    s = np.sqrt(rule.scaled_weights)
    b = s[:, None] * psi * s[None, :]
    return b @ b.T


def reduced_density_eigenvalues(eta: float, rule: QuadratureRule, kmax: int) -> SchmidtSpectrum:
    if rule.order < 96:
        raise DomainError(f"kernel diagonalization needs quadrature order >= 96, got {rule.order}")
    rho = reduced_density_matrix(eta, rule)
    try:
        evals = eigh(rho, eigvals_only=True)
    except LinAlgError as exc:
        raise NumericError(f"reduced-density eigensolver failed: {exc}") from exc
    evals = evals[::-1]
    return SchmidtSpectrum(evals[: kmax + 1].copy())


def entanglement_entropy(eta: float) -> float:
    """Von Neumann entropy of either oscillator, in nats."""
    eta = check_eta(eta)
    c2 = math.cosh(eta / 2) ** 2
    s2 = math.sinh(eta / 2) ** 2
    return float(xlogy(c2, c2) - xlogy(s2, s2))


def entropy_from_spectrum(probabilities) -> float:
    p = np.asarray(probabilities, dtype=float)
    return float(-np.sum(xlogy(p, p)))
