"""Oscillator eigenfunctions and Gauss-Hermite quadrature.

Everything here works in dimensionless oscillator units, so the ground state
is ``pi**-0.25 * exp(-x**2 / 2)``.  The normalized eigenfunctions are built by
the three-term recurrence on the *functions* themselves,

    phi_{k+1}(x) = sqrt(2/(k+1)) x phi_k(x) - sqrt(k/(k+1)) phi_{k-1}(x),

which never forms H_k(x) and therefore does not overflow for large k.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy.linalg import eigh_tridiagonal

from .errors import DomainError, NumericError

KMAX_DEFAULT = 200
MAX_ORDER = 512
SQRT_PI = np.sqrt(np.pi)
PHI0_AT_ZERO = np.pi ** -0.25


def _check_x(x):
    x = np.asarray(x, dtype=float)
    if not np.all(np.isfinite(x)):
        raise DomainError("oscillator functions need finite arguments")
    return x


def hermite_functions(kmax: int, x, *, limit: int = KMAX_DEFAULT) -> np.ndarray:
    """Evaluate phi_0 .. phi_kmax at ``x``.

    Parameters
    ----------
    kmax : int
        highest excitation level, ``0 <= kmax <= limit``
    x : float or ndarray
        evaluation points
    limit : int
        configured upper bound on ``kmax``

    Returns
    -------
    ndarray
        shape ``(kmax + 1, *x.shape)``
    """
    if kmax < 0 or kmax > limit:
        raise DomainError(f"Fock index {kmax} outside [0, {limit}]")
    x = _check_x(x)
    out = np.empty((kmax + 1,) + x.shape)
    out[0] = PHI0_AT_ZERO * np.exp(-0.5 * x * x)
    if kmax >= 1:
        out[1] = np.sqrt(2.0) * x * out[0]
    for k in range(1, kmax):
        out[k + 1] = np.sqrt(2.0 / (k + 1)) * x * out[k] - np.sqrt(k / (k + 1)) * out[k - 1]
    return out


def hermite_eigenfunction(k: int, x, *, kmax: int = KMAX_DEFAULT):
    """Normalized oscillator eigenfunction phi_k(x).

    Returns a float for scalar ``x`` and an array otherwise.
    """
    k = int(k)
    vals = hermite_functions(k, x, limit=kmax)[k]
    return float(vals) if vals.ndim == 0 else vals


@dataclass(frozen=True)
class QuadratureRule:
    """Gauss-Hermite rule for the weight ``exp(-x**2)``.

    ``scaled_weights`` holds ``weights * exp(nodes**2)``; it stays finite for
    the outer nodes of high-order rules where ``weights`` underflows.
    """

    nodes: np.ndarray
    weights: np.ndarray
    scaled_weights: np.ndarray

    @property
    def order(self) -> int:
        return len(self.nodes)

    def integrate(self, values) -> float:
        """Plain integral of a function sampled on the nodes."""
        return float(np.dot(self.scaled_weights, values))


def _newton_polish(x: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    # Newton on p_n = phi_n exp(x^2/2); p_n' = sqrt(2n) p_{n-1}, so the
    # Gaussian factor cancels in the step.
    for _ in range(20):
        phi = hermite_functions(n, x, limit=MAX_ORDER)
        step = phi[n] / (np.sqrt(2.0 * n) * phi[n - 1])
        x = x - step
        if np.all(np.abs(step) <= 1e-14 * np.maximum(1.0, np.abs(x))):
            break
    else:
        raise NumericError(f"Gauss-Hermite Newton refinement did not converge for n={n}")
    phi_nm1 = hermite_functions(n - 1, x, limit=MAX_ORDER)[n - 1]
    return x, phi_nm1


def gauss_hermite(n: int) -> QuadratureRule:
    """Build the ``n``-point Gauss-Hermite rule, ``1 <= n <= 512``.

    Initial nodes come from the Jacobi matrix, then each node is polished by
    Newton steps on the normalized recurrence.  Only the non-negative half is
    computed so the node set is exactly symmetric.
    """
    n = int(n)
    if not 1 <= n <= MAX_ORDER:
        raise DomainError(f"quadrature order {n} outside [1, {MAX_ORDER}]")
    if n == 1:
        return QuadratureRule(np.array([0.0]), np.array([SQRT_PI]), np.array([SQRT_PI]))
    off = np.sqrt(np.arange(1, n) / 2.0)
    guess = eigh_tridiagonal(np.zeros(n), off, eigvals_only=True)
    half = np.sort(np.abs(guess[guess.size // 2:]))
    if n % 2:
        half[0] = 0.0
    half, phi_nm1 = _newton_polish(half, n)
    if n % 2:
        half[0] = 0.0
    # w_i = exp(-x_i^2) / (n phi_{n-1}(x_i)^2)
    scaled = 1.0 / (n * phi_nm1**2)
    weights = scaled * np.exp(-half * half)
    if n % 2:
        nodes = np.concatenate([-half[:0:-1], half])
        w = np.concatenate([weights[:0:-1], weights])
        sw = np.concatenate([scaled[:0:-1], scaled])
    else:
        nodes = np.concatenate([-half[::-1], half])
        w = np.concatenate([weights[::-1], weights])
        sw = np.concatenate([scaled[::-1], scaled])
    return QuadratureRule(nodes, w, sw)


def inner_product(f: Callable, g: Callable, rule: QuadratureRule) -> float:
    """Integral of ``f(x) g(x)`` over the real line, sampled on ``rule``.

    ``f`` and ``g`` must accept an array of nodes.  The weight is compensated,
    so plain amplitudes (not amplitudes divided by ``exp(-x**2)``) go in.
    """
    fx = np.asarray(f(rule.nodes), dtype=float) * np.asarray(g(rule.nodes), dtype=float)
    bad = ~np.isfinite(fx)
    if np.any(bad):
        node = rule.nodes[np.argmax(bad)]
        raise NumericError(f"integrand is not finite at node x={node!r}")
    return rule.integrate(fx)


def product_rule(rule: QuadratureRule) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Tensor-product 2D rule: meshgrids ``X1, X2`` and compensated weights."""
    x1, x2 = np.meshgrid(rule.nodes, rule.nodes, indexing="ij")
    return x1, x2, np.outer(rule.scaled_weights, rule.scaled_weights)
