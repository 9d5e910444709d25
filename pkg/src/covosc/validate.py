"""Oracle suite: every closed form checked against an independent computation.

Each ``check_*`` function returns a :class:`CheckResult`.  The suite is what the
``validate`` subcommand runs; the acceptance tests call the same functions at
the tolerances pinned there.  Two of the checks accept a substitute for the
code path under test so deliberately broken variants can be fed in.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from . import coupled, covariant, entanglement, momentum
from .basis import gauss_hermite, product_rule
from .grid import GridSpec


@dataclass(frozen=True)
class CheckResult:
    name: str
    measured: float
    tolerance: float
    passed: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name}: measured={self.measured:.3e} tol={self.tolerance:.1e}"
        return f"{text} ({self.detail})" if self.detail else text


def _result(name, measured, tol, detail="", *, lower_bound=False):
    measured = float(measured)
    ok = measured > tol if lower_bound else measured < tol
    return CheckResult(name, measured, tol, bool(ok and math.isfinite(measured)), detail)


def printed_prefactor_coefficients(eta: float, kmax: int) -> np.ndarray:
    """Schmidt coefficients with ``1/cosh(eta)`` in front, as literally printed.

    Not normalized; only used to show the projection check catches it.
    """
    lam = math.tanh(eta / 2)
    return lam ** np.arange(kmax + 1) / math.cosh(eta)


def corrected_coefficients(eta: float, kmax: int) -> np.ndarray:
    return entanglement.expansion_coefficients(eta, kmax).coefficients


def check_normal_modes(tol: float = 1e-12) -> CheckResult:
    worst = 0.0
    p = coupled.OscillatorParams(1.0, 5.0, 3.0)
    modes = coupled.normal_modes(p)
    worst = max(abs(modes.K - 4.0), abs(modes.omega - 2.0), abs(modes.eta + math.log(2.0) / 2))
    for A in np.logspace(-1, 1, 9):
        for ratio in np.linspace(0.0, 0.99, 12):
            p = coupled.OscillatorParams(1.0, float(A), float(ratio * A))
            m = coupled.normal_modes(p)
            got = sorted((m.omega_slow, m.omega_fast))
            ref = sorted(coupled.eigenfrequency_oracle(p))
            worst = max(worst, abs(got[0] - ref[0]) / ref[0], abs(got[1] - ref[1]) / ref[1])
    return _result("normal_modes_oracle", worst, tol, "K, eta, omega and frequency set vs 2x2 eigenvalues")


def random_hamiltonian_draws(n: int, seed: int = 0):
    rng = np.random.default_rng(seed)
    for _ in range(n):
        m = rng.uniform(0.1, 10.0)
        A = rng.uniform(0.1, 10.0)
        C = rng.uniform(-0.99, 0.99) * A
        x1, x2, p1, p2 = rng.normal(scale=3.0, size=4)
        yield coupled.OscillatorParams(m, A, C), coupled.PhaseSpaceState(x1, x2, p1, p2)


def check_hamiltonian_forms(n: int = 1000, tol: float = 1e-10, seed: int = 0) -> CheckResult:
    worst = 0.0
    for params, state in random_hamiltonian_draws(n, seed):
        h1 = coupled.hamiltonian_value(params, state)
        h2 = coupled.hamiltonian_normal_form(params, state)
        worst = max(worst, abs(h1 - h2) / abs(h1))
    return _result("hamiltonian_forms", worst, tol, f"{n} random states, relative")


def check_ground_state_normalization(etas=(-2, -1, 0, 1, 2), order: int = 96, tol: float = 1e-10) -> CheckResult:
    x1, x2, w = product_rule(gauss_hermite(order))
    worst = max(abs(np.sum(w * coupled.ground_state(e, x1, x2) ** 2) - 1.0) for e in etas)
    return _result("ground_state_normalization", worst, tol, f"2D Gauss-Hermite order {order}")


def check_boost_covariance(etas=(-2, -1, 0, 1, 2), n: int = 41, extent: float = 3.0, tol: float = 1e-12) -> CheckResult:
    """psi_eta(z, t) against psi_0 evaluated at the inversely boosted point."""
    axis = np.linspace(-extent, extent, n)
    z, t = np.meshgrid(axis, axis, indexing="ij")
    worst = 0.0
    for eta in etas:
        back = covariant.boost_point(-eta, covariant.SpacetimePoint(z, t))
        ref = covariant.boosted_wavefunction(0.0, back.z, back.t)
        worst = max(worst, np.abs(covariant.boosted_wavefunction(eta, z, t) - ref).max())
        # the coupled-oscillator ground state is the same function of (x1, x2)
        worst = max(worst, np.abs(coupled.ground_state(eta, z, t) - ref).max())
    return _result("boost_covariance", worst, tol, f"{n}x{n} grid on |z|,|t|<={extent}")


def check_schmidt_projection(
    etas=(0.5, 1.0, 2.0),
    kmax: int = 20,
    order: int = 96,
    tol: float = 1e-9,
    coefficients: Callable[[float, int], np.ndarray] = corrected_coefficients,
) -> CheckResult:
    rule = gauss_hermite(order)
    worst = 0.0
    for eta in etas:
        proj = entanglement.projection_matrix(eta, kmax, rule)
        worst = max(worst, np.abs(np.diag(proj) - coefficients(eta, kmax)).max())
    return _result("schmidt_projection", worst, tol, f"k<={kmax}, eta in {tuple(etas)}")


def check_schmidt_offdiagonal(etas=(0.5, 1.0, 2.0), kmax: int = 20, order: int = 96, tol: float = 1e-9) -> CheckResult:
    rule = gauss_hermite(order)
    worst = 0.0
    for eta in etas:
        proj = entanglement.projection_matrix(eta, kmax, rule)
        worst = max(worst, np.abs(proj - np.diag(np.diag(proj))).max())
    return _result("schmidt_offdiagonal", worst, tol, f"j != k <= {kmax}")


def check_reconstruction(
    etas=(0.5, 1.0), kmax: int = 50, n: int = 41, extent: float = 3.0, tol: float = 1e-8
) -> CheckResult:
    axis = np.linspace(-extent, extent, n)
    x1, x2 = np.meshgrid(axis, axis, indexing="ij")
    worst = max(
        np.abs(entanglement.reconstruct(e, x1, x2, kmax) - coupled.ground_state(e, x1, x2)).max() for e in etas
    )
    return _result("schmidt_reconstruction", worst, tol, f"kmax={kmax}, sup over |x|<={extent}")


def check_kernel_spectrum(etas=(0.5, 1.0, 2.0), kmax: int = 20, order: int = 96, tol: float = 1e-8) -> CheckResult:
    rule = gauss_hermite(order)
    worst = 0.0
    for eta in etas:
        got = entanglement.reduced_density_eigenvalues(eta, rule, order - 1).probabilities
        ref = entanglement.schmidt_probabilities(eta, kmax)
        worst = max(worst, np.abs(got[: kmax + 1] - ref).max(), abs(got.sum() - 1.0))
    return _result("kernel_spectrum", worst, tol, f"k<={kmax}, trace included")


def check_entropy(etas=(0.5, 1.0, 2.0, -2.0), kmax: int = 200, tol: float = 1e-10) -> CheckResult:
    worst = abs(entanglement.entanglement_entropy(0.0))
    for eta in etas:
        series = entanglement.entropy_from_spectrum(entanglement.schmidt_probabilities(eta, kmax))
        worst = max(worst, abs(entanglement.entanglement_entropy(eta) - series))
    return _result("entropy_series", worst, tol, f"closed form vs -sum p ln p, k<={kmax}")


def check_boost_group(n: int = 1000, tol: float = 1e-12, seed: int = 1) -> CheckResult:
    rng = np.random.default_rng(seed)
    worst = 0.0
    for _ in range(n):
        e1, e2 = rng.uniform(-3, 3, size=2)
        p = covariant.SpacetimePoint(*rng.normal(scale=2.0, size=2))
        two = covariant.boost_point(e1, covariant.boost_point(e2, p))
        one = covariant.boost_point(e1 + e2, p)
        scale = max(1.0, abs(one.z), abs(one.t))
        worst = max(worst, abs(two.z - one.z) / scale, abs(two.t - one.t) / scale)

        q = covariant.boost_point(e1, p)
        interval = p.z**2 - p.t**2
        scale = max(abs(interval), p.z**2 + p.t**2)
        worst = max(worst, abs((q.z**2 - q.t**2) - interval) / scale)

        lc = covariant.to_light_cone(p)
        lc2 = covariant.boost_light_cone(e1, lc)
        scale = max(abs(lc.u * lc.v), 0.5 * (lc.u**2 + lc.v**2))
        worst = max(worst, abs(lc2.u * lc2.v - lc.u * lc.v) / scale)

        via_point = covariant.to_light_cone(q)
        worst = max(worst, abs(via_point.u - lc2.u) / max(1.0, abs(lc2.u)), abs(via_point.v - lc2.v) / max(1.0, abs(lc2.v)))
    return _result("boost_group", worst, tol, f"{n} random draws, relative")


def check_pde_residual(etas=(0.0, 1.5, 3.0), h: float = 0.02, tol: float = 1e-10) -> CheckResult:
    grid = GridSpec.with_spacing(covariant.RESIDUAL_EXTENT, h)
    worst = max(covariant.invariant_equation_residual(e, grid) for e in etas)
    return _result("pde_residual_analytic", worst, tol, f"|z|,|t|<=4, h={h}")


def check_pde_fd_agreement(etas=(0.0, 1.5, 3.0), h: float = 0.02, tol: float = 5e-3) -> CheckResult:
    grid = GridSpec.with_spacing(covariant.RESIDUAL_EXTENT, h)
    worst = max(
        np.abs(covariant.residual_field(e, grid) - covariant.residual_field(e, grid, fd_step=h)).max() for e in etas
    )
    return _result("pde_residual_fd", worst, tol, f"central differences, h={h}")


def check_fourier_duality(
    etas: Sequence[float] = (0.0, 1.0, -1.0, 2.0, -2.0),
    extent: float = 12.0,
    n: int = 384,
    tol: float = 1e-6,
    kernel_sign: int = 1,
) -> CheckResult:
    grid = GridSpec.square(extent, n)
    per_eta = {e: momentum.fourier_duality_check(e, grid, kernel_sign=kernel_sign) for e in etas}
    worst = max(per_eta.values())
    bad = [e for e, d in per_eta.items() if not d < tol]
    detail = f"{n}^2 grid, extent +-{extent}"
    if bad:
        detail += f"; failing eta: {bad}"
    return _result("fourier_duality", worst, tol, detail)


def check_width_law(etas=(0.0, 1.0, 2.0, 3.0), order: int = 256, tol: float = 1e-8) -> CheckResult:
    rule = gauss_hermite(order)
    worst = 0.0
    vz, vq = [], []
    for eta in etas:
        a = covariant.spatial_marginal_variance_quadrature(eta, rule)
        b = momentum.momentum_marginal_variance_quadrature(eta, rule)
        ref = 0.5 * math.cosh(eta)
        worst = max(worst, abs(a - ref), abs(b - ref))
        vz.append(a)
        vq.append(b)
    monotone = bool(np.all(np.diff(vz) > 0) and np.all(np.diff(vq) > 0))
    res = _result("width_law", worst, tol, "Var(z), Var(q_z) vs cosh(eta)/2; monotone=" + str(monotone))
    if not monotone:
        res = CheckResult(res.name, res.measured, res.tolerance, False, res.detail)
    return res


def check_lightcone_concentration(eta: float = 4.0, half_width: float = 0.2, factor: float = 3.0) -> CheckResult:
    ratio = covariant.lightcone_band_probability(eta, half_width) / covariant.lightcone_band_probability(0.0, half_width)
    return _result("lightcone_concentration", ratio, factor, f"P(|v|<{half_width}) ratio eta={eta} vs 0", lower_bound=True)


@dataclass
class SuiteConfig:
    quad_order: int = 96
    kmax: int = 20
    fourier_etas: tuple = (0.0, 1.0, -1.0, 2.0, -2.0)
    fourier_extent: float = 12.0
    fourier_n: int = 384
    inject: str | None = None


FAULTS = ("prefactor", "fourier-sign")


def run_suite(config: SuiteConfig | None = None) -> list[CheckResult]:
    cfg = config or SuiteConfig()
    coeffs = printed_prefactor_coefficients if cfg.inject == "prefactor" else corrected_coefficients
    sign = -1 if cfg.inject == "fourier-sign" else 1
    return [
        check_normal_modes(),
        check_hamiltonian_forms(),
        check_ground_state_normalization(order=cfg.quad_order),
        check_boost_covariance(),
        check_schmidt_projection(kmax=cfg.kmax, order=cfg.quad_order, coefficients=coeffs),
        check_schmidt_offdiagonal(kmax=cfg.kmax, order=cfg.quad_order),
        check_reconstruction(),
        check_kernel_spectrum(kmax=cfg.kmax, order=cfg.quad_order),
        check_entropy(),
        check_boost_group(),
        check_pde_residual(),
        check_pde_fd_agreement(),
        check_fourier_duality(cfg.fourier_etas, cfg.fourier_extent, cfg.fourier_n, kernel_sign=sign),
        check_width_law(),
        check_lightcone_concentration(),
    ]
