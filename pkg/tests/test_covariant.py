import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from covosc.basis import gauss_hermite, product_rule
from covosc.covariant import (
    LightConePoint,
    SpacetimePoint,
    boost_light_cone,
    boost_point,
    boosted_wavefunction,
    from_light_cone,
    invariant_equation_residual,
    lightcone_band_probability,
    lightcone_rule,
    residual_field,
    spatial_marginal_variance,
    spatial_marginal_variance_quadrature,
    squeeze_ellipse,
    to_light_cone,
)
from covosc.errors import DomainError, RangeError
from covosc.grid import GridSpec

coord = st.floats(-10, 10)
rapidity = st.floats(-5, 5)

# measured by lightcone_band_probability (Gauss-Hermite x Gauss-Legendre)
BAND_RATIO_ETA4 = 4.32584494757397


def test_light_cone_examples():
    lc = to_light_cone(SpacetimePoint(1.0, 0.0))
    assert (lc.u, lc.v) == pytest.approx((1 / math.sqrt(2), 1 / math.sqrt(2)), abs=1e-16)
    lc = to_light_cone(SpacetimePoint(1.0, 1.0))
    assert (lc.u, lc.v) == pytest.approx((math.sqrt(2), 0.0), abs=3e-16)
    lc = to_light_cone(SpacetimePoint(0.3, -0.4))
    assert (lc.u, lc.v) == pytest.approx((-0.1 / math.sqrt(2), 0.7 / math.sqrt(2)), abs=3e-16)


@given(coord, coord)
def test_light_cone_round_trip(z, t):
    back = from_light_cone(to_light_cone(SpacetimePoint(z, t)))
    scale = max(1.0, abs(z), abs(t))
    assert abs(back.z - z) <= 4.5e-16 * scale and abs(back.t - t) <= 4.5e-16 * scale


def test_boost_examples():
    assert boost_point(0.0, SpacetimePoint(0.3, -2.0)) == SpacetimePoint(0.3, -2.0)
    p = boost_point(2.0, SpacetimePoint(1.0, 0.0))
    assert (p.z, p.t) == pytest.approx((math.cosh(1), math.sinh(1)), abs=1e-15)
    assert (p.z, p.t) == pytest.approx((1.54308, 1.17520), abs=1e-5)
    q = boost_light_cone(2.0, LightConePoint(1.0, 1.0))
    assert (q.u, q.v) == pytest.approx((math.e, 1 / math.e), abs=1e-15)
    assert q.u * q.v == pytest.approx(1.0, abs=1e-15)


@settings(max_examples=300)
@given(rapidity, coord, coord)
def test_boost_invariants(eta, z, t):
    p = SpacetimePoint(z, t)
    q = boost_point(eta, p)
    scale = max(z * z + t * t, 1e-300)
    assert abs((q.z**2 - q.t**2) - (z * z - t * t)) <= 1e-12 * scale * math.cosh(eta)
    lc = to_light_cone(p)
    lc2 = boost_light_cone(eta, lc)
    assert abs(lc2.u * lc2.v - lc.u * lc.v) <= 1e-12 * scale
    # boosting commutes with the change to light-cone variables
    via = to_light_cone(q)
    assert via.u == pytest.approx(lc2.u, rel=1e-12, abs=1e-12)
    assert via.v == pytest.approx(lc2.v, rel=1e-12, abs=1e-12)


@settings(max_examples=300)
@given(st.floats(-3, 3), st.floats(-3, 3), coord, coord)
def test_boost_composition(e1, e2, z, t):
    p = SpacetimePoint(z, t)
    a = boost_point(e1, boost_point(e2, p))
    b = boost_point(e1 + e2, p)
    scale = max(1.0, abs(b.z), abs(b.t))
    assert abs(a.z - b.z) <= 1e-12 * scale and abs(a.t - b.t) <= 1e-12 * scale


def test_wavefunction_origin():
    for eta in (0.0, 1.0, -7.0, 20.0):
        assert boosted_wavefunction(eta, 0.0, 0.0) == pytest.approx(1 / math.sqrt(math.pi), abs=1e-16)
    with pytest.raises(RangeError):
        boosted_wavefunction(-20.1, 0.0, 0.0)


@settings(max_examples=200)
@given(rapidity, st.floats(-6, 6), st.floats(-6, 6))
def test_wavefunction_covariance(eta, z, t):
    back = boost_point(-eta, SpacetimePoint(z, t))
    assert boosted_wavefunction(eta, z, t) == pytest.approx(boosted_wavefunction(0.0, back.z, back.t), abs=1e-12)


def test_rest_frame_is_dirac_gaussian():
    z, t = np.meshgrid(np.linspace(-3, 3, 31), np.linspace(-3, 3, 31))
    np.testing.assert_allclose(boosted_wavefunction(0.0, z, t), np.exp(-(z * z + t * t) / 2) / math.sqrt(math.pi), atol=1e-16)


@pytest.mark.parametrize("eta", [0.0, 1.0, -1.0, 2.0])
def test_normalization_plain_rule(eta):
    z, t, w = product_rule(gauss_hermite(96))
    assert np.sum(w * boosted_wavefunction(eta, z, t) ** 2) == pytest.approx(1.0, abs=1e-10)


@pytest.mark.parametrize("eta", [0.0, 1.0, 4.0, -6.0, 12.0])
def test_normalization_independent_of_eta(eta):
    z, t, w = lightcone_rule(eta, gauss_hermite(64))
    assert np.sum(w * boosted_wavefunction(eta, z, t) ** 2) == pytest.approx(1.0, abs=1e-12)


def test_residual_rest_frame():
    grid = GridSpec.with_spacing(4.0, 0.02)
    assert invariant_equation_residual(0.0, grid) < 1e-12


@pytest.mark.parametrize("eta", [1.5, 3.0, -2.0])
def test_residual_boosted(eta):
    grid = GridSpec.with_spacing(4.0, 0.02)
    assert invariant_equation_residual(eta, grid) < 1e-10
    fd = residual_field(eta, grid, fd_step=0.02)
    assert np.abs(fd - residual_field(eta, grid)).max() < 5e-3


def test_fd_residual_converges_second_order():
    grid = GridSpec.with_spacing(4.0, 0.05)
    e1 = np.abs(residual_field(1.5, grid, fd_step=0.04)).max()
    e2 = np.abs(residual_field(1.5, grid, fd_step=0.02)).max()
    assert e1 / e2 == pytest.approx(4.0, rel=0.05)


def test_other_signature_is_not_solved():
    # with (z^2 + t^2) and -(d_z^2 + d_t^2) the boosted state is no eigenfunction
    grid = GridSpec.with_spacing(2.0, 0.05)
    z, t = grid.mesh()
    eta = 1.0
    psi = boosted_wavefunction(eta, z, t)
    ch, sh = math.cosh(eta), math.sinh(eta)
    gz, gt = ch * z - sh * t, -sh * z + ch * t
    lap = (gz * gz - ch) * psi + (gt * gt - ch) * psi
    ratio = (0.5 * ((z * z + t * t) * psi - lap)) / psi
    assert ratio.max() - ratio.min() > 1.0


def test_residual_grid_guard():
    with pytest.raises(DomainError):
        invariant_equation_residual(0.0, GridSpec.with_spacing(5.0, 0.02))
    with pytest.raises(DomainError):
        invariant_equation_residual(0.0, GridSpec.with_spacing(4.0, 0.1))


def test_ellipse():
    e = squeeze_ellipse(0.0)
    assert (e.semi_u, e.semi_v) == (1.0, 1.0)
    e = squeeze_ellipse(2.0)
    assert (e.semi_u, e.semi_v) == pytest.approx((math.e, 1 / math.e))
    assert e.area == pytest.approx(math.pi)
    assert squeeze_ellipse(4.0).aspect_ratio == pytest.approx(math.exp(4.0))


@pytest.mark.parametrize("eta", [0.0, 2.0, -3.0])
def test_ellipse_is_one_over_e_contour(eta):
    e = squeeze_ellipse(eta)
    peak = boosted_wavefunction(eta, 0, 0) ** 2
    for u, v in ((e.semi_u, 0.0), (0.0, e.semi_v), (e.semi_u / math.sqrt(2), e.semi_v / math.sqrt(2))):
        p = from_light_cone(LightConePoint(u, v))
        assert boosted_wavefunction(eta, p.z, p.t) ** 2 == pytest.approx(peak / math.e, rel=1e-12)


def test_spatial_variance():
    assert spatial_marginal_variance(0.0) == 0.5
    assert spatial_marginal_variance(1.0) == pytest.approx(0.77154, abs=1e-5)
    rule = gauss_hermite(256)
    for eta in (0.0, 1.0, 2.0, 3.0, -2.0):
        assert spatial_marginal_variance_quadrature(eta, rule) == pytest.approx(spatial_marginal_variance(eta), abs=1e-8)
    assert spatial_marginal_variance(-1.3) == spatial_marginal_variance(1.3)


def test_lightcone_concentration():
    p0 = lightcone_band_probability(0.0)
    p4 = lightcone_band_probability(4.0)
    assert p0 == pytest.approx(math.erf(0.2), abs=1e-12)
    assert p4 == pytest.approx(math.erf(0.2 * math.exp(2.0)), abs=1e-12)
    assert p4 / p0 == pytest.approx(BAND_RATIO_ETA4, rel=1e-12)
    assert p4 > p0
