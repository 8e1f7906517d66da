"""Normalized kernel, vanishing locus, genus-1 offsets."""

import numpy as np
import pytest

from spintheta import (
    EllipticSpinPoint,
    NotFound,
    PeriodMatrix,
    SzegoContext,
    ThetaCharacteristic,
    ThetaNull,
    Tolerance,
    elliptic_scorza_offset,
    even_characteristics,
    on_scorza_locus,
    quasi_period_factor,
    szego,
    theta,
    theta_batch,
)
from spintheta.verify import random_period_matrix

PM_I = PeriodMatrix([[1j]])
C00 = ThetaCharacteristic([0], [0])


def test_kernel_is_one_at_origin():
    ctx = SzegoContext(PM_I, C00)
    assert szego(ctx, [0]) == pytest.approx(1.0, rel=1e-14)


def test_kernel_is_even():
    rng = np.random.default_rng(41)
    pm = random_period_matrix(2, rng)
    ctx = SzegoContext(pm, ThetaCharacteristic((0, 0), (0, 0)))
    for _ in range(20):
        u = rng.uniform(-1, 1, 2) + 1j * rng.uniform(-0.5, 0.5, 2)
        assert szego(ctx, u) == pytest.approx(szego(ctx, -u), rel=1e-9)


def test_vanishes_at_the_theta_zero():
    ctx = SzegoContext(PM_I, C00)
    point = elliptic_scorza_offset(1j, C00)
    assert point.zero_w == pytest.approx(0.5 + 0.5j, abs=1e-10)
    assert abs(szego(ctx, [point.zero_w])) < 1e-8
    assert on_scorza_locus(ctx, [point.zero_w])


def test_locus_membership_trivials():
    ctx = SzegoContext(PM_I, C00)
    assert not on_scorza_locus(ctx, [0])
    assert not on_scorza_locus(ctx, [0.25 + 0.1j])


def test_locus_invariant_under_lattice_shifts():
    ctx = SzegoContext(PM_I, C00)
    w = elliptic_scorza_offset(1j, C00).zero_w
    for m, n in ((1, 0), (0, 1), (-1, 1), (2, -1)):
        assert on_scorza_locus(ctx, [w + m + n * 1j])


def test_translation_covariance_of_modulus():
    rng = np.random.default_rng(43)
    pm = random_period_matrix(2, rng)
    char = ThetaCharacteristic((0, 1), (1, 0))
    ctx = SzegoContext(pm, char)
    for _ in range(10):
        u = rng.uniform(-1, 1, 2) + 1j * rng.uniform(-0.4, 0.4, 2)
        m = rng.integers(-1, 2, 2)
        n = rng.integers(-1, 2, 2)
        lhs = abs(szego(ctx, u + m + pm.omega @ n))
        rhs = abs(quasi_period_factor(pm, char, u, m, n)) * abs(szego(ctx, u))
        assert lhs == pytest.approx(rhs, rel=1e-9)


class TestEllipticOffsets:
    @pytest.mark.parametrize("tau", [1j, 2j, 1 + 1j])
    def test_all_even_characteristics(self, tau):
        pm = PeriodMatrix([[tau]])
        for char in even_characteristics(1):
            point = elliptic_scorza_offset(tau, char)
            assert isinstance(point, EllipticSpinPoint)
            assert abs(theta(pm, [point.zero_w], char)) < 1e-10
            # closed form: w = (1 - eps) tau / 2 + (1 - del) / 2 modulo the lattice
            expected = (0.5 - char.eps[0] / 2) * tau + (0.5 - char.delta[0] / 2)
            diff = point.zero_w - expected
            b = diff.imag / tau.imag
            a = diff.real - b * tau.real
            assert abs(a - round(a)) < 1e-8 and abs(b - round(b)) < 1e-8

    def test_nonzero_for_shifted_characteristic(self):
        point = elliptic_scorza_offset(1j, ThetaCharacteristic([1], [0]))
        assert abs(point.zero_w) > 1e-3

    def test_odd_characteristic_rejected(self):
        with pytest.raises(ThetaNull):
            elliptic_scorza_offset(1j, ThetaCharacteristic([1], [1]))

    def test_lower_half_plane_rejected(self):
        with pytest.raises(NotFound):
            elliptic_scorza_offset(-1j, C00)


class TestContextValidation:
    def test_odd_characteristic_rejected(self):
        with pytest.raises(ThetaNull):
            SzegoContext(PM_I, ThetaCharacteristic([1], [1]))

    def test_even_theta_null_rejected(self):
        # product of two odd factors: even overall but theta(0) = 0
        pm = PeriodMatrix([[1j, 0], [0, 2j]])
        with pytest.raises(ThetaNull):
            SzegoContext(pm, ThetaCharacteristic((1, 1), (1, 1)))


def test_grid_locus_matches_lattice_translates():
    grid = 64
    tol = Tolerance()
    for tau in (1j, 1 + 1j):
        pm = PeriodMatrix([[tau]])
        for char in even_characteristics(1):
            ctx = SzegoContext(pm, char, tol)
            w = elliptic_scorza_offset(tau, char, tol).zero_w
            bz = (w.imag / tau.imag) % 1.0
            az = (w.real - (w.imag / tau.imag) * tau.real) % 1.0
            ab = np.arange(grid) / grid
            aa, bb = np.meshgrid(ab, ab, indexing="ij")
            pts = (aa + bb * tau).reshape(-1, 1)
            flagged = np.abs(theta_batch(pm, pts, char, tol) / ctx.theta_at_zero) < tol.eps_zero
            dist_a = np.abs(aa.ravel() - az)
            dist_a = np.minimum(dist_a, 1 - dist_a)
            dist_b = np.abs(bb.ravel() - bz)
            dist_b = np.minimum(dist_b, 1 - dist_b)
            near = (dist_a <= 1 / grid + 1e-12) & (dist_b <= 1 / grid + 1e-12)
            assert not np.any(flagged & ~near), "false positive beyond one grid cell"
            on_zero = (dist_a <= 1e-9) & (dist_b <= 1e-9)
            assert np.all(flagged[on_zero]), "the zero itself must be flagged"
