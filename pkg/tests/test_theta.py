"""Lattice-sum evaluation: values, derivatives, functional equation."""

import numpy as np
import pytest

from spintheta import (
    DimensionMismatch,
    NonPositiveDefinite,
    OrderTooHigh,
    PeriodMatrix,
    ThetaCharacteristic,
    Tolerance,
    all_characteristics,
    even_characteristics,
    parity,
    quasi_period_factor,
    theta,
    theta_batch,
    theta_deriv,
)
from spintheta.oracles import fd_derivative, theta_brute, theta_deriv_brute
from spintheta.verify import random_period_matrix

# theta[0,0](0; i) = pi^(1/4) / Gamma(3/4), frozen from the 40-digit box sum
THETA3_AT_I = 1.086434811213308014575316
# second and fourth derivatives at the origin for the same data
D2_AT_I = -3.413135621511942380099878
D4_AT_I = 134.8756378823380549497822

PM_I = PeriodMatrix([[1j]])
C00 = ThetaCharacteristic([0], [0])
C11 = ThetaCharacteristic([1], [1])


class TestParity:
    def test_zero_characteristic_even(self):
        for g in (1, 2, 3):
            assert parity(ThetaCharacteristic([0] * g, [0] * g)) == "even"

    def test_g1_half_half_odd(self):
        assert parity(C11) == "odd"

    def test_g2_all_halves_even(self):
        assert parity(ThetaCharacteristic((1, 1), (1, 1))) == "even"

    def test_counts(self):
        # 2^(g-1) (2^g + 1) even characteristics out of 4^g
        for g, even_count in ((1, 3), (2, 10), (3, 36)):
            chars = list(all_characteristics(g))
            assert len(chars) == 4**g
            assert len(even_characteristics(g)) == even_count


class TestThetaValues:
    def test_classical_constant(self):
        assert theta(PM_I, [0], C00) == pytest.approx(THETA3_AT_I, rel=1e-13)

    def test_odd_characteristic_vanishes_at_origin(self):
        assert abs(theta(PM_I, [0], C11)) < 1e-12

    def test_diagonal_factorization(self):
        rng = np.random.default_rng(7)
        tau1, tau2 = 0.2 + 1.1j, -0.3 + 1.4j
        pm = PeriodMatrix([[tau1, 0.0], [0.0, tau2]])
        for char in all_characteristics(2):
            z = rng.uniform(-1, 1, 2) + 1j * rng.uniform(-0.4, 0.4, 2)
            joint = theta(pm, z, char)
            split = theta(
                PeriodMatrix([[tau1]]), [z[0]], ThetaCharacteristic([char.eps[0]], [char.delta[0]])
            ) * theta(
                PeriodMatrix([[tau2]]), [z[1]], ThetaCharacteristic([char.eps[1]], [char.delta[1]])
            )
            assert joint == pytest.approx(split, rel=1e-9)

    def test_matches_extended_precision_box_sum(self):
        rng = np.random.default_rng(11)
        for g in (1, 2, 3):
            pm = random_period_matrix(g, rng)
            char = ThetaCharacteristic(rng.integers(0, 2, g), rng.integers(0, 2, g))
            z = rng.uniform(-0.7, 0.7, g) + 1j * rng.uniform(-0.3, 0.3, g)
            fast = theta(pm, z, char)
            slow = complex(theta_brute(pm.omega.tolist(), z.tolist(), char.eps, char.delta, box=10))
            assert fast == pytest.approx(slow, rel=1e-11)

    def test_matches_box_sum_at_large_imaginary_shift(self):
        # the shifted-argument regime of the functional equation: theta grows
        # like exp(pi y^T Y^-1 y), the truncation box must follow the shift
        rng = np.random.default_rng(19)
        pm = random_period_matrix(2, rng)
        char = ThetaCharacteristic((1, 0), (0, 1))
        z = np.array([0.2, -0.4]) + 1j * (pm.omega.imag @ np.array([2.0, -1.0]))
        fast = theta(pm, z, char)
        slow = complex(theta_brute(pm.omega.tolist(), z.tolist(), char.eps, char.delta, box=14))
        assert abs(fast) > 1e3  # genuinely in the growing regime
        assert fast == pytest.approx(slow, rel=1e-11)

    def test_batch_matches_scalar(self):
        pts = np.array([[0.1 + 0.2j], [0.4 - 0.1j], [0.0 + 0.0j]])
        batch = theta_batch(PM_I, pts, C00)
        for row, value in zip(pts, batch):
            assert value == pytest.approx(theta(PM_I, row, C00), rel=1e-12)

    def test_parity_of_function(self):
        rng = np.random.default_rng(13)
        for g in (1, 2):
            pm = random_period_matrix(g, rng)
            z = rng.uniform(-1, 1, g) + 1j * rng.uniform(-0.4, 0.4, g)
            for char in all_characteristics(g):
                sign = 1.0 if char.is_even() else -1.0
                assert theta(pm, -z, char) == pytest.approx(sign * theta(pm, z, char), rel=1e-9)

    def test_truncation_radius_doubling(self):
        from spintheta.theta import _box_radius

        tol = Tolerance()
        rng = np.random.default_rng(17)
        pm = random_period_matrix(2, rng)
        z = np.array([0.3 + 0.2j, -0.1 + 0.1j])
        base_radius = _box_radius(pm.lambda_min, 2, tol.eps_trunc, float(np.linalg.norm(z.imag)), 0)
        v1 = theta(pm, z, ThetaCharacteristic.parse("0,0;0,0"), tol, radius=base_radius)
        v2 = theta(pm, z, ThetaCharacteristic.parse("0,0;0,0"), tol, radius=2 * base_radius)
        assert abs(v1 - v2) < tol.eps_trunc


class TestDerivatives:
    def test_even_char_odd_orders_vanish_at_origin(self):
        for char in even_characteristics(2):
            pm = PeriodMatrix([[0.1 + 1.2j, 0.2j], [0.2j, 1.5j]])
            assert abs(theta_deriv(pm, [0, 0], char, (0,))) < 1e-12
            assert abs(theta_deriv(pm, [0, 0], char, (1, 1, 0))) < 1e-12

    def test_odd_char_even_orders_vanish_at_origin(self):
        assert abs(theta_deriv(PM_I, [0], C11, (0, 0))) < 1e-12
        assert abs(theta_deriv(PM_I, [0], C11, (0, 0, 0, 0))) < 1e-11

    def test_second_derivative_against_finite_differences(self):
        # central differences of the box-sum oracle with step 1e-4
        def f(point):
            return theta_brute([[1j]], point, (0,), (0,), box=20)

        oracle = complex(fd_derivative(f, [0.0], (0, 0), 1e-4))
        value = theta_deriv(PM_I, [0], C00, (0, 0))
        assert abs(value - oracle) / abs(oracle) < 1e-6
        assert value == pytest.approx(D2_AT_I, rel=1e-12)

    def test_fourth_derivative_frozen(self):
        assert theta_deriv(PM_I, [0], C00, (0, 0, 0, 0)) == pytest.approx(D4_AT_I, rel=1e-12)

    def test_matches_term_by_term_oracle(self):
        rng = np.random.default_rng(23)
        pm = random_period_matrix(2, rng)
        char = ThetaCharacteristic((0, 1), (1, 0))
        z = np.array([0.15 - 0.1j, -0.2 + 0.25j])
        for mu in ((0,), (0, 1), (1, 1, 0), (0, 0, 1, 1)):
            fast = theta_deriv(pm, z, char, mu)
            slow = complex(
                theta_deriv_brute(pm.omega.tolist(), z.tolist(), char.eps, char.delta, mu, box=10)
            )
            assert fast == pytest.approx(slow, rel=1e-10)

    def test_multi_index_symmetry(self):
        pm = PeriodMatrix([[0.1 + 1.2j, 0.2j], [0.2j, 1.5j]])
        z = [0.1 + 0.05j, -0.3 + 0.1j]
        reference = theta_deriv(pm, z, ThetaCharacteristic.parse("0,1;1,0"), (0, 1, 1, 0))
        for mu in ((1, 1, 0, 0), (0, 0, 1, 1), (1, 0, 1, 0)):
            assert theta_deriv(pm, z, ThetaCharacteristic.parse("0,1;1,0"), mu) == reference

    def test_order_zero_reduces_to_theta(self):
        assert theta_deriv(PM_I, [0.2j], C00, ()) == theta(PM_I, [0.2j], C00)


class TestQuasiPeriodicity:
    def test_no_shift_gives_one(self):
        assert quasi_period_factor(PM_I, C00, [0.3], [0], [0]) == 1.0

    def test_integer_shift_zero_characteristic(self):
        pm = PeriodMatrix([[0.2 + 1.3j, 0.1], [0.1, 1.1j]])
        char = ThetaCharacteristic((0, 0), (0, 0))
        factor = quasi_period_factor(pm, char, [0.1, 0.2], [3, -2], [0, 0])
        assert factor == pytest.approx(1.0, rel=1e-14)

    def test_g1_factor_matches_ratio(self):
        z = 0.3 + 0.2j
        factor = quasi_period_factor(PM_I, C00, [z], [0], [1])
        ratio = theta(PM_I, [z + 1j], C00) / theta(PM_I, [z], C00)
        assert factor == pytest.approx(ratio, rel=1e-9)

    def test_property_random_instances(self):
        rng = np.random.default_rng(31)
        tol = Tolerance()
        for g in (1, 2, 3):
            for _ in range(10):
                pm = random_period_matrix(g, rng)
                char = ThetaCharacteristic(rng.integers(0, 2, g), rng.integers(0, 2, g))
                z = rng.uniform(-1, 1, g) + 1j * rng.uniform(-0.5, 0.5, g)
                m = rng.integers(-1, 2, g)
                n = rng.integers(-1, 2, g)
                base = theta(pm, z, char)
                if abs(base) <= tol.eps_zero:
                    continue
                lhs = theta(pm, z + m + pm.omega @ n, char)
                rhs = quasi_period_factor(pm, char, z, m, n) * base
                assert abs(lhs - rhs) / max(abs(lhs), abs(rhs)) < 1e-9

    def test_non_integer_shift_rejected(self):
        with pytest.raises(ValueError):
            quasi_period_factor(PM_I, C00, [0.1], [0.5], [0])


class TestValidation:
    def test_order_too_high(self):
        with pytest.raises(OrderTooHigh):
            theta_deriv(PM_I, [0], C00, (0, 0, 0, 0, 0))

    def test_dimension_mismatch_point(self):
        with pytest.raises(DimensionMismatch):
            theta(PM_I, [0, 0], C00)

    def test_dimension_mismatch_characteristic(self):
        with pytest.raises(DimensionMismatch):
            theta(PM_I, [0], ThetaCharacteristic((0, 0), (0, 0)))

    def test_non_positive_definite(self):
        with pytest.raises(NonPositiveDefinite):
            PeriodMatrix([[-1j]])

    def test_asymmetric_rejected(self):
        with pytest.raises(NonPositiveDefinite):
            PeriodMatrix([[1j, 0.5], [0.1, 1j]])

    def test_characteristic_entries(self):
        with pytest.raises(ValueError):
            ThetaCharacteristic([2], [0])

    def test_tolerance_validation(self):
        with pytest.raises(ValueError):
            Tolerance(eps_trunc=-1.0)
        with pytest.raises(ValueError):
            Tolerance(eps_zero=2.0)

    def test_period_matrix_json_roundtrip(self):
        pm = PeriodMatrix([[0.25 + 1.5j, 0.1 - 0.2j], [0.1 - 0.2j, -0.4 + 2.0j]])
        again = PeriodMatrix.from_json(pm.to_json())
        assert np.allclose(pm.omega, again.omega)

    def test_characteristic_parse(self):
        char = ThetaCharacteristic.parse("0,1;1,0")
        assert char.eps == (0, 1) and char.delta == (1, 0)

    def test_characteristic_json_roundtrip(self):
        char = ThetaCharacteristic((1, 0, 1), (0, 0, 1))
        data = char.to_json()
        assert data == {"eps": [1, 0, 1], "del": [0, 0, 1]}
        assert ThetaCharacteristic.from_json(data) == char

    def test_period_json_declared_genus_checked(self):
        data = PeriodMatrix([[1j]]).to_json()
        data["g"] = 2
        with pytest.raises(DimensionMismatch):
            PeriodMatrix.from_json(data)

    def test_batch_shape_checked(self):
        with pytest.raises(DimensionMismatch):
            theta_batch(PM_I, np.zeros((4, 2), dtype=complex), C00)
