import math

import numpy as np
import pytest

from ballmass import (
    ParameterError,
    UnitDirection,
    addition_sum,
    harmonic_basis_eval,
    harmonic_dim,
    sphere_rule,
    spherical_factor,
)


def random_direction(d, rng):
    v = rng.standard_normal(d)
    return UnitDirection.from_coords(v / np.linalg.norm(v))


class TestUnitDirection:
    def test_rejects_non_unit(self):
        with pytest.raises(ParameterError):
            UnitDirection(2, (0.5, 0.5))

    def test_normalizing_constructor(self):
        xi = UnitDirection.from_coords([3.0, 4.0], normalize=True)
        assert xi.coords == pytest.approx((0.6, 0.8))

    def test_angle_round_trip(self):
        xi = UnitDirection.from_angle(2.1)
        assert xi.theta == pytest.approx(2.1)

    def test_dot(self):
        a = UnitDirection.from_angle(0.0)
        b = UnitDirection.from_angle(math.pi / 3)
        assert a.dot(b) == pytest.approx(0.5)


class TestBasisValues:
    def test_constant_harmonic(self):
        for d in (2, 3):
            xi = UnitDirection.axis(d)
            assert harmonic_basis_eval(d, 0, 1, xi) == 1.0

    def test_circle_cosine_normalization(self):
        xi = UnitDirection.from_angle(0.0)
        assert harmonic_basis_eval(2, 1, 1, xi) == pytest.approx(math.sqrt(2))

    def test_sphere_degree_one_is_scaled_coordinates(self):
        # the three degree-1 harmonics are sqrt(3) xi_i in some order
        vals = set()
        for nu in (1, 2, 3):
            for i in range(3):
                xi = UnitDirection.axis(3, i)
                v = harmonic_basis_eval(3, 1, nu, xi)
                if abs(v) > 1e-12:
                    vals.add((nu, i, round(v, 10)))
        assert vals == {(1, 1, round(math.sqrt(3), 10)),
                        (2, 2, round(math.sqrt(3), 10)),
                        (3, 0, round(math.sqrt(3), 10))}

    def test_rejects_out_of_range_index(self):
        xi = UnitDirection.axis(3)
        with pytest.raises(ParameterError):
            harmonic_basis_eval(3, 2, 6, xi)
        with pytest.raises(ParameterError):
            harmonic_basis_eval(4, 1, 1, UnitDirection(4, (1.0, 0.0, 0.0, 0.0)))


class TestOrthonormality:
    @pytest.mark.parametrize("d", [2, 3])
    def test_gram_identity(self, d):
        from ballmass import harmonic_basis_values

        dirs, w = sphere_rule(d, 30)
        coords = np.array([xi.coords for xi in dirs])
        labels = [(k, nu) for k in range(13) for nu in range(1, harmonic_dim(k, d) + 1)]
        vals = np.array([harmonic_basis_values(d, k, nu, coords) for k, nu in labels])
        gram = (vals * w) @ vals.T
        assert np.max(np.abs(gram - np.eye(len(labels)))) < 1e-10

    @pytest.mark.parametrize("d", [2, 3])
    def test_rule_weights_sum_to_one(self, d):
        _, w = sphere_rule(d, 9)
        assert np.sum(w) == pytest.approx(1.0, rel=1e-14)


class TestAdditionFormula:
    def test_degree_zero(self):
        rng = np.random.default_rng(5)
        for d in (2, 3):
            xi, rho = random_direction(d, rng), random_direction(d, rng)
            assert addition_sum(d, 0, xi, rho) == 1.0

    def test_diagonal_counts_dimension(self):
        rng = np.random.default_rng(6)
        for k in range(8):
            xi = random_direction(3, rng)
            assert addition_sum(3, k, xi, xi) == pytest.approx(2 * k + 1, rel=1e-12)

    def test_circle_trig_identity(self):
        xi = UnitDirection.from_angle(0.0)
        rho = UnitDirection.from_angle(math.pi / 2)
        assert addition_sum(2, 2, xi, rho) == pytest.approx(-2.0, abs=1e-12)

    @pytest.mark.parametrize("d", [2, 3])
    def test_matches_spherical_factor(self, d):
        rng = np.random.default_rng(42)
        for _ in range(200):
            xi, rho = random_direction(d, rng), random_direction(d, rng)
            cos = xi.dot(rho)
            for k in range(13):
                lhs = addition_sum(d, k, xi, rho)
                rhs = spherical_factor(d, k, cos)
                assert abs(lhs - rhs) <= 1e-10 * harmonic_dim(k, d)

    def test_solid_harmonic_homogeneity(self):
        # Y(r xi) = r^k Y(xi) is used by the ball basis; check the identity
        # through the polynomial form of the d=3 degree-2 harmonics
        xi = UnitDirection.from_polar(0.7, 1.1)
        x = 0.6 * np.asarray(xi.coords)
        # nu = 4 is the m = 1 harmonic: sqrt(15) xz up to ordering
        val_sphere = harmonic_basis_eval(3, 2, 4, xi)
        r = np.linalg.norm(x)
        assert r ** 2 * val_sphere == pytest.approx(
            math.sqrt(15) * x[0] * x[2], rel=1e-12)
