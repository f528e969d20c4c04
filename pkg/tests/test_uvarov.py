import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from ballmass import (
    JacobiParams,
    ParameterError,
    UvarovParams,
    gauss_jacobi_rule,
    jacobi_eval,
    jacobi_kernel_one_one,
    jacobi_norm,
    log_binomial,
    uvarov_eval,
    uvarov_kernel,
    uvarov_kernel_one_one,
    uvarov_norm,
    uvarov_value_at_one,
)
from ballmass.verify import uvarov_gram

LEGENDRE_MASS_ONE = UvarovParams(JacobiParams(0, 0), 1.0)


def modified_inner_product(u, f, g, nodes=40):
    rule = gauss_jacobi_rule(u.base, nodes)
    return rule.integrate(lambda t: f(t) * g(t)) + u.mass * f(1.0) * g(1.0)


class TestParams:
    def test_rejects_negative_mass(self):
        with pytest.raises(ParameterError):
            UvarovParams(JacobiParams(0, 0), -0.5)

    def test_log_mass_construction(self):
        u = UvarovParams.from_log_mass(JacobiParams(0, 0), 5000.0)
        assert u.mass == math.inf
        assert u.log_mass == 5000.0

    def test_zero_mass_log(self):
        assert UvarovParams(JacobiParams(0, 0), 0.0).log_mass == -math.inf


class TestEval:
    def test_degree_zero_is_one(self):
        for t in (-1.0, 0.2, 1.0):
            assert uvarov_eval(LEGENDRE_MASS_ONE, 0, t) == 1.0

    def test_legendre_unit_mass_degree_one(self):
        for t in np.linspace(-1, 1, 11):
            assert uvarov_eval(LEGENDRE_MASS_ONE, 1, t) == pytest.approx(
                t - 1.0 / 3.0, abs=1e-15)

    def test_zero_mass_reduces_to_jacobi(self):
        u = UvarovParams(JacobiParams(0.5, 1.5), 0.0)
        for k in (0, 1, 4, 9):
            for t in np.linspace(-1, 1, 7):
                assert uvarov_eval(u, k, t) == jacobi_eval(u.base, k, t)

    def test_same_leading_coefficient(self):
        # q_k - P_k has degree <= k-1, so differences of high-order finite
        # differences vanish; check via values at many points against a
        # degree k-1 fit
        u = UvarovParams(JacobiParams(0.5, 1.5), 2.0)
        k = 6
        grid = np.linspace(-1, 1, k + 1)
        diff = uvarov_eval(u, k, grid) - jacobi_eval(u.base, k, grid)
        coeffs = np.polynomial.polynomial.polyfit(grid, diff, k)
        assert abs(coeffs[-1]) < 1e-10 * max(1.0, np.max(np.abs(coeffs)))


class TestValueAtOne:
    def test_example(self):
        assert uvarov_value_at_one(LEGENDRE_MASS_ONE, 1) == pytest.approx(2.0 / 3.0)

    def test_degree_zero(self):
        assert uvarov_value_at_one(LEGENDRE_MASS_ONE, 0) == 1.0

    def test_decreasing_in_mass(self):
        for k in (1, 3, 10):
            prev = math.inf
            for mass in (0.1, 1.0, 10.0, 1e4):
                val = uvarov_value_at_one(UvarovParams(JacobiParams(0, 0), mass), k)
                assert val < prev
                prev = val

    def test_consistent_with_eval(self):
        for a, b in [(0.0, 0.0), (0.5, 1.5)]:
            for mass in (0.1, 1.0, 10.0):
                u = UvarovParams(JacobiParams(a, b), mass)
                for k in range(12):
                    assert uvarov_value_at_one(u, k) == pytest.approx(
                        uvarov_eval(u, k, 1.0), rel=1e-11)

    def test_times_denominator_recovers_classical(self):
        for a, b in [(0.0, 0.0), (0.5, 1.5)]:
            for mass in (0.1, 1.0, 10.0):
                u = UvarovParams(JacobiParams(a, b), mass)
                for k in range(1, 31):
                    lhs = uvarov_value_at_one(u, k) * (
                        1.0 + mass * jacobi_kernel_one_one(u.base, k - 1))
                    ref = math.exp(log_binomial(k + a, k))
                    assert lhs == pytest.approx(ref, rel=1e-12)


class TestNorms:
    def test_degree_zero_is_h0_plus_mass(self):
        # the K_{-1} = 0 convention makes the closed form agree with the
        # defining inner product: h~_0 = h_0 + M = 3 here
        assert uvarov_norm(LEGENDRE_MASS_ONE, 0) == pytest.approx(3.0, rel=1e-14)

    def test_degree_one_example(self):
        assert uvarov_norm(LEGENDRE_MASS_ONE, 1) == pytest.approx(4.0 / 3.0, rel=1e-14)

    def test_degree_one_against_inner_product_oracle(self):
        q1 = lambda t: t - 1.0 / 3.0
        direct = modified_inner_product(LEGENDRE_MASS_ONE, q1, q1)
        assert uvarov_norm(LEGENDRE_MASS_ONE, 1) == pytest.approx(direct, rel=1e-13)

    def test_zero_mass_reduces_to_classical(self):
        u = UvarovParams(JacobiParams(0.5, 1.5), 0.0)
        for k in (0, 1, 5, 20):
            assert uvarov_norm(u, k) == pytest.approx(jacobi_norm(u.base, k),
                                                      rel=1e-14)

    def test_against_quadrature_oracle(self):
        for a, b in [(0.0, 0.0), (0.5, 1.5)]:
            for mass in (0.1, 1.0, 10.0):
                u = UvarovParams(JacobiParams(a, b), mass)
                for k in (0, 1, 3, 8):
                    direct = modified_inner_product(
                        u, lambda t: uvarov_eval(u, k, t),
                        lambda t: uvarov_eval(u, k, t))
                    assert uvarov_norm(u, k) == pytest.approx(direct, rel=1e-12)


class TestOrthogonality:
    @pytest.mark.parametrize("alpha,beta", [(0.0, 0.0), (0.5, 1.5)])
    @pytest.mark.parametrize("mass", [0.1, 1.0, 10.0])
    def test_gram_is_diagonal(self, alpha, beta, mass):
        u = UvarovParams(JacobiParams(alpha, beta), mass)
        gram, h = uvarov_gram(u, 30, nodes=31)
        scaled = np.abs(gram - np.diag(h)) / np.sqrt(np.outer(h, h))
        assert float(np.max(scaled)) < 1e-9


class TestKernels:
    def test_mass_point_example(self):
        assert uvarov_kernel(LEGENDRE_MASS_ONE, 1, 1.0, 1.0) == pytest.approx(
            2.0 / 3.0, rel=1e-13)

    def test_zero_mass_reduction(self):
        u0 = UvarovParams(JacobiParams(0.5, 1.5), 0.0)
        rng = np.random.default_rng(8)
        from ballmass import jacobi_kernel
        for _ in range(10):
            t, s = rng.uniform(-1, 1, 2)
            assert uvarov_kernel(u0, 7, t, s) == pytest.approx(
                jacobi_kernel(u0.base, 7, t, s), rel=1e-13)

    @pytest.mark.parametrize("alpha,beta", [(0.0, 0.0), (0.5, 1.5)])
    @pytest.mark.parametrize("mass", [1.0, 10.0])
    def test_matches_orthonormal_sum(self, alpha, beta, mass):
        u = UvarovParams(JacobiParams(alpha, beta), mass)
        grid = np.linspace(-1, 1, 21)
        cols = np.column_stack([uvarov_eval(u, j, grid) for j in range(31)])
        hvals = np.array([uvarov_norm(u, j) for j in range(31)])
        for k in (1, 5, 30):
            direct = (cols[:, :k + 1] / hvals[:k + 1]) @ cols[:, :k + 1].T
            closed = np.array([[uvarov_kernel(u, k, float(t), float(s))
                                for s in grid] for t in grid])
            diag = np.diag(closed)
            scale = np.sqrt(np.outer(diag, diag))
            assert_allclose(closed, direct, rtol=0, atol=float(np.max(scale)) * 1e-9)

    def test_mass_point_values(self):
        assert uvarov_kernel_one_one(LEGENDRE_MASS_ONE, 1) == pytest.approx(2.0 / 3.0)
        assert uvarov_kernel_one_one(LEGENDRE_MASS_ONE, 0) == pytest.approx(1.0 / 3.0)

    def test_deflation(self):
        for mass in (0.1, 1.0, 10.0):
            u = UvarovParams(JacobiParams(0.5, 1.5), mass)
            for k in range(20):
                assert uvarov_kernel_one_one(u, k) < jacobi_kernel_one_one(u.base, k)

    def test_large_mass_limit(self):
        prev = math.inf
        for mass in (1.0, 1e2, 1e6, 1e12):
            u = UvarovParams(JacobiParams(0, 0), mass)
            val = uvarov_kernel_one_one(u, 4)
            assert val < prev
            assert val < 1.0 / mass
            prev = val

    def test_astronomical_log_mass(self):
        # masses like lambda 2^k / c with k ~ 1e5 only exist in log form
        from ballmass import log_uvarov_norm

        u = UvarovParams.from_log_mass(JacobiParams(0.5, 1.5), 70000.0)
        assert uvarov_kernel_one_one(u, 3) == pytest.approx(0.0, abs=1e-300)
        assert uvarov_value_at_one(u, 2) == pytest.approx(0.0, abs=1e-300)
        # h~_0 = h_0 + M, so its log is the log mass up to a vanishing term
        assert log_uvarov_norm(u, 0) == pytest.approx(70000.0, rel=1e-12)
        # the rank-one correction keeps interior values finite
        assert math.isfinite(uvarov_eval(u, 5, 0.3))
