import math

import numpy as np
import pytest

from ballmass import (
    BallParams,
    BallPoint,
    ConvergenceRecord,
    DomainError,
    JacobiParams,
    ParameterError,
    SweepConfig,
    UnitDirection,
    ball_kernel_modified,
    boundary_ratio,
    difference_bound_check,
    geometric_schedule,
    interior_limit_target,
    interior_ratio,
    jacobi_kernel,
    lemma_kernel_bound_profile,
    lemma_kernel_bound_ratio,
    run_sweep,
    sweep_error_envelope,
)


class TestBoundaryRatio:
    def test_requires_mass_and_range(self):
        with pytest.raises(ParameterError):
            boundary_ratio(BallParams(2, 0.0, 0.0), 100)
        with pytest.raises(ParameterError):
            boundary_ratio(BallParams(2, -0.75, 1.0), 100)

    @pytest.mark.parametrize("d", [2, 3])
    @pytest.mark.parametrize("mu", [0.0, 0.5])
    def test_matches_kernel_path(self, d, mu):
        bp = BallParams(d, mu, 1.0)
        x = BallPoint(1.0, UnitDirection.axis(d))
        for n in (1, 2, 3, 5, 10, 25, 50, 100, 200):
            via_kernel = ball_kernel_modified(bp, n, x, x) / math.comb(n + d - 1, n)
            assert boundary_ratio(bp, n) == pytest.approx(via_kernel, rel=1e-8)

    def test_lambda_scaling_of_the_limit(self):
        # the limit is 2/lambda, so doubling lambda halves the large-n ratio
        r1 = boundary_ratio(BallParams(2, 0.0, 1.0), 4000)
        r2 = boundary_ratio(BallParams(2, 0.0, 2.0), 4000)
        assert r1 / r2 == pytest.approx(2.0, rel=1e-2)

    def test_decreasing_in_lambda(self):
        for d in (2, 3):
            prev = math.inf
            for lam in (0.5, 1.0, 2.0, 4.0):
                val = boundary_ratio(BallParams(d, 0.0, lam), 150)
                assert val < prev
                prev = val

    @pytest.mark.parametrize("d", [2, 3])
    @pytest.mark.parametrize("mu", [0.0, 0.5])
    def test_guard_bound(self, d, mu):
        for lam in (0.5, 1.0, 2.0):
            for n in (100, 500, 2000):
                assert boundary_ratio(BallParams(d, mu, lam), n) <= 2.5 / lam


class TestInteriorTarget:
    def test_disk_center(self):
        assert interior_limit_target(BallParams(2, 0.0, 1.0), 0.0) == \
            pytest.approx(0.5, rel=1e-14)

    def test_disk_half_radius(self):
        assert interior_limit_target(BallParams(2, 0.0, 1.0), 0.5) == \
            pytest.approx(1.0 / (2.0 * math.sqrt(0.75)), rel=1e-13)

    def test_ball_center(self):
        assert interior_limit_target(BallParams(3, 0.0, 1.0), 0.0) == \
            pytest.approx(4.0 / (3.0 * math.pi), rel=1e-13)

    def test_rejects_boundary(self):
        with pytest.raises(DomainError):
            interior_limit_target(BallParams(2, 0.0, 1.0), 1.0)


class TestInteriorRatio:
    def test_rejects_boundary_point(self):
        bp = BallParams(2, 0.0, 1.0)
        with pytest.raises(DomainError):
            interior_ratio(bp, 100, BallPoint(1.0, UnitDirection.axis(2)))

    def test_limit_insensitive_to_mass(self):
        x = BallPoint(0.5, UnitDirection.axis(2))
        r0 = interior_ratio(BallParams(2, 0.0, 0.0), 1200, x)
        r1 = interior_ratio(BallParams(2, 0.0, 1.0), 1200, x)
        target = interior_limit_target(BallParams(2, 0.0, 1.0), 0.5)
        assert r0 == pytest.approx(target, rel=0.01)
        assert r1 == pytest.approx(target, rel=0.01)

    def test_center_converges(self):
        bp = BallParams(2, 0.5, 1.0)
        val = interior_ratio(bp, 800, BallPoint(0.0, None))
        assert val == pytest.approx(interior_limit_target(bp, 0.0), rel=0.02)


class TestDifferenceBound:
    def test_positive_ratio(self):
        bp = BallParams(2, 0.0, 1.0)
        x = BallPoint(0.6, UnitDirection.axis(2))
        assert difference_bound_check(bp, 50, x) > 0.0

    def test_zero_for_zero_mass(self):
        bp = BallParams(2, 0.0, 0.0)
        x = BallPoint(0.6, UnitDirection.axis(2))
        assert difference_bound_check(bp, 50, x) == 0.0

    @pytest.mark.parametrize("d,nmax", [(2, 2000), (3, 1000)])
    def test_bounded_over_degrees(self, d, nmax):
        bp = BallParams(d, 0.0, 1.0)
        x = BallPoint(0.6, UnitDirection.axis(d))
        base = difference_bound_check(bp, 50, x)
        degrees = [n for n in (50, 100, 200, 500, 1000, 2000) if n <= nmax]
        worst = max(difference_bound_check(bp, n, x) for n in degrees)
        assert worst <= 10.0 * base

    def test_rejects_bad_points(self):
        bp = BallParams(2, 0.0, 1.0)
        with pytest.raises(DomainError):
            difference_bound_check(bp, 50, BallPoint(0.0, None))


class TestKernelBoundSweep:
    def test_scalar_matches_profile(self):
        for mu, delta in [(0.0, 0.0), (0.5, 0.5)]:
            prof = lemma_kernel_bound_profile(mu, delta, 60, 0.3)
            for k in (0, 1, 10, 58):
                assert lemma_kernel_bound_ratio(mu, delta, 60, k, 0.3) == \
                    pytest.approx(float(prof[k]), rel=1e-10)

    def test_finite_on_grid(self):
        for mu, delta in [(0.0, 0.0), (0.5, 0.5)]:
            for n in (100, 400):
                for t in np.linspace(-0.95, 1.0, 41):
                    prof = lemma_kernel_bound_profile(mu, delta, n, float(t))
                    assert np.all(np.isfinite(prof))

    def test_supremum_stable_between_200_and_400(self):
        for mu, delta in [(0.0, 0.0), (0.5, 0.5)]:
            sups = {}
            for n in (200, 400):
                sup = 0.0
                for t in np.linspace(-0.95, 1.0, 41):
                    sup = max(sup, float(np.max(
                        lemma_kernel_bound_profile(mu, delta, n, float(t)))))
                sups[n] = sup
            assert sups[400] <= 1.10 * sups[200]

    def test_even_degree_shift_inequality(self):
        # the proof reduces (1+t)^k K_m^{(mu, k+delta)}(t,t) for even k to the
        # diagonal kernel at beta = delta with degree m + k/2; recompute both
        # sides directly
        mu, delta, n = 0.5, 0.5, 80
        p = JacobiParams(mu, delta)
        for t in (-0.5, 0.0, 0.6):
            for k in (0, 2, 10, 40):
                m = (n - k) // 2
                scaled = ((1.0 + t) ** k
                          * jacobi_kernel(JacobiParams(mu, k + delta), m, t, t))
                assert scaled <= jacobi_kernel(p, m + k // 2, t, t) * (1 + 1e-10)

    def test_rejects_small_m(self):
        with pytest.raises(ParameterError):
            lemma_kernel_bound_ratio(0.0, 0.0, 5, 4, 0.3)
        with pytest.raises(DomainError):
            lemma_kernel_bound_ratio(0.0, 0.0, 50, 0, -1.0)


class TestSweeps:
    def test_geometric_schedule(self):
        assert geometric_schedule(10_000) == [125, 250, 500, 1000, 2000, 4000,
                                              8000, 10_000]
        assert geometric_schedule(2000) == [125, 250, 500, 1000, 2000]
        assert geometric_schedule(60) == [60]
        assert geometric_schedule(0) == []

    def test_empty_schedule_yields_no_records(self):
        cfg = SweepConfig(BallParams(2, 0.0, 1.0), "boundary", ())
        assert run_sweep(cfg) == []

    def test_boundary_records(self):
        cfg = SweepConfig(BallParams(2, 0.0, 1.0), "boundary", (125, 250, 500))
        records = run_sweep(cfg)
        assert [rec.n for rec in records] == [125, 250, 500]
        for rec in records:
            assert rec.target == pytest.approx(2.0)
            assert rec.abs_err == pytest.approx(abs(rec.ratio - rec.target))
            assert rec.rel_err == pytest.approx(rec.abs_err / rec.target)
        assert records[-1].rel_err < records[0].rel_err

    def test_interior_records(self):
        cfg = SweepConfig(BallParams(2, 0.5, 1.0), "interior", (125, 250, 500), r=0.5)
        records = run_sweep(cfg)
        target = interior_limit_target(BallParams(2, 0.5, 1.0), 0.5)
        assert records[-1].target == pytest.approx(target)
        assert records[-1].rel_err < records[0].rel_err

    def test_deterministic(self):
        cfg = SweepConfig(BallParams(3, 0.5, 2.0), "boundary", (125, 250))
        assert run_sweep(cfg) == run_sweep(cfg)

    def test_error_envelope(self):
        cfg = SweepConfig(BallParams(2, 0.0, 1.0), "interior", (), r=0.5)
        env1 = sweep_error_envelope(cfg, 400)
        env2 = sweep_error_envelope(cfg, 800)
        assert env2 < env1

    def test_rejects_unknown_mode(self):
        with pytest.raises(ParameterError):
            SweepConfig(BallParams(2, 0.0, 1.0), "sideways", (100,))

    def test_record_is_value_type(self):
        rec = ConvergenceRecord.build(10, BallParams(2, 0.0, 1.0), 1.0, 1.9, 2.0)
        assert rec.abs_err == pytest.approx(0.1)
        assert rec.rel_err == pytest.approx(0.05)
