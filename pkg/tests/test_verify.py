import pytest

from ballmass.verify import CheckResult, run_suites


def test_all_suites_pass_at_default_tolerances():
    results = run_suites("all")
    assert len(results) >= 18
    failed = [r.name for r in results if not r.passed]
    assert failed == []


def test_results_carry_tolerances():
    results = run_suites("jacobi")
    for r in results:
        assert isinstance(r, CheckResult)
        assert r.tol >= 0.0
        assert r.error >= 0.0 or r.error == 0.0


def test_unknown_suite_rejected():
    with pytest.raises(ValueError):
        run_suites("bogus")
