import pytest

from capelli import suite as S
from capelli.suite import COVERAGE, IN_SCOPE, SUITES, SuiteConfig, run_suite


@pytest.mark.parametrize("name", list(SUITES))
def test_every_suite_passes_small(name):
    rep = run_suite(name, SuiteConfig(n_max=2, degree_max=2))
    assert rep.passed, rep.failures[:5]
    assert rep.cases > 0


def test_vanishing_example():
    rep = run_suite("vanishing", SuiteConfig(n_max=2, degree_max=2))
    assert rep.passed and rep.failures == []


def test_special_t1_example():
    assert run_suite("special_t1", SuiteConfig(n_max=3, degree_max=3)).passed


def test_eigen_case_count():
    rep = run_suite("eigen", SuiteConfig(n_max=1, degree_max=1))
    assert rep.passed and rep.cases == 2


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nosuch")


def test_config_validation():
    with pytest.raises(ValueError):
        SuiteConfig(n_max=-1)
    with pytest.raises(ValueError):
        SuiteConfig(classical_r_values=(0,))


def test_deterministic_reports():
    cfg = SuiteConfig(n_max=2, degree_max=2, random_seed=5)
    for name in ("ideal_basis", "special_t1", "hecke_relations"):
        a, b = run_suite(name, cfg).to_dict(), run_suite(name, cfg).to_dict()
        a.pop("wall_time")
        b.pop("wall_time")
        assert a == b


def test_coverage_manifest():
    covered = set().union(*COVERAGE.values())
    assert covered == set(IN_SCOPE)
    assert set(COVERAGE) == set(SUITES)


def test_failures_are_reported(monkeypatch):
    real = S._E
    monkeypatch.setattr(S, "_E", lambda lam: real(lam) + 1 if sum(lam) == 1 else real(lam))
    rep = run_suite("eigen", SuiteConfig(n_max=2, degree_max=1))
    assert not rep.passed
    f = rep.failures[0]
    assert f["check"] == "Xi eigen-equation" and "lam" in f and "expected" in f


def test_informational_notes():
    rep = run_suite("inversion", SuiteConfig(n_max=2, degree_max=3))
    assert rep.passed
    assert rep.notes["literal_q_binomial_exponent_holds"] is False
    rep = run_suite("integrality", SuiteConfig(n_max=2, degree_max=2))
    assert "alternative_leg_reading_integral" in rep.notes


def test_random_specialization_screening():
    import random
    from capelli import weights as W
    pts = [W.point_bar(l) for l in W.enumerate(2, 2)]
    q0, t0 = S.random_specialization(random.Random(1), 4, pts)
    assert all(q0 ** a * t0 ** b != 1 for a in range(5) for b in range(-4, 5) if a or b)
