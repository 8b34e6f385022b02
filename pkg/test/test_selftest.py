import random

import pytest

from core.selftest import PropertyCheck, run_selftest, scaled_count


def test_deterministic_suites_pass():
    report = run_selftest(11, cases=4, suites=["scalars", "torus", "compat", "words", "amalgam"])
    assert report.passed, [check.as_dict() for check in report.checks if check.failures]
    document = report.as_dict()
    assert document["seed"] == 11
    assert {entry["failures"] for entry in document["suites"]} == {0}


def test_same_seed_same_cases():
    first = run_selftest(3, cases=2, suites=["torus"]).as_dict()
    second = run_selftest(3, cases=2, suites=["torus"]).as_dict()
    assert first == second


def test_failures_keep_the_case():
    check = PropertyCheck("even numbers", lambda n: n % 2 == 0, lambda rng: (rng.randint(0, 9),))
    check.run(random.Random(1), 20)
    assert check.cases == 20
    assert check.failure_count() > 0
    assert check.as_dict()["first_failure"] == check.failures[0]
    assert int(check.failures[0]) % 2 == 1


def test_unknown_suite():
    with pytest.raises(ValueError):
        run_selftest(1, suites=["nothing"])


def test_scaled_count():
    assert scaled_count(200, None) == 200
    assert scaled_count(100, 4) == 2
    assert scaled_count(5, 4) == 1
    assert scaled_count(200, 200) == 200


@pytest.mark.parametrize("suite, cases", [("daha", 4), ("ideals", 8)])
def test_small_runs_pass(suite, cases):
    report = run_selftest(19, cases=cases, suites=[suite])
    assert report.passed, [check.as_dict() for check in report.checks if check.failures]
    assert all(check.cases >= 1 for check in report.checks)


FULL_SIZES = {
    "scalars": {"scalar ring axioms over Q": 200, "scalar units over F_7": 200},
    "torus": {"twisted Leibniz for delta1": 200, "tau1, tau2 are automorphisms": 200},
    "words": {"leading-term law in the free product": 200},
    "amalgam": {"associativity in daha": 200, "associativity in F1": 200, "associativity in F2": 200},
    "daha": {"DAHA relations at rational points": 5, "DAHA relations over F_7": 5},
    "ideals": {"one-sided reduction certificates on F1": 100,
               "reduce_mod remainder agrees with membership on F1": 100,
               "two-sided principality on F2": 50},
}


@pytest.mark.slow
@pytest.mark.parametrize("suite", sorted(FULL_SIZES))
def test_full_size_suites(suite):
    report = run_selftest(2024, suites=[suite])
    assert report.passed, [check.as_dict() for check in report.checks if check.failures]
    for prefix, size in FULL_SIZES[suite].items():
        matching = [check for check in report.checks if check.name.startswith(prefix)]
        assert matching, prefix
        assert all(check.cases >= size for check in matching)
