"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

The suite runs once per module; every test looks up its own result.
"""

import pytest

from frobcover.suite import CRITERIA, SuiteConfig, run_suite

TOLERANCE = {
    1: "exact equality",
    2: "exact equality",
    3: "exact",
    4: "exact",
    5: "exact",
    6: "exact",
    7: "exact boolean equality",
    8: "exact",
    9: "exact",
    10: "exact",
    11: "exact",
    12: "1e-6 on power sums",
}

TITLES = {
    1: "Phi engines agree (cycle sum, recursion, determinant), n <= 5",
    2: "unit lemma on random non-Frobenius maps, n <= 4",
    3: "induced map on the symmetric power is a ring map, with converse",
    4: "composites of Frobenius maps are Frobenius of degree nm <= 6",
    5: "characteristic polynomial ratio and series identity",
    6: "five-sheet interval covering, axioms and transfer",
    7: "partition adjacency is symmetric, Bell(n)^2 pairs for n <= 5",
    8: "resolution space recovers X and Y",
    9: "direct image and multiset recovery are inverse",
    10: "Gugnin kernel of transfers and the determinant identity",
    11: "quadratic polynomial transfer, g(z) = -z - b",
    12: "numeric fibres of z^3 - 3z against exact power sums",
}


@pytest.fixture(scope="module")
def results():
    report = run_suite(SuiteConfig(seed=0))
    return {i: r for i, r in enumerate(report.results, start=1)}


@pytest.mark.parametrize("k", range(1, len(CRITERIA) + 1))
def test_criterion(k, results, capsys):
    r = results[k]
    verdict = "PASS" if r.passed else "FAIL"
    line = f"{verdict} criterion {k:2d}: {TITLES[k]} [{r.check}] value={r.value!r} tolerance={TOLERANCE[k]}"
    if not r.passed:
        line += f" witness={r.witness!r} {r.detail}"
    with capsys.disabled():
        print("\n" + line)
    assert r.passed, line
