"""Acceptance criteria at their stated tolerances.

Each criterion runs as its own test and prints one ``[PASS]``/``[FAIL]``
line; the collected lines are repeated in the pytest terminal summary.
Run ``python tests/test_acceptance.py`` for the lines alone.
"""

from __future__ import annotations

import time

import pytest

from ellipleg.checks import CRITERIA, CriterionResult

RESULTS: dict[int, CriterionResult] = {}


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda fn: fn.__name__)
def test_criterion(criterion, capsys):
    start = time.perf_counter()
    result = criterion()
    if not result.seconds:
        result = CriterionResult(result.number, result.title, result.passed, result.worst,
                                 result.tolerance, result.detail, time.perf_counter() - start)
    RESULTS[result.number] = result
    with capsys.disabled():
        print("\n" + result.line())
    assert result.passed, result.line()


def test_all_criteria_present():
    assert len(CRITERIA) == 11
    assert [fn.__name__ for fn in CRITERIA] == [f"criterion_{i}" for i in range(1, 12)]


if __name__ == "__main__":
    from ellipleg.checks import run_all

    results = run_all()
    for res in results:
        print(res.line())
    raise SystemExit(0 if all(r.passed for r in results) else 1)
