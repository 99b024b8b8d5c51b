from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

settings.register_profile("default", deadline=None, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

REFERENCE = json.loads((Path(__file__).parent / "data" / "reference.json").read_text())


def rational(text: str):
    """Exact Fraction for ``p/q`` or integer strings, float otherwise."""
    return float(text) if "." in text else Fraction(text)


def function_case(kind: str, nu: str, mu: str, point: str) -> dict:
    for case in REFERENCE["functions"]:
        if (case["kind"], case["nu"], case["mu"], case["point"]) == (kind, nu, mu, point):
            return case
    raise KeyError((kind, nu, mu, point))


def rel(a: float, b: float) -> float:
    return abs(a - b) / (1.0 + abs(b))


@pytest.fixture(scope="session")
def reference() -> dict:
    return REFERENCE


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[number].line())
    passed = sum(r.passed for r in RESULTS.values())
    terminalreporter.write_line(f"{passed}/{len(RESULTS)} criteria passed")
