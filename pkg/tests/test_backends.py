from __future__ import annotations

import math
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from ellipleg import _kernels, _purekernels

speedups = pytest.importorskip("ellipleg._speedups")


def test_backend_selection():
    assert _kernels.BACKEND in ("compiled", "python")
    if _kernels.BACKEND == "compiled":
        assert _kernels.series_2f1 is speedups.series_2f1


@given(st.floats(min_value=-2.0, max_value=2.0), st.floats(min_value=-2.0, max_value=2.0),
       st.floats(min_value=0.3, max_value=3.0), st.floats(min_value=-0.9, max_value=0.9))
def test_series_backends_agree(a, b, c, x):
    args = (a, b, c, x, 1e-17, 3, 5000)
    s1, n1, ok1 = _purekernels.series_2f1(*args)
    s2, n2, ok2 = speedups.series_2f1(*args)
    assert (n1, ok1) == (n2, ok2)
    assert s1 == pytest.approx(s2, rel=1e-13, abs=1e-300)


@given(st.floats(min_value=0.0, max_value=1.0 - 1e-12))
def test_agm_backends_agree(m):
    r1 = _purekernels.agm_ke(m, 1.0 - m, 1e-16, 64)
    r2 = speedups.agm_ke(m, 1.0 - m, 1e-16, 64)
    assert r1[2:] == r2[2:]
    assert r1[0] == pytest.approx(r2[0], rel=1e-14)
    assert r1[1] == pytest.approx(r2[1], rel=1e-14)


def test_log_series_backends_agree():
    args = (0.5, 0.25, 2, 0.3, math.log(0.3), -0.5772156649015329, 0.9227843350984671,
            -1.9635100260214235, -4.2274535333762655, 1e-17, 3, 5000)
    r1 = _purekernels.log_series_2f1(*args)
    r2 = speedups.log_series_2f1(*args)
    assert r1[0] == pytest.approx(r2[0], rel=1e-13)
    assert r1[1:] == r2[1:]


def test_pure_fallback_selected_at_import():
    code = (
        "import sys; sys.modules['ellipleg._speedups'] = None\n"
        "import ellipleg\n"
        "from fractions import Fraction as F\n"
        "idx = ellipleg.LegendreIndex.of(F(-1, 4), F(0))\n"
        "print(ellipleg.BACKEND, repr(ellipleg.evaluate(ellipleg.FunctionKind.LEGENDRE_P, idx, 1.5)))\n"
    )
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, check=True)
    backend, value = out.stdout.split()
    assert backend == "python"
    assert float(value) == pytest.approx(0.9586069193288396, rel=1e-14)
