from __future__ import annotations

import math

import pytest
from hypothesis import given, strategies as st

from conftest import REFERENCE
from ellipleg.errors import DomainError, PoleError
from ellipleg.numerics import (Argument, DualScalar, complete_elliptic_e, complete_elliptic_k,
                               dcosh, dexp, dlog, dsin, dsqrt, elliptic_derivatives, gamma_fn,
                               offsets, rgamma)

SPECIAL = REFERENCE["special"]


def test_gamma_basic_values():
    assert gamma_fn(1.0) == pytest.approx(1.0, rel=1e-15)
    assert gamma_fn(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-14)


def test_gamma_quarter_against_quadrature():
    assert gamma_fn(1.25) == pytest.approx(SPECIAL["gamma_5_4"], rel=1e-12)


@pytest.mark.parametrize("x", [0.0, -1.0, -7.0, -3.0 + 1e-13])
def test_gamma_poles(x):
    with pytest.raises(PoleError):
        gamma_fn(x)


def test_rgamma_vanishes_at_poles():
    assert rgamma(-3.0) == 0.0
    assert rgamma(4.0) == pytest.approx(1.0 / 6.0, rel=1e-15)


@given(st.floats(min_value=-40.0, max_value=40.0).filter(lambda x: abs(x - round(x)) > 1e-6))
def test_gamma_recurrence(x):
    assert gamma_fn(x + 1.0) == pytest.approx(x * gamma_fn(x), rel=1e-12)


def test_elliptic_endpoints():
    assert complete_elliptic_k(0.0) == pytest.approx(math.pi / 2, rel=1e-15)
    assert complete_elliptic_e(0.0) == pytest.approx(math.pi / 2, rel=1e-15)
    assert complete_elliptic_e(1.0) == 1.0
    with pytest.raises(DomainError):
        complete_elliptic_k(1.0)
    with pytest.raises(DomainError):
        complete_elliptic_k(-0.1)
    with pytest.raises(DomainError):
        complete_elliptic_e(1.5)


def test_elliptic_against_quadrature():
    assert complete_elliptic_k(0.5) == pytest.approx(SPECIAL["K_0.5"], rel=1e-12)
    assert complete_elliptic_e(0.5) == pytest.approx(SPECIAL["E_0.5"], rel=1e-12)


def test_elliptic_derivatives():
    dk, de = elliptic_derivatives(0.5)
    assert dk == pytest.approx(SPECIAL["dK_0.5"], rel=1e-12)
    assert de == pytest.approx(SPECIAL["dE_0.5"], rel=1e-12)
    h = 1e-6
    fd = (complete_elliptic_k(0.5 + h) - complete_elliptic_k(0.5 - h)) / (2 * h)
    assert dk == pytest.approx(fd, abs=1e-7)
    k, e = complete_elliptic_k(0.25), complete_elliptic_e(0.25)
    assert elliptic_derivatives(0.25)[1] == pytest.approx((e - k) / 0.5, rel=1e-14)
    assert elliptic_derivatives(1e-8)[1] == pytest.approx(-math.pi / 8, abs=1e-6)
    for m in (0.0, 1.0):
        with pytest.raises(DomainError):
            elliptic_derivatives(m)


@given(st.floats(min_value=1e-6, max_value=1 - 1e-6))
def test_legendre_relation(m):
    # K E' + E K' - K K' = pi / 2
    k, e = complete_elliptic_k(m), complete_elliptic_e(m)
    kc, ec = complete_elliptic_k(1 - m), complete_elliptic_e(1 - m)
    assert k * ec + e * kc - k * kc == pytest.approx(math.pi / 2, rel=1e-12)


@given(st.floats(min_value=0.1, max_value=3.0), st.floats(min_value=-2.0, max_value=2.0))
def test_dual_rules(a, b):
    x = DualScalar.variable(a)
    f = dsin(x) * dexp(x) / dsqrt(x) + dlog(x) - dcosh(x) ** 2 + b * x
    h = 1e-6

    def g(t):
        return math.sin(t) * math.exp(t) / math.sqrt(t) + math.log(t) - math.cosh(t) ** 2 + b * t

    assert f.v == pytest.approx(g(a), rel=1e-14, abs=1e-14)
    assert f.d == pytest.approx((g(a + h) - g(a - h)) / (2 * h), rel=1e-6, abs=1e-6)


def test_argument_offsets():
    z = Argument(1.0 + 1e-12, 1e-12, 2.0 + 1e-12)
    lo, hi = offsets(z)
    assert lo == 1e-12
    assert hi == 2.0 + 1e-12
    assert offsets(-z)[1] == -1e-12
    assert offsets(0.25) == (-0.75, 1.25)
