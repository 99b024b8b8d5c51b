from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from conftest import REFERENCE, function_case, rel
from ellipleg.closed_forms import (CardanoAux, _hyp_bracket, _trig_bracket, ferrers_p_m16_m14,
                                   legendre_p_m16_m14, octahedral_2f1, qhat_m14_m12,
                                   qhat_m14_m13, thm71_constant, thm71_constant_forms)
from ellipleg.errors import DomainError
from ellipleg.hypergeom import gauss_2f1, oracle_legendre
from ellipleg.indices import FunctionKind, LegendreIndex

K = FunctionKind
IDX_P = LegendreIndex(-1 / 6, -0.25)


@pytest.mark.parametrize("point,theta", [("0", math.pi / 2), ("cos(pi/3)", math.pi / 3),
                                         ("0.5", math.acos(0.5))])
def test_ferrers_form(point, theta):
    case = function_case("ferrers-p", "-1/6", "-1/4", point)
    assert rel(ferrers_p_m16_m14(theta), case["value"]) <= 1e-10


def test_ferrers_form_small_angle():
    theta = 1e-4
    law = (1 - math.cos(theta)) ** 0.125 / (2 ** 0.125 * math.gamma(1.25))
    assert ferrers_p_m16_m14(theta) / law == pytest.approx(1.0, abs=1e-3)


@pytest.mark.parametrize("xi,point", [(1.0, "cosh(1)"), (3.0, "cosh(3)")])
def test_legendre_form(xi, point):
    case = function_case("legendre-p", "-1/6", "-1/4", point)
    assert rel(legendre_p_m16_m14(xi), case["value"]) <= 1e-10


def test_legendre_form_small_xi():
    xi = 1e-4
    z = math.cosh(xi)
    law = (z - 1) ** 0.125 / (2 ** 0.125 * math.gamma(1.25))
    assert legendre_p_m16_m14(xi) / law == pytest.approx(1.0, abs=1e-3)


@pytest.mark.parametrize("xi,point", [(1.0, "coth(1)"), (2.0, "coth(2)")])
def test_qhat_third_form(xi, point):
    case = function_case("legendre-qhat", "-1/4", "-1/3", point)
    assert rel(qhat_m14_m13(xi), case["value"]) <= 1e-9


def test_constant_forms_agree():
    a, b = thm71_constant_forms()
    assert abs(a - b) <= 1e-12 * abs(a)
    assert thm71_constant() == a


def test_qhat_half_form():
    expected = 4 * math.sqrt(math.pi / 2) * ((2 - math.sqrt(3)) / 3) ** 0.25
    assert qhat_m14_m12(2.0) == pytest.approx(expected, rel=1e-14)
    assert rel(qhat_m14_m12(1.5), function_case("legendre-qhat", "-1/4", "-1/2", "1.5")["value"]) \
        <= 1e-10
    z = 1e6
    assert qhat_m14_m12(z) / (4 * math.sqrt(math.pi / 2) * 2 ** -0.25 * z ** -0.75) \
        == pytest.approx(1.0, abs=1e-3)


def test_domains():
    for bad in (0.0, math.pi, -0.1):
        with pytest.raises(DomainError):
            ferrers_p_m16_m14(bad)
    with pytest.raises(DomainError):
        legendre_p_m16_m14(0.0)
    with pytest.raises(DomainError):
        qhat_m14_m13(-1.0)
    with pytest.raises(DomainError):
        qhat_m14_m12(1.0)
    with pytest.raises(DomainError):
        octahedral_2f1(0.5)


def test_brackets_positive():
    for t in np.linspace(1e-6, math.pi - 1e-6, 1000):
        assert _trig_bracket(t) > 0.0
    for t in np.geomspace(1e-6, 300.0, 1000):
        assert _hyp_bracket(t) > 0.0


@given(st.floats(min_value=1e-3, max_value=math.pi - 1e-3))
def test_trig_bracket_matches_direct_form(theta):
    direct = math.cos(theta / 3) - math.sqrt(math.sin(theta) / (3 * math.sin(theta / 3)))
    assert _trig_bracket(theta) == pytest.approx(direct, rel=1e-8, abs=1e-15)


@given(st.floats(min_value=1e-3, max_value=6.0))
def test_hyp_bracket_matches_direct_form(xi):
    direct = -math.cosh(xi / 3) + math.sqrt(math.sinh(xi) / (3 * math.sinh(xi / 3)))
    assert _hyp_bracket(xi) == pytest.approx(direct, rel=1e-8, abs=1e-15)


@given(st.floats(min_value=0.05, max_value=3.0))
def test_closed_forms_match_oracle(t):
    assert rel(ferrers_p_m16_m14(t), oracle_legendre(K.FERRERS_P, IDX_P, math.cos(t))) <= 1e-9
    assert rel(legendre_p_m16_m14(t), oracle_legendre(K.LEGENDRE_P, IDX_P, math.cosh(t))) <= 1e-9
    q = oracle_legendre(K.LEGENDRE_QHAT, LegendreIndex(-0.25, -1 / 3), 1 / math.tanh(t))
    assert rel(qhat_m14_m13(t), q) <= 1e-9


def test_cardano_aux():
    aux = CardanoAux.of(0.0)
    assert aux.A == 1.0 and aux.A_minus_one == 0.0
    x = -0.3
    A = (math.sqrt(-2 * x) + math.sqrt(-2 * (x - 1))) ** 2 / 2
    assert CardanoAux.of(x).A == pytest.approx(A, rel=1e-15)
    with pytest.raises(DomainError):
        CardanoAux.of(0.1)


@given(st.floats(min_value=-1e6, max_value=0.0))
def test_cardano_at_least_one(x):
    assert CardanoAux.of(x).A >= 1.0


def test_octahedral_values():
    assert octahedral_2f1(0.0) == 1.0
    special = REFERENCE["special"]
    assert octahedral_2f1(-1.0) == pytest.approx(special["hyp_16_56_54_m1"], rel=1e-12)
    assert octahedral_2f1(-20.0) == pytest.approx(special["hyp_16_56_54_m20"], rel=1e-12)


def test_octahedral_grid():
    for x in -np.geomspace(1e-3, 1e3, 200):
        assert octahedral_2f1(x) == pytest.approx(gauss_2f1(1 / 6, 5 / 6, 1.25, x), rel=1e-10)
