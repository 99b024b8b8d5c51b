from __future__ import annotations

import math

import pytest
from hypothesis import given, strategies as st

from conftest import REFERENCE, function_case, rel
from ellipleg.errors import (DomainError, SingularLadderError, StabilityError,
                             UnsupportedIndexError)
from ellipleg.hypergeom import oracle_legendre
from ellipleg.indices import FunctionKind, LegendreIndex
from ellipleg.kernel import (aux_barp, aux_barp_combination, aux_tildep,
                             base_half_degree, eval_classical, evaluate_component,
                             fundamental_qhat_exponential, ladder_degree, ladder_order,
                             reflect_degree)
from ellipleg.numerics import complete_elliptic_k

K = FunctionKind
KERNEL_KINDS = (K.LEGENDRE_P, K.LEGENDRE_QHAT, K.FERRERS_P, K.FERRERS_Q)
K_HALF = REFERENCE["special"]["K_0.5"]


def interior_point(kind: FunctionKind, t: float) -> float:
    """Map t in (0, 1) to an interior argument of ``kind``."""
    return math.cosh(0.05 + 3.0 * t) if kind.is_legendre else math.cos(0.05 + 3.0 * t)


def test_ferrers_base_at_zero():
    comb = base_half_degree(K.FERRERS_P, 0.0)
    assert comb.modulus == pytest.approx(0.5, abs=1e-16)
    assert comb.coef_k.v == pytest.approx(2.0 / math.pi, rel=1e-15)
    assert comb.coef_e.v == 0.0
    assert comb.value == pytest.approx(2.0 / math.pi * K_HALF, rel=1e-14)
    assert base_half_degree(K.FERRERS_Q, 0.0).value == pytest.approx(K_HALF, rel=1e-14)


def test_legendre_base_near_one():
    assert base_half_degree(K.LEGENDRE_P, 1.0 + 1e-12).value == pytest.approx(1.0, abs=1e-6)


def test_base_rejects_outside():
    with pytest.raises(DomainError):
        base_half_degree(K.FERRERS_P, 1.5)
    with pytest.raises(DomainError):
        base_half_degree(K.LEGENDRE_P, 0.5)


def test_exponential_form():
    z = math.cosh(1.0)
    expected = function_case("legendre-qhat", "-1/2", "0", "cosh(1)")["value"]
    assert fundamental_qhat_exponential(z) == pytest.approx(expected, rel=1e-13)
    assert expected == pytest.approx(2 * math.exp(-0.5) * complete_elliptic_k(math.exp(-2.0)),
                                     rel=1e-13)


def test_degree_ladder_examples():
    x = math.cos(1.0)
    base = base_half_degree(K.FERRERS_P, x)
    out, idx = ladder_degree(K.FERRERS_P, base, LegendreIndex(-0.5, 0.0), 1, x)
    assert idx == LegendreIndex(0.5, 0.0)
    assert rel(out.value, function_case("ferrers-p", "1/2", "0", "cos(1)")["value"]) <= 1e-9
    base = base_half_degree(K.LEGENDRE_QHAT, 2.0)
    out, idx = ladder_degree(K.LEGENDRE_QHAT, base, LegendreIndex(-0.5, 0.0), -1, 2.0)
    assert idx == LegendreIndex(-1.5, 0.0)
    assert rel(out.value, function_case("legendre-qhat", "-3/2", "0", "2")["value"]) <= 1e-8


def test_singular_order_ladder():
    # lowering from order 1 at degree 0 divides by (1/2)^2 - (1/2)^2
    base = base_half_degree(K.FERRERS_P, 0.3)
    with pytest.raises(SingularLadderError):
        ladder_order(K.FERRERS_P, base, LegendreIndex(0.0, 1.0), -1, 0.3)


def test_eval_classical_rejects():
    with pytest.raises(UnsupportedIndexError):
        eval_classical(K.FERRERS_P, LegendreIndex(-0.25, 0.0), 0.3)
    with pytest.raises(StabilityError):
        eval_classical(K.FERRERS_P, LegendreIndex(20.5, 0.0), 0.3)


@pytest.mark.parametrize("kind", KERNEL_KINDS, ids=lambda k: k.value)
@pytest.mark.parametrize("nu", [-0.5, 0.5, 1.5, 2.5])
@pytest.mark.parametrize("m", [-2, -1, 0, 1, 2])
def test_oracle_equivalence(kind, nu, m):
    idx = LegendreIndex(nu, float(m))
    for i in range(20):
        x = interior_point(kind, (i + 0.5) / 20)
        comb = eval_classical(kind, idx, x)
        ref = oracle_legendre(kind, idx, x)
        assert abs(comb.value - ref) <= 1e-8 * (1 + abs(ref))


def test_derivative_formula_integer_case():
    # Ferrers P_3^2(x) = (1 - x^2) P_3''(x) with P_3 = (5x^3 - 3x)/2
    for i in range(10):
        x = -0.9 + 1.8 * (i + 0.5) / 10
        direct = (1 - x * x) * 15.0 * x
        val = oracle_legendre(K.FERRERS_P, LegendreIndex(3.0, 2.0), x)
        assert abs(abs(val) - abs(direct)) <= 1e-9 * (1 + abs(direct))


@given(st.sampled_from(KERNEL_KINDS), st.integers(-2, 2), st.integers(-2, 2),
       st.floats(min_value=0.05, max_value=0.95))
def test_dual_consistency(kind, n, m, t):
    idx = LegendreIndex(n - 0.5, float(m))
    h = 1e-6
    if kind.is_legendre:
        s = 0.1 + 2.5 * t
        f = lambda u: eval_classical(kind, idx, math.cosh(u)).value
    else:
        s = 0.2 + 2.7 * t
        f = lambda u: eval_classical(kind, idx, math.cos(u)).value
    comb = eval_classical(kind, idx, math.cosh(s) if kind.is_legendre else math.cos(s))
    fd = (f(s + h) - f(s - h)) / (2 * h)
    scale = max(abs(comb.derivative), abs(comb.value), 1e-3)
    assert abs(comb.derivative - fd) <= 1e-5 * scale


@pytest.mark.parametrize("n", [-1, 0, 1])
@pytest.mark.parametrize("kind", KERNEL_KINDS, ids=lambda k: k.value)
def test_ladder_roundtrip(kind, n):
    x = interior_point(kind, 0.4)
    idx = LegendreIndex(n - 0.5, 1.0)
    start = eval_classical(kind, idx, x)
    up, i1 = ladder_degree(kind, start, idx, 1, x)
    back, i2 = ladder_degree(kind, up, i1, -1, x)
    assert i2 == idx
    assert rel(back.value, start.value) <= 1e-11
    up, i1 = ladder_order(kind, start, idx, 1, x)
    back, i2 = ladder_order(kind, up, i1, -1, x)
    assert i2 == idx
    assert rel(back.value, start.value) <= 1e-11


def test_aux_barp_routes_agree():
    idx = LegendreIndex(-0.5, 0.0)
    a, b = aux_barp(idx, 0.2), aux_barp_combination(idx, 0.2)
    assert rel(a, b) <= 1e-9
    assert rel(a, oracle_legendre(K.FERRERS_P, idx, -0.2)) <= 1e-12
    case = function_case("ferrers-p", "-1/4", "0", "-0.5")
    assert rel(aux_barp(LegendreIndex(-0.25, 0.0), 0.5), case["value"]) <= 1e-10


def test_aux_tildep_composition():
    idx = LegendreIndex(-0.25, 0.0)
    p = function_case("legendre-qhat", "-1/4", "0", "2")["value"]
    s = -0.25 * math.pi
    pp = oracle_legendre(K.LEGENDRE_P, idx, 2.0)
    expected = math.cos(s) * pp - (2 / math.pi) * math.sin(s) * p
    assert rel(aux_tildep(idx, 2.0), expected) <= 1e-12


def test_reflect_degree():
    idx = LegendreIndex(-0.5, 0.0)
    assert rel(reflect_degree(K.LEGENDRE_QHAT, idx, 2.0),
               oracle_legendre(K.LEGENDRE_QHAT, idx, 2.0)) <= 1e-12
    val = reflect_degree(K.LEGENDRE_QHAT, LegendreIndex(-0.25, 0.0), 2.0)
    assert rel(val, function_case("legendre-qhat", "-3/4", "0", "2")["value"]) <= 1e-9
    val = reflect_degree(K.FERRERS_Q, LegendreIndex(-1 / 6, 0.0), 0.3)
    assert rel(val, function_case("ferrers-q", "-5/6", "0", "0.3")["value"]) <= 1e-8


def test_evaluate_component_dispatch():
    idx = LegendreIndex(1.5, 2.0)
    assert rel(evaluate_component(K.LEGENDRE_P, idx, 2.5),
               function_case("legendre-p", "3/2", "2", "2.5")["value"]) <= 1e-12
    assert rel(evaluate_component(K.FERRERS_Q, LegendreIndex(2.5, -1.0), 0.4),
               function_case("ferrers-q", "5/2", "-1", "0.4")["value"]) <= 1e-12


def test_combination_as_dict():
    d = eval_classical(K.LEGENDRE_P, LegendreIndex(0.5, 1.0), 1.7).as_dict()
    assert set(d) >= {"modulus", "parameter", "coef_k", "coef_e", "coef_kc", "coef_ec"}
    assert d["parameter"] == "xi"


@pytest.mark.parametrize("kind", KERNEL_KINDS, ids=lambda k: k.value)
def test_ode_residual_of_raw_combinations(kind):
    # fourth-order stencil with a step scaled to the distance from the singular end;
    # a three-point stencil at step 1e-4 has a rounding floor near 1e-5 on its own
    from ellipleg.checks import ode_residual

    def raw(k, i, x):
        return eval_classical(k, i, x).value

    top = 4.0 if kind.is_legendre else 2.9
    for n in range(-2, 3):
        for m in range(-2, 3):
            idx = LegendreIndex(n - 0.5, float(m))
            for i in range(25):
                t = 0.1 + (top - 0.1) * i / 24
                assert ode_residual(kind, idx, t, fn=raw) <= 1e-5
