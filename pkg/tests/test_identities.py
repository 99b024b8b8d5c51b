from __future__ import annotations

import math

import pytest
from hypothesis import given, strategies as st

from conftest import function_case, rel
from ellipleg.curves import CurveId, implicit_residual, implicit_scale
from ellipleg.errors import DegenerateParameterError, DomainError, EllipLegError
from ellipleg.hypergeom import oracle_legendre
from ellipleg.identities import (catalogue, curve_consistency, get_record, identity_point,
                                 identity_sides, p_grid, w4_composition)
from ellipleg.indices import FunctionKind, LegendreIndex

LABELS = [rec.label for rec in catalogue()]


def test_catalogue_size_and_labels():
    assert len(LABELS) == 34
    assert len(set(LABELS)) == 34
    families = {}
    for label in LABELS:
        families.setdefault(label.split("(")[0], []).append(label)
    assert {k: len(v) for k, v in families.items()} == {
        "I4": 4, "I4'": 4, "I6": 4, "I6'": 4, "I3": 4, "I3'": 4, "M": 4, "W2": 2, "W4": 2, "X": 2}


def test_catalogue_is_stable():
    assert [r.label for r in catalogue()] == LABELS
    with pytest.raises(EllipLegError):
        get_record("I5(i)")


def test_i4_record():
    rec = get_record("I4(i)")
    assert rec.curve is CurveId.C4
    for a in (0.0, 0.7, -1.3):
        assert rec.constant({"alpha": a}) == pytest.approx(2.0 ** a)
        assert rec.right.index({"alpha": a}) == pytest.approx((a - 0.5, -a))


def test_w2_record():
    rec = get_record("W2(i)")
    prm = {"alpha": 0.3, "beta": 0.2}
    (lkind, lw), = rec.left.terms
    (rkind, rw), = rec.right.terms
    assert lkind is FunctionKind.LEGENDRE_P and lw(prm) == pytest.approx(math.sqrt(2.0))
    assert rkind is FunctionKind.LEGENDRE_QHAT
    expected = (2 / math.pi) * math.sqrt(math.pi) / math.gamma(0.2 - 0.3 + 0.5)
    assert rec.constant(prm) * rw(prm) == pytest.approx(expected, rel=1e-14)


def test_i6_i6prime_index_maps():
    for a in (0.0, 0.4, 2.0):
        assert get_record("I6(ii)").right.index({"alpha": a}) == pytest.approx((2 * a - 0.5, -a))
        assert get_record("I6'(ii)").right.index({"alpha": a}) == pytest.approx((a - 0.5, -2 * a))


def test_zero_constraint_rejects_alpha():
    with pytest.raises(DomainError):
        identity_sides("I3(i)", {"alpha": 0.2}, 1.2)


def test_outside_interval():
    with pytest.raises(DomainError):
        identity_sides("I4(ii)", {"alpha": 0.0}, 1.5)


def test_i4_example():
    p = math.cosh(0.5)
    lhs, rhs, gap = identity_sides("I4(i)", {"alpha": 0.0}, p)
    assert rel(lhs, function_case("legendre-p", "-1/4", "0", "cosh(1)")["value"]) <= 1e-13
    direct = math.sqrt(1 / math.cosh(0.5)) * oracle_legendre(
        FunctionKind.FERRERS_P, LegendreIndex(-0.5, 0.0), 1 / math.cosh(0.5))
    assert rel(rhs, direct) <= 1e-12
    assert gap <= 1e-9


@pytest.mark.parametrize("alpha", [0.0, 0.3, 1.7])
def test_m_basepoint(alpha):
    lhs, rhs, gap = identity_sides("M(i)", {"alpha": alpha}, 1 + 1e-6)
    assert gap <= 1e-6
    # order -2 alpha: both sides tend to 1 only at alpha = 0, else vanish like (z-1)^alpha
    L, _ = identity_point("M(i)", 1 + 1e-6)
    law = (L - 1) ** alpha / (2 ** alpha * math.gamma(2 * alpha + 1))
    assert lhs / law == pytest.approx(1.0, abs=1e-3)


def test_whipple_point():
    p = 1 + math.sqrt(2.0)
    L, R = identity_point("W2(i)", p)
    assert L == pytest.approx(math.sqrt(2.0)) and R == pytest.approx(math.sqrt(2.0))
    assert identity_sides("W2(i)", {"alpha": 0.5, "beta": 0.5}, p)[2] <= 1e-9


def test_degenerate_guard_names_olver():
    with pytest.raises(DegenerateParameterError, match="Olver"):
        identity_sides("M(i-bar)", {"alpha": 0.5}, 2.0)
    with pytest.raises(DegenerateParameterError, match="Olver"):
        identity_sides("M(i-bar)", {"alpha": 0.5 + 1e-10}, 2.0)
    with pytest.raises(DegenerateParameterError):
        identity_sides("W2(i)", {"alpha": 1.5, "beta": 0.0}, 2.0)


@given(st.floats(min_value=-2.6, max_value=2.6).filter(
    lambda a: abs(a - round(a - 0.5) - 0.5) > 1e-6))
def test_m_ibar_away_from_degeneracy(a):
    assert identity_sides("M(i-bar)", {"alpha": a}, 2.5)[2] <= 1e-9


@pytest.mark.parametrize("label", LABELS)
def test_record_residual_and_consistency(label):
    rec = get_record(label)
    prm = {"none": {}, "zero": {"alpha": 0.0}, "free": {"alpha": 0.2},
           "two": {"alpha": 0.2, "beta": -0.2}}[rec.alpha_constraint]
    grid = p_grid(label, 12)
    lo, hi = rec.p_interval
    assert all(lo < p < hi for p in grid)
    for p in grid:
        assert identity_sides(label, prm, p)[2] <= 1e-9
        res = curve_consistency(label, p)
        if rec.curve is CurveId.X:
            assert res is None
        else:
            L, R = identity_point(label, p)
            assert abs(res) <= 1e-10 * max(1.0, implicit_scale(rec.curve, L, R))
            assert res == implicit_residual(rec.curve, L, R)


def test_p_grid_shapes():
    g = p_grid("I4(i)", 50)
    assert len(g) == 50 and g[0] == pytest.approx(1.001) and g[-1] == pytest.approx(101.0)
    g = p_grid("I6(i)", 5)
    assert g[0] == pytest.approx(1.001) and g[-1] == pytest.approx(math.sqrt(3) - 1e-3)
    with pytest.raises(ValueError):
        p_grid("I6(i)", 1)


@pytest.mark.parametrize("alpha", [0.0, 0.2, 1.0, 2.0])
def test_w4_composition(alpha):
    for p in (1.1, 1.5, 3.0, 10.0, 30.0):
        lhs, composed, gap = w4_composition(alpha, p)
        assert gap <= 1e-9


def test_w4_composition_degenerate():
    with pytest.raises(DegenerateParameterError):
        w4_composition(0.5, 2.0)
