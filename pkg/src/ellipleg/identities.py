"""Executable catalogue of the Legendre/Ferrers transformation identities.

Every record states ``left(L(p)) = constant * A(p) * right(R(p))`` on one
curve row.  Each side is a weighted sum of function kinds at a common
index; the indices and weights depend on the free parameters.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Mapping, Optional

from .curves import (BRANCH_INTERVALS, CurveId, curve_arguments, curve_point,
                     implicit_residual, solve_parameter)
from .errors import DegenerateParameterError, DomainError, EllipLegError
from .hypergeom import oracle_legendre
from .indices import FunctionKind, LegendreIndex
from .kernel import evaluate_component
from .numerics import gamma_fn, is_nonpositive_integer

__all__ = [
    "Side",
    "IdentityRecord",
    "catalogue",
    "get_record",
    "identity_sides",
    "p_grid",
    "identity_point",
    "curve_consistency",
    "w4_composition",
    "DEGENERACY_TOL",
    "X_CONSTANT",
]

DEGENERACY_TOL = 1e-9
Params = Mapping[str, float]

FK = FunctionKind
P, QH = FK.LEGENDRE_P, FK.LEGENDRE_QHAT
FP, FQ, FPB = FK.FERRERS_P, FK.FERRERS_Q, FK.FERRERS_PBAR

X_CONSTANT = math.gamma(1.2) / (math.sqrt(2.0) * math.gamma(1.1))


@dataclass(frozen=True)
class Side:
    """One side of an identity: ``sum_k w_k(params) F_k`` at a shared index.

    Attributes
    ----------
    terms : tuple of (FunctionKind, weight function)
    index : callable
        ``params -> (nu, mu)``.
    text : str
        Human-readable rendering.
    """

    terms: tuple[tuple[FunctionKind, Callable[[Params], float]], ...]
    index: Callable[[Params], tuple[float, float]]
    text: str

    @property
    def kind(self) -> FunctionKind:
        """Kind of the leading term."""
        return self.terms[0][0]

    def idx(self, params: Params) -> LegendreIndex:
        nu, mu = self.index(params)
        return LegendreIndex.of(nu, mu)

    def evaluate(self, params: Params, point: float,
                 evaluator: Callable[[FunctionKind, LegendreIndex, float], float]) -> float:
        idx = self.idx(params)
        total = 0.0
        for kind, weight in self.terms:
            w = weight(params)
            if w != 0.0:
                total += w * evaluator(kind, idx, point)
        return total


@dataclass(frozen=True)
class IdentityRecord:
    """One identity of the catalogue.

    Attributes
    ----------
    label : str
        For example ``"I4(i)"``, ``"I6'(ii-bar)"``, ``"W2(i)"``.
    curve : CurveId
    branch : str
        Curve row key, ``"i"`` or ``"ii"``.
    left, right : Side
    constant : callable
        Multiplier of ``A(p) * right`` as a function of the parameters.
    constant_text : str
    alpha_constraint : str
        ``"free"`` (real alpha), ``"zero"`` (alpha = 0 only), ``"two"``
        (alpha and beta) or ``"none"`` (no parameter).
    guards : tuple of (description, callable)
        Quantities that must stay away from zero (``"zero"`` guards) or
        from gamma poles (``"pole"`` guards); see :func:`identity_sides`.
    """

    label: str
    curve: CurveId
    branch: str
    left: Side
    right: Side
    constant: Callable[[Params], float]
    constant_text: str
    alpha_constraint: str
    guards: tuple[tuple[str, str, Callable[[Params], float]], ...] = ()

    @property
    def p_interval(self) -> tuple[float, float]:
        return BRANCH_INTERVALS[(self.curve, self.branch)]

    def default_params(self) -> dict[str, float]:
        if self.alpha_constraint == "two":
            return {"alpha": 0.0, "beta": 0.0}
        if self.alpha_constraint == "none":
            return {}
        return {"alpha": 0.0}


def _const(c: float) -> Callable[[Params], float]:
    return lambda prm: c


def _a(prm: Params) -> float:
    return float(prm.get("alpha", 0.0))


def _b(prm: Params) -> float:
    return float(prm.get("beta", 0.0))


_OLVER_HINT = ("the identity holds only in a limiting sense here; pass to the limit "
               "in Olver's normalization Q = Qhat / Gamma(nu + mu + 1)")


def _i_family(r: int, curve: CurveId, right_index, const, const_text: str,
              constraint: str) -> list[IdentityRecord]:
    tag = f"I{r}"
    csc = 1.0 / math.sin(math.pi / r)
    left_index = lambda prm: (Fraction(-1, r), -_a(prm))  # noqa: E731
    nu0 = -1.0 / r

    def ptilde_star_terms():
        return ((P, lambda prm: csc * math.cos(nu0 * math.pi)),
                (QH, lambda prm: -csc * (2.0 / math.pi) * math.sin((nu0 - _a(prm)) * math.pi)))

    def rec(suffix, branch, left, right, extra_guards=()):
        return IdentityRecord(f"{tag}({suffix})", curve, branch, left, right, const,
                              const_text, constraint, extra_guards)

    return [
        rec("i", "i", Side(((P, _const(1.0)),), left_index, f"P_{{-1/{r}}}^{{-a}}(L)"),
          Side(((FP, _const(1.0)),), right_index, "FerrersP(R)")),
        rec("i-bar", "i",
            Side(ptilde_star_terms(), left_index,
                 f"csc(pi/{r})[cos(nu pi) P - (2/pi) sin((nu+mu) pi) Qhat]_{{-1/{r}}}^{{-a}}(L)"),
            Side(((FQ, _const(2.0 / math.pi)),), right_index, "(2/pi) FerrersQ(R)")),
        rec("ii", "ii", Side(((FP, _const(1.0)),), left_index, f"FerrersP_{{-1/{r}}}^{{-a}}(L)"),
            Side(((P, _const(1.0)),), right_index, "P(R)")),
        rec("ii-bar", "ii", Side(((FPB, _const(csc)),), left_index,
                                  f"csc(pi/{r}) FerrersPbar_{{-1/{r}}}^{{-a}}(L)"),
            Side(((QH, _const(2.0 / math.pi)),), right_index, "(2/pi) Qhat(R)")),
    ]


def _iprime_family(r: int, curve: CurveId, right_index, const, const_text: str,
                   constraint: str, qhat_extra=None, guards=()) -> list[IdentityRecord]:
    tag = f"I{r}'"
    half_csc = 0.5 / math.sin(math.pi / r)
    left_index = lambda prm: (Fraction(-1, r), -_a(prm))  # noqa: E731
    extra = qhat_extra or _const(1.0)
    extra_guards = ()
    if qhat_extra is not None:
        extra_guards = (("cos(alpha pi)", "zero", lambda prm: math.cos(_a(prm) * math.pi)),)

    def rec(suffix, branch, left, right, g=()):
        return IdentityRecord(f"{tag}({suffix})", curve, branch, left, right, const,
                              const_text, constraint, tuple(guards) + tuple(g))

    return [
        rec("i", "i", Side(((FP, _const(1.0)),), left_index, f"FerrersP_{{-1/{r}}}^{{-a}}(L)"),
            Side(((FP, _const(1.0)),), right_index, "FerrersP(R)")),
        rec("i-bar", "i", Side(((FPB, _const(half_csc)),), left_index,
                                f"(1/2)csc(pi/{r}) FerrersPbar_{{-1/{r}}}^{{-a}}(L)"),
            Side(((FPB, _const(1.0)),), right_index, "FerrersPbar(R)")),
        rec("ii", "ii", Side(((FP, _const(1.0)),), left_index, f"FerrersP_{{-1/{r}}}^{{-a}}(L)"),
            Side(((P, _const(1.0)),), right_index, "P(R)")),
        rec("ii-bar", "ii", Side(((FPB, _const(half_csc)),), left_index,
                                  f"(1/2)csc(pi/{r}) FerrersPbar_{{-1/{r}}}^{{-a}}(L)"),
            Side(((QH, lambda prm: 2.0 / math.pi * extra(prm)),), right_index,
                 "(2/pi) Qhat(R)" if qhat_extra is None else "(2/pi) cos(alpha pi) Qhat(R)"),
            extra_guards),
    ]


def _build() -> tuple[IdentityRecord, ...]:
    half = Fraction(1, 2)
    recs: list[IdentityRecord] = []
    recs += _i_family(4, CurveId.C4, lambda prm: (_a(prm) - half, -_a(prm)),
                      lambda prm: 2.0 ** _a(prm), "2^alpha", "free")
    recs += _iprime_family(4, CurveId.C4p, lambda prm: (-half, 0), _const(1.0), "1", "zero")
    recs += _i_family(6, CurveId.C6, lambda prm: (2 * _a(prm) - half, -_a(prm)),
                      lambda prm: 3.0 ** (1.5 * _a(prm)), "3^(3 alpha/2)", "free")
    recs += _iprime_family(
        6, CurveId.C6p, lambda prm: (_a(prm) - half, -2 * _a(prm)),
        lambda prm: 3.0 ** (1.5 * _a(prm)) * gamma_fn(_a(prm) + 0.5) / math.sqrt(math.pi),
        "3^(3 alpha/2) Gamma(alpha+1/2)/sqrt(pi)", "free",
        qhat_extra=lambda prm: math.cos(_a(prm) * math.pi),
        guards=(("alpha + 1/2", "pole", lambda prm: _a(prm) + 0.5),))
    recs += _i_family(3, CurveId.C3, lambda prm: (-half, 0), _const(1.0), "1", "zero")
    recs += _iprime_family(3, CurveId.C3p, lambda prm: (-half, 0), _const(1.0), "1", "zero")

    m_index = lambda prm: (_a(prm) - half, -2 * _a(prm))  # noqa: E731
    cos_a = lambda prm: math.cos(_a(prm) * math.pi)  # noqa: E731
    m_guard = (("cos(alpha pi)", "zero", cos_a),)
    one = _const(1.0)
    for suffix, branch, left, right, g in (
        ("i", "i", Side(((P, one),), m_index, "P_{a-1/2}^{-2a}(L)"),
         Side(((FP, one),), m_index, "FerrersP_{a-1/2}^{-2a}(R)"), ()),
        ("i-bar", "i", Side(((QH, lambda prm: 2.0 / math.pi * cos_a(prm)),), m_index,
                            "(2/pi) cos(alpha pi) Qhat_{a-1/2}^{-2a}(L)"),
         Side(((FPB, one),), m_index, "FerrersPbar_{a-1/2}^{-2a}(R)"), m_guard),
        ("ii", "ii", Side(((FP, one),), m_index, "FerrersP_{a-1/2}^{-2a}(L)"),
         Side(((P, one),), m_index, "P_{a-1/2}^{-2a}(R)"), ()),
        ("ii-bar", "ii", Side(((FPB, one),), m_index, "FerrersPbar_{a-1/2}^{-2a}(L)"),
         Side(((QH, lambda prm: 2.0 / math.pi * cos_a(prm)),), m_index,
              "(2/pi) cos(alpha pi) Qhat_{a-1/2}^{-2a}(R)"), m_guard),
    ):
        recs.append(IdentityRecord(f"M({suffix})", CurveId.M, branch, left, right,
                                   one, "1", "free", g))

    w2_const = lambda prm: math.sqrt(math.pi) / gamma_fn(_b(prm) - _a(prm) + 0.5)  # noqa: E731
    w2_guard = (("beta - alpha + 1/2", "pole", lambda prm: _b(prm) - _a(prm) + 0.5),)
    lidx = lambda prm: (_a(prm) - half, -_b(prm))  # noqa: E731
    ridx = lambda prm: (_b(prm) - half, -_a(prm))  # noqa: E731
    sq2 = _const(math.sqrt(2.0))
    recs.append(IdentityRecord(
        "W2(i)", CurveId.W2, "i",
        Side(((P, sq2),), lidx, "sqrt(2) P_{a-1/2}^{-b}(L)"),
        Side(((QH, _const(2.0 / math.pi)),), ridx, "(2/pi) Qhat_{b-1/2}^{-a}(R)"),
        w2_const, "sqrt(pi)/Gamma(beta-alpha+1/2)", "two", w2_guard))
    cos_ba = lambda prm: math.cos((_b(prm) - _a(prm)) * math.pi)  # noqa: E731
    recs.append(IdentityRecord(
        "W2(i-bar)", CurveId.W2, "i",
        Side(((QH, lambda prm: 2.0 / math.pi * cos_ba(prm)),), lidx,
             "(2/pi) cos((beta-alpha) pi) Qhat_{a-1/2}^{-b}(L)"),
        Side(((P, sq2),), ridx, "sqrt(2) P_{b-1/2}^{-a}(R)"),
        w2_const, "sqrt(pi)/Gamma(beta-alpha+1/2)", "two",
        w2_guard + (("cos((beta-alpha) pi)", "zero", cos_ba),)))

    w4_index = lambda prm: (2 * _a(prm) - half, -_a(prm))  # noqa: E731
    recs.append(IdentityRecord(
        "W4(i)", CurveId.W4, "i",
        Side(((P, _const(2.0)),), w4_index, "2 P_{2a-1/2}^{-a}(L)"),
        Side(((QH, _const(2.0 / math.pi)),), w4_index, "(2/pi) Qhat_{2a-1/2}^{-a}(R)"),
        one, "1", "free"))
    recs.append(IdentityRecord(
        "W4(i-bar)", CurveId.W4, "i",
        Side(((QH, _const(2.0 / math.pi)),), w4_index, "(2/pi) Qhat_{2a-1/2}^{-a}(L)"),
        Side(((P, _const(2.0)),), w4_index, "2 P_{2a-1/2}^{-a}(R)"),
        one, "1", "free"))

    xl = lambda prm: (Fraction(-1, 4), Fraction(-1, 10))  # noqa: E731
    xr = lambda prm: (Fraction(-1, 4), Fraction(-1, 5))  # noqa: E731
    xc = _const(X_CONSTANT)
    xtext = "Gamma(6/5)/(sqrt(2) Gamma(11/10))"
    recs.append(IdentityRecord("X(i)", CurveId.X, "i",
                               Side(((FP, one),), xl, "FerrersP_{-1/4}^{-1/10}(L)"),
                               Side(((FP, one),), xr, "FerrersP_{-1/4}^{-1/5}(R)"),
                               xc, xtext, "none"))
    recs.append(IdentityRecord("X(ii)", CurveId.X, "ii",
                               Side(((FP, one),), xl, "FerrersP_{-1/4}^{-1/10}(L)"),
                               Side(((P, one),), xr, "P_{-1/4}^{-1/5}(R)"),
                               xc, xtext, "none"))
    return tuple(recs)


_CATALOGUE = _build()
_BY_LABEL = {rec.label: rec for rec in _CATALOGUE}


def catalogue() -> list[IdentityRecord]:
    """All identity records, in a fixed order with unique labels."""
    return list(_CATALOGUE)


def get_record(label: str) -> IdentityRecord:
    try:
        return _BY_LABEL[label]
    except KeyError:
        raise EllipLegError(f"unknown identity label {label!r}") from None


def _check_params(rec: IdentityRecord, params: Params) -> dict[str, float]:
    prm = {k: float(v) for k, v in params.items()}
    if rec.alpha_constraint == "zero":
        if abs(prm.get("alpha", 0.0)) > 0.0:
            raise DomainError(f"{rec.label} holds only for alpha = 0")
        prm["alpha"] = 0.0
    elif rec.alpha_constraint == "free":
        prm.setdefault("alpha", 0.0)
    elif rec.alpha_constraint == "two":
        prm.setdefault("alpha", 0.0)
        prm.setdefault("beta", 0.0)
    return prm


def _check_degenerate(rec: IdentityRecord, prm: Params) -> None:
    for desc, mode, fn in rec.guards:
        val = fn(prm)
        if mode == "zero" and abs(val) <= DEGENERACY_TOL:
            raise DegenerateParameterError(
                f"{rec.label}: {desc} vanishes at {dict(prm)}; {_OLVER_HINT}")
        if mode == "pole" and is_nonpositive_integer(val, DEGENERACY_TOL):
            raise DegenerateParameterError(
                f"{rec.label}: gamma pole at {desc} = {val!r} for {dict(prm)}; {_OLVER_HINT}")
    for side in (rec.left, rec.right):
        nu, mu = side.index(prm)
        s = float(nu) + float(mu)
        if any(k.is_second_kind for k, _ in side.terms) and \
                is_nonpositive_integer(s + 1.0, DEGENERACY_TOL):
            raise DegenerateParameterError(
                f"{rec.label}: second-kind function at nu + mu = {s!r} (negative integer); "
                f"{_OLVER_HINT}")


def _oracle(kind: FunctionKind, idx: LegendreIndex, point: float) -> float:
    return oracle_legendre(kind, idx, point)


def identity_sides(label: str, params: Params, p: float) -> tuple[float, float, float]:
    """Evaluate both sides of an identity at curve parameter ``p``.

    The left side uses the series oracle; the right side uses the
    elliptic kernel when its index is classical and the oracle otherwise.

    Returns
    -------
    lhs, rhs, gap : float
        ``gap = |lhs - rhs| / (1 + |lhs|)``.

    Raises
    ------
    DomainError
        If ``p`` is outside the record's interval or a parameter violates
        the record's constraint.
    DegenerateParameterError
        Near a vanishing multiplier or a gamma pole.
    """
    rec = get_record(label)
    prm = _check_params(rec, params)
    lo, hi = rec.p_interval
    if not lo < p < hi:
        raise DomainError(f"p={p!r} outside the interval ({lo}, {hi}) of {label}")
    _check_degenerate(rec, prm)
    A = curve_point(rec.curve, p)[2]
    L, R = curve_arguments(rec.curve, p)
    lhs = rec.left.evaluate(prm, L, _oracle)
    rhs = rec.constant(prm) * A.v * rec.right.evaluate(prm, R, evaluate_component)
    return lhs, rhs, abs(lhs - rhs) / (1.0 + abs(lhs))


def identity_point(label: str, p: float) -> tuple[float, float]:
    """``(L, R)`` fed to :func:`identity_sides` at ``p``."""
    rec = get_record(label)
    L, R, _ = curve_point(rec.curve, p)
    return L.v, R.v


def p_grid(label: str, n: int = 50, margin: float = 1e-3, span: float = 100.0) -> list[float]:
    """Interior grid of ``n`` parameters.

    Finite intervals are sampled uniformly with an absolute margin.  For
    ``(lo, inf)`` the offset ``p - lo`` is log-spaced on ``[margin, span]``.
    """
    lo, hi = get_record(label).p_interval
    if n < 2:
        raise ValueError("grid needs at least two points")
    if math.isinf(hi):
        ratio = (span / margin) ** (1.0 / (n - 1))
        return [lo + margin * ratio ** k for k in range(n)]
    step = (hi - lo - 2.0 * margin) / (n - 1)
    return [lo + margin + k * step for k in range(n)]


def curve_consistency(label: str, p: float) -> Optional[float]:
    """Implicit residual of the pair fed to the identity (``None`` for ``X``)."""
    rec = get_record(label)
    if rec.curve is CurveId.X:
        return None
    L, R = identity_point(label, p)
    return implicit_residual(rec.curve, L, R)


def w4_composition(alpha: float, p: float) -> tuple[float, float, float]:
    """Rebuild ``W4(i)`` by chaining homographic identities.

    ``2 P_{2a-1/2}^{-a}(L)`` is carried through ``W2(i)`` with
    ``(alpha, beta) = (2a, a)``, then ``M(i-bar)``, the inverse of ``M(i)``
    and ``W2(i)`` with ``(a, 2a)``.  The chain ends at
    ``Qhat_{2a-1/2}^{-a}`` of a composed argument, with a composed
    multiplier; neither uses the ``W4`` curve.

    Returns
    -------
    lhs, composed, gap : float
        ``lhs`` from the series oracle at ``L(p)``; ``composed`` the chain's
        multiplier times ``Qhat`` at the chain's final argument;
        ``gap = |lhs - composed| / (1 + |lhs|)``.

    Raises
    ------
    DegenerateParameterError
        When ``alpha`` is within :data:`DEGENERACY_TOL` of a half-odd integer,
        where ``cos(alpha pi)`` and ``1 / Gamma(1/2 - alpha)`` both vanish.
    """
    a = float(alpha)
    half_odd = a - 0.5
    if abs(half_odd - round(half_odd)) <= DEGENERACY_TOL:
        raise DegenerateParameterError(
            f"the W4 chain divides by cos(alpha pi), which vanishes at alpha={a!r}; "
            f"{_OLVER_HINT}")
    lo, hi = BRANCH_INTERVALS[(CurveId.W4, "i")]
    if not lo < p < hi:
        raise DomainError(f"p={p!r} outside the interval ({lo}, {hi}) of W4(i)")
    L = curve_point(CurveId.W4, p)[0].v
    lhs = 2.0 * oracle_legendre(P, LegendreIndex.of(2.0 * a - 0.5, -a), L)
    # W2(i), (alpha, beta) = (2a, a): P_{2a-1/2}^{-a}(L) -> Qhat_{a-1/2}^{-2a}(R1)
    _, R1, A1 = (d.v for d in curve_point(CurveId.W2, solve_parameter(CurveId.W2, "i", L)))
    mult = math.sqrt(math.pi) / gamma_fn(0.5 - a) * A1 * (2.0 / math.pi) / math.sqrt(2.0)
    # M(i-bar): Qhat_{a-1/2}^{-2a}(R1) -> Ferrers P_{a-1/2}^{-2a}(-R2)
    _, R2, A2 = (d.v for d in curve_point(CurveId.M, solve_parameter(CurveId.M, "i", R1)))
    mult *= A2 / (2.0 / math.pi * math.cos(a * math.pi))
    # inverse of M(i): Ferrers P_{a-1/2}^{-2a}(-R2) -> P_{a-1/2}^{-2a}(L3)
    L3, _, A3 = (d.v for d in curve_point(CurveId.M, solve_parameter(CurveId.M, "i", -R2, side="R")))
    mult /= A3
    # W2(i), (alpha, beta) = (a, 2a): P_{a-1/2}^{-2a}(L3) -> Qhat_{2a-1/2}^{-a}(R4)
    _, R4, A4 = (d.v for d in curve_point(CurveId.W2, solve_parameter(CurveId.W2, "i", L3)))
    mult *= math.sqrt(math.pi) / gamma_fn(a + 0.5) * A4 * (2.0 / math.pi) / math.sqrt(2.0)
    composed = 2.0 * mult * evaluate_component(QH, LegendreIndex.of(2.0 * a - 0.5, -a), R4)
    return lhs, composed, abs(lhs - composed) / (1.0 + abs(lhs))
