"""Elliptic reduction of fractional-degree Legendre and Ferrers functions.

A degree ``nu = n - 1/r`` (``r`` in 3, 4, 6) and integer order ``m`` are
reached in three moves:

1. an identity of type ``I_r`` maps ``F_{-1/r}^{m0}(x)`` to a classical
   (half-odd degree) function at the curve's right argument, which the
   ladder kernel writes as a complete elliptic combination;
2. the derivative of that combination is carried back to the angle of
   ``x`` by the chain rule through the curve parameter;
3. order and degree ladders on the left move ``(-1/r, m0)`` to
   ``(n - 1/r, m)``.

Degrees ``n + 1/r`` are folded onto ``-n - 1 - 1/r``: first-kind functions
are invariant under ``nu -> -nu - 1`` and second-kind ones pick up a
first-kind term through the degree reflection formulas.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .curves import CurveId, curve_arguments, curve_point, trig_parameter_dual
from .errors import StabilityError, UnsupportedIndexError
from .hypergeom import oracle_legendre
from .indices import FunctionKind, LegendreIndex, check_point, validate_index
from .kernel import (MAX_CONDITION, EllipticCombination, aux_tildep, eval_classical,
                     geometry, ladder_degree, ladder_order, reflect_degree_combination)
from .numerics import DualScalar, offsets

__all__ = [
    "REDUCTION_BUDGET",
    "Evaluation",
    "eval_fractional",
    "evaluate",
    "evaluate_ex",
]

REDUCTION_BUDGET = 10

_KINDS = (FunctionKind.LEGENDRE_P, FunctionKind.LEGENDRE_QHAT,
          FunctionKind.FERRERS_P, FunctionKind.FERRERS_Q)
_CURVES = {3: CurveId.C3, 4: CurveId.C4, 6: CurveId.C6}
# I_6 sends order m0 to degree -2 m0 - 1/2 on the right, so keep that within the kernel budget
_I6_ORDER_LIMIT = 6


def _right_index(r: int, alpha: int) -> LegendreIndex:
    half = Fraction(1, 2)
    if r == 4:
        return LegendreIndex.of(alpha - half, Fraction(-alpha))
    if r == 6:
        return LegendreIndex.of(2 * alpha - half, Fraction(-alpha))
    return LegendreIndex.of(-half, Fraction(0))


def _right_constant(r: int, alpha: int) -> float:
    if r == 4:
        return 2.0 ** alpha
    if r == 6:
        return 3.0 ** (1.5 * alpha)
    return 1.0


def _base_order(r: int, m: int) -> int:
    if r == 3:
        return 0
    if r == 6:
        return max(-_I6_ORDER_LIMIT, min(_I6_ORDER_LIMIT, m))
    return m


def _pull_back(comb: EllipticCombination, weight: DualScalar, rate: float,
               parameter: str) -> EllipticCombination:
    """``weight(t) * F(R(t))`` as a combination differentiated in ``t``.

    ``rate`` is ``d(angle of R)/dt``.
    """
    out = comb.mix(weight.v, 0.0, weight.d, weight.v * rate)
    return dataclasses.replace(out, parameter=parameter)


def _identity_base(kind: FunctionKind, r: int, m0: int, x: float) -> EllipticCombination:
    """``F_{-1/r}^{m0}(x)`` through the ``I_r`` identities with ``alpha = -m0``."""
    legendre = kind.is_legendre
    curve = _CURVES[r]
    branch = "i" if legendre else "ii"
    g = geometry(x, legendre)
    pd = trig_parameter_dual(curve, branch, g.angle)
    _, R, A = curve_point(curve, pd)
    r_arg = curve_arguments(curve, pd.v)[1]
    below, above = offsets(r_arg)
    alpha = -m0
    ridx = _right_index(r, alpha)
    c = _right_constant(r, alpha)
    weight = DualScalar(c * A.v, c * A.d)
    parameter = "xi" if legendre else "theta"
    tag = f"I{r}"
    if legendre:
        rate = -R.d / math.sqrt(-below * above)
        first_kind, second_kind = FunctionKind.FERRERS_P, FunctionKind.FERRERS_Q
        labels = (f"{tag}(i)", f"{tag}(i-bar)")
    else:
        rate = R.d / math.sqrt(below * above)
        first_kind, second_kind = FunctionKind.LEGENDRE_P, FunctionKind.LEGENDRE_QHAT
        labels = (f"{tag}(ii)", f"{tag}(ii-bar)")
    right_note = f"right index ({ridx.exact_nu}, {ridx.exact_mu}) at R={float(r_arg):.17g}"
    p_comb = _pull_back(eval_classical(first_kind, ridx, r_arg), weight, rate, parameter)
    if kind in (FunctionKind.LEGENDRE_P, FunctionKind.FERRERS_P):
        return p_comb.with_trace(f"{labels[0]} alpha={alpha}", right_note)
    q_right = eval_classical(second_kind, ridx, r_arg)
    nu = -1.0 / r
    s = (nu + m0) * math.pi
    half_pi_csc = 0.5 * math.pi / math.sin(s)
    sin_r = math.sin(math.pi / r)
    if legendre:
        # csc(pi/r)[cos(nu pi) P - (2/pi) sin(s) Qhat] = c A (2/pi) FerrersQ(R)
        star = _pull_back(q_right, weight, rate, parameter).scale(2.0 / math.pi)
        out = p_comb.combine(star, math.cos(nu * math.pi) * half_pi_csc, -sin_r * half_pi_csc)
    else:
        # csc(pi/r) Pbar = c A (2/pi) Qhat(R) and Pbar = cos(s) P - (2/pi) sin(s) Q
        pbar = _pull_back(q_right, weight, rate, parameter).scale(2.0 / math.pi * sin_r)
        out = p_comb.combine(pbar, math.cos(s) * half_pi_csc, -half_pi_csc)
    return out.with_trace(f"{labels[0]} + {labels[1]} alpha={alpha}", right_note)


def _lower_fractional(kind: FunctionKind, r: int, n: int, m: int, x: float) -> EllipticCombination:
    """``F_{n - 1/r}^m(x)`` for ``F`` in the four kernel kinds."""
    m0 = _base_order(r, m)
    comb = _identity_base(kind, r, m0, x)
    g = geometry(x, kind.is_legendre)
    cur = LegendreIndex.of(Fraction(-1, r), Fraction(m0))
    step = 1 if m > m0 else -1
    for _ in range(abs(m - m0)):
        comb, cur = ladder_order(kind, comb, cur, step, x, g)
    step = 1 if n > 0 else -1
    for _ in range(abs(n)):
        comb, cur = ladder_degree(kind, comb, cur, step, x, g)
    return comb.with_trace(f"left order ladder {m0:+d} -> {m:+d}",
                           f"left degree ladder x{n:+d}")


def eval_fractional(kind: FunctionKind, idx: LegendreIndex, point: float) -> EllipticCombination:
    """Fractional-degree function as a complete elliptic combination.

    Parameters
    ----------
    kind : FunctionKind
        One of Legendre ``P``, ``Qhat``, Ferrers ``P``, ``Q``.
    idx : LegendreIndex
        ``nu = n +- 1/r`` with ``r`` in 2, 3, 4, 6 and integer order ``m``.
    point : float
        ``z > 1`` for Legendre kinds, ``x`` in ``(-1, 1)`` for Ferrers kinds.

    Returns
    -------
    EllipticCombination
        Its ``value`` is the function value and its ``derivative`` the
        derivative in ``xi`` (``z = cosh xi``) or ``theta`` (``x = cos theta``).
        The ``trace`` names the identities and ladder chains used.

    Raises
    ------
    UnsupportedIndexError
        For other kinds, non-integer order or a degree outside the families.
    StabilityError
        If ``|n|`` or ``|m|`` exceeds :data:`REDUCTION_BUDGET`.
    """
    kind = FunctionKind(kind)
    if kind not in _KINDS:
        raise UnsupportedIndexError(f"no elliptic reduction for {kind.value}")
    point = check_point(kind, point)
    validate_index(kind, idx)
    cl = idx.classification
    if not cl.elliptic:
        raise UnsupportedIndexError(
            f"index (nu={idx.nu!r}, mu={idx.mu!r}) is not of the form n +- 1/r with integer order")
    if abs(cl.n) > REDUCTION_BUDGET or abs(cl.m) > REDUCTION_BUDGET:
        raise StabilityError(
            f"|n|={abs(cl.n)} or |m|={abs(cl.m)} exceeds the reduction budget {REDUCTION_BUDGET}")
    if cl.r == 2:
        return eval_classical(kind, idx, point)
    if cl.sign == -1:
        return _lower_fractional(kind, cl.r, cl.n, cl.m, point)
    # nu = n + 1/r: work at nu' = -nu - 1 = (-n - 1) - 1/r
    n_ref = -cl.n - 1
    if kind in (FunctionKind.LEGENDRE_P, FunctionKind.FERRERS_P):
        return _lower_fractional(kind, cl.r, n_ref, cl.m, point).with_trace(
            "first kind invariant under nu -> -nu-1")
    ref = idx.reflected()
    f = _lower_fractional(kind, cl.r, n_ref, cl.m, point)
    if kind is FunctionKind.LEGENDRE_QHAT:
        p = _lower_fractional(FunctionKind.LEGENDRE_P, cl.r, n_ref, -cl.m, point)
    else:
        p = _lower_fractional(FunctionKind.FERRERS_P, cl.r, n_ref, cl.m, point)
    return reflect_degree_combination(kind, ref, f, p).with_trace("degree reflection nu -> -nu-1")


@dataclass(frozen=True)
class Evaluation:
    """Value of a production evaluation with the route taken.

    ``combination`` is set when the value came from an elliptic combination.
    """

    value: float
    method: str
    combination: Optional[EllipticCombination] = None

    @property
    def trace(self) -> tuple[str, ...]:
        return self.combination.trace if self.combination is not None else (self.method,)


def evaluate_ex(kind: FunctionKind, idx: LegendreIndex, point: float) -> Evaluation:
    """Production evaluation of any supported kind with its route.

    Elliptic-reducible indices go through :func:`eval_fractional`; the
    series oracle handles general indices and combinations whose
    cancellation ratio exceeds :data:`~ellipleg.kernel.MAX_CONDITION`.
    """
    kind = FunctionKind(kind)
    point = check_point(kind, point)
    validate_index(kind, idx)
    if kind is FunctionKind.FERRERS_PBAR:
        inner = evaluate_ex(FunctionKind.FERRERS_P, idx, -point)
        return dataclasses.replace(inner, method=inner.method + " at -x")
    if kind is FunctionKind.LEGENDRE_PTILDE:
        return Evaluation(aux_tildep(idx, point), "auxiliary combination")
    cl = idx.classification
    if cl.elliptic and abs(cl.n) <= REDUCTION_BUDGET and abs(cl.m) <= REDUCTION_BUDGET:
        comb = eval_fractional(kind, idx, point)
        if comb.condition <= MAX_CONDITION:
            method = "elliptic" if cl.r == 2 else f"elliptic via I{cl.r}"
            return Evaluation(comb.value, method, comb)
        return Evaluation(oracle_legendre(kind, idx, point), "series (ill-conditioned combination)")
    return Evaluation(oracle_legendre(kind, idx, point), "series")


def evaluate(kind: FunctionKind, idx: LegendreIndex, point: float) -> float:
    """Value of :func:`evaluate_ex`."""
    return evaluate_ex(kind, idx, point).value
