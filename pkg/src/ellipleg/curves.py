"""Registry of the algebraic L-R curves behind the transformation identities.

Each curve carries a rational parametrization ``p -> (L, R)``, a prefactor
``A(p)``, an implicit polynomial (except ``X``), symmetry homographies
and the monotone interval table.  Parametrizations accept floats or
:class:`DualScalar` values, so derivatives propagate through them.
"""

from __future__ import annotations

import enum
import json
import math
from dataclasses import dataclass, field
from typing import Callable, Optional, Sequence, Union

import numpy as np
from scipy.optimize import brentq

from .errors import DomainError, UnsupportedCurveError
from .numerics import (Argument, DualScalar, as_dual, dcos, dcosh, dexp, dsqrt,
                       dtan, dtanh)

__all__ = [
    "CurveId",
    "CurveSpec",
    "IntervalRow",
    "Symmetry",
    "Poly2",
    "CURVES",
    "curve_point",
    "implicit_residual",
    "implicit_scale",
    "trig_parameter",
    "trig_parameter_dual",
    "solve_parameter",
    "registry_dict",
    "registry_json",
    "curve_arguments",
]

Scalar = Union[float, DualScalar]
SQ3 = math.sqrt(3.0)
SQ5 = math.sqrt(5.0)
INF = math.inf


class CurveId(str, enum.Enum):
    C3 = "C3"
    C3p = "C3p"
    C4 = "C4"
    C4p = "C4p"
    C6 = "C6"
    C6p = "C6p"
    M = "M"
    W2 = "W2"
    W4 = "W4"
    X = "X"


class Poly2:
    """Dense bivariate polynomial in ``(L, R)``; ``coef[i, j]`` multiplies ``L**i R**j``."""

    __slots__ = ("coef",)

    def __init__(self, coef: np.ndarray):
        self.coef = np.asarray(coef, dtype=float)

    @classmethod
    def const(cls, c: float) -> "Poly2":
        return cls(np.array([[c]]))

    @classmethod
    def gens(cls) -> tuple["Poly2", "Poly2"]:
        return cls(np.array([[0.0], [1.0]])), cls(np.array([[0.0, 1.0]]))

    @staticmethod
    def _wrap(x: "Poly2 | float") -> "Poly2":
        return x if isinstance(x, Poly2) else Poly2.const(float(x))

    def __add__(self, other: "Poly2 | float") -> "Poly2":
        o = self._wrap(other)
        shape = (max(self.coef.shape[0], o.coef.shape[0]),
                 max(self.coef.shape[1], o.coef.shape[1]))
        out = np.zeros(shape)
        out[:self.coef.shape[0], :self.coef.shape[1]] += self.coef
        out[:o.coef.shape[0], :o.coef.shape[1]] += o.coef
        return Poly2(out)

    __radd__ = __add__

    def __neg__(self) -> "Poly2":
        return Poly2(-self.coef)

    def __sub__(self, other: "Poly2 | float") -> "Poly2":
        return self + (-self._wrap(other))

    def __rsub__(self, other: float) -> "Poly2":
        return self._wrap(other) - self

    def __mul__(self, other: "Poly2 | float") -> "Poly2":
        o = self._wrap(other)
        a, b = self.coef, o.coef
        out = np.zeros((a.shape[0] + b.shape[0] - 1, a.shape[1] + b.shape[1] - 1))
        for (i, j), c in np.ndenumerate(a):
            if c:
                out[i:i + b.shape[0], j:j + b.shape[1]] += c * b
        return Poly2(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly2":
        out = Poly2.const(1.0)
        for _ in range(k):
            out = out * self
        return out

    def monomials(self, L: float, R: float) -> np.ndarray:
        li = L ** np.arange(self.coef.shape[0])
        rj = R ** np.arange(self.coef.shape[1])
        return self.coef * np.outer(li, rj)

    def __call__(self, L: float, R: float) -> float:
        return float(self.monomials(L, R).sum())


@dataclass(frozen=True)
class IntervalRow:
    """One monotone row: ``p`` in ``(p_lo, p_hi)`` maps ``L`` and ``R`` between the limits."""

    p_lo: float
    p_hi: float
    L_lo: float
    L_hi: float
    R_lo: float
    R_hi: float

    def contains(self, p: float) -> bool:
        return self.p_lo < p < self.p_hi

    def as_dict(self) -> dict:
        return {k: _json_num(getattr(self, k))
                for k in ("p_lo", "p_hi", "L_lo", "L_hi", "R_lo", "R_hi")}


@dataclass(frozen=True)
class Symmetry:
    """A homography of ``p`` and the action it induces on ``(L, R)``."""

    name: str
    p_map: Callable[[float], float]
    action: str
    lr_map: Callable[[float, float], tuple[float, float]]


@dataclass(frozen=True)
class CurveSpec:
    """Static data of one curve.  See the module docstring."""

    id: CurveId
    L_of_p: Callable[[Scalar], DualScalar]
    R_of_p: Callable[[Scalar], DualScalar]
    A_of_p: Callable[[Scalar], DualScalar]
    implicit: Optional[Poly2]
    basepoint: float
    rows: tuple[IntervalRow, ...]
    symmetries: tuple[Symmetry, ...]
    formulas: dict = field(default_factory=dict)

    def row_for(self, p: float) -> IntervalRow:
        for row in self.rows:
            if row.contains(p):
                return row
        raise DomainError(f"p={p!r} is a breakpoint of curve {self.id.value}")


def _json_num(x: float):
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return x


def _rows(breaks: Sequence[float], Lv: Sequence, Rv: Sequence) -> tuple[IntervalRow, ...]:
    """Rows from breakpoint values; a pair ``(a, b)`` gives left and right limits."""
    def right(v):
        return v[1] if isinstance(v, tuple) else v

    def left(v):
        return v[0] if isinstance(v, tuple) else v
    out = []
    for k in range(len(breaks) - 1):
        out.append(IntervalRow(breaks[k], breaks[k + 1],
                               right(Lv[k]), left(Lv[k + 1]),
                               right(Rv[k]), left(Rv[k + 1])))
    return tuple(out)


def _sqrt_checked(x: DualScalar, curve: str) -> DualScalar:
    if x.v < 0.0:
        raise DomainError(f"prefactor radicand of {curve} is negative ({x.v!r})")
    return dsqrt(x)


_Lg, _Rg = Poly2.gens()


def _c4() -> CurveSpec:
    return CurveSpec(
        CurveId.C4,
        lambda p: 2 * as_dual(p) ** 2 - 1,
        lambda p: 1 / as_dual(p),
        lambda p: _sqrt_checked(1 / as_dual(p), "C4"),
        _Lg * _Rg ** 2 + (_Rg ** 2 - 2),
        1.0,
        _rows([-INF, -1, 0, 1, INF], [INF, 1, -1, 1, INF], [0, -1, (-INF, INF), 1, 0]),
        (Symmetry("p -> -p", lambda p: -p, "R -> -R", lambda L, R: (L, -R)),),
        {"L": "2p^2-1", "R": "1/p", "A": "sqrt(1/p)", "implicit": "L R^2 + (R^2 - 2)"},
    )


def _c4p() -> CurveSpec:
    return CurveSpec(
        CurveId.C4p,
        lambda p: -1 + 8 * as_dual(p) / (as_dual(p) + 1) ** 2,
        lambda p: -1 + 2 / as_dual(p),
        lambda p: _sqrt_checked((1 + as_dual(p)) / (2 * as_dual(p)), "C4p"),
        (_Lg - 1) * (_Rg + 3) ** 2 + 2 * (_Rg - 1) ** 2,
        1.0,
        _rows([-INF, -1, 0, 1, INF], [-1, -INF, -1, 1, -1], [-1, -3, (-INF, INF), 1, -1]),
        (Symmetry("p -> 1/p", lambda p: 1 / p, "R -> 4/(R+1) - 1",
                  lambda L, R: (L, 4 / (R + 1) - 1)),),
        {"L": "-1 + 8p/(p+1)^2", "R": "-1 + 2/p", "A": "sqrt((1+p)/(2p))",
         "implicit": "(L-1)(R+3)^2 + 2(R-1)^2"},
    )


def _L6(p: Scalar) -> DualScalar:
    p = as_dual(p)
    return 1 - 54 * (p ** 2 - 1) / (p ** 2 - 3) ** 3


def _L6p(p: Scalar) -> DualScalar:
    p = as_dual(p)
    return 1 - 54 * (p ** 2 - 1) ** 2 / (p ** 2 + 3) ** 3


def _R3(p: Scalar) -> DualScalar:
    p = as_dual(p)
    return 1 - (p - 1) * (3 + p) ** 3 / (8 * p ** 3)


_BREAK6 = [-INF, -3, -SQ3, -1, 0, 1, SQ3, 3, INF]
_LTAB6 = [1, -1, (-INF, INF), 1, -1, 1, (INF, -INF), -1, 1]
_BREAK6P = [-INF, -3, -1, 0, 1, 3, INF]
_LTAB6P = [1, -1, 1, -1, 1, -1, 1]
_RTAB6P = [INF, 1, -1, (-INF, INF), 1, -1, -INF]


def _c6() -> CurveSpec:
    return CurveSpec(
        CurveId.C6, _L6,
        lambda p: (3 + as_dual(p) ** 2) / (4 * as_dual(p)),
        lambda p: _sqrt_checked((3 - as_dual(p) ** 2) / (2 * as_dual(p)), "C6"),
        (_Lg ** 2 - 1) * (4 * _Rg ** 2 - 3) ** 3 + 27 * (_Rg ** 2 - 1),
        1.0,
        _rows(_BREAK6, _LTAB6, [-INF, -1, -SQ3 / 2, -1, (-INF, INF), 1, SQ3 / 2, 1, INF]),
        (Symmetry("p -> 3/p", lambda p: 3 / p, "L -> -L", lambda L, R: (-L, R)),
         Symmetry("p -> -p", lambda p: -p, "R -> -R", lambda L, R: (L, -R))),
        {"L": "1 - 54(p^2-1)/(p^2-3)^3", "R": "(3+p^2)/(4p)", "A": "sqrt((3-p^2)/(2p))",
         "implicit": "(L^2-1)(4R^2-3)^3 + 27(R^2-1)"},
    )


def _c6p() -> CurveSpec:
    return CurveSpec(
        CurveId.C6p, _L6p,
        lambda p: (3 - as_dual(p) ** 2) / (2 * as_dual(p)),
        lambda p: _sqrt_checked((3 + as_dual(p) ** 2) / (4 * as_dual(p)), "C6p"),
        (_Lg ** 2 - 1) * (_Rg ** 2 + 3) ** 3 + 27 * (_Rg ** 2 - 1) ** 2,
        1.0,
        _rows(_BREAK6P, _LTAB6P, _RTAB6P),
        (Symmetry("p -> -3/p", lambda p: -3 / p, "L -> -L", lambda L, R: (-L, R)),
         Symmetry("p -> -p", lambda p: -p, "R -> -R", lambda L, R: (L, -R))),
        {"L": "1 - 54(p^2-1)^2/(p^2+3)^3", "R": "(3-p^2)/(2p)", "A": "sqrt((3+p^2)/(4p))",
         "implicit": "(L^2-1)(R^2+3)^3 + 27(R^2-1)^2"},
    )


def _c3() -> CurveSpec:
    return CurveSpec(
        CurveId.C3, _L6, _R3,
        lambda p: _sqrt_checked((3 - as_dual(p) ** 2) ** 2 / (4 * as_dual(p) ** 3), "C3"),
        27 * (4 * _Lg - 5) ** 3 * (_Rg ** 2 - 1)
        - 4 * (_Lg - 1) * (_Lg + 1) ** 3 * (4 * _Rg ** 2 - 3) ** 3,
        1.0,
        _rows(_BREAK6, _LTAB6, [INF, 1, SQ3 / 2, -1, (-INF, INF), 1, -SQ3 / 2, -1, -INF]),
        (Symmetry("p -> -p", lambda p: -p, "R -> -R", lambda L, R: (L, -R)),),
        {"L": "1 - 54(p^2-1)/(p^2-3)^3", "R": "1 - (p-1)(3+p)^3/(8p^3)",
         "A": "sqrt((3-p^2)^2/(4p^3))",
         "implicit": "27(4L-5)^3(R^2-1) - 4(L-1)(L+1)^3(4R^2-3)^3"},
    )


def _c3p() -> CurveSpec:
    return CurveSpec(
        CurveId.C3p, _L6p, _R3,
        lambda p: _sqrt_checked((3 + as_dual(p) ** 2) ** 2 / (16 * as_dual(p) ** 3), "C3p"),
        27 * (4 * _Lg - 5) ** 3 * (_Rg ** 2 - 1) ** 2
        - 4 * (_Lg - 1) * (_Lg + 1) ** 3 * (_Rg ** 2 + 3) ** 3,
        1.0,
        _rows(_BREAK6P, _LTAB6P, _RTAB6P),
        # L -> -L is not a symmetry here: the implicit form has a (4L-5) factor
        (Symmetry("p -> -p", lambda p: -p, "R -> -R", lambda L, R: (L, -R)),),
        {"L": "1 - 54(p^2-1)^2/(p^2+3)^3", "R": "1 - (p-1)(3+p)^3/(8p^3)",
         "A": "sqrt((3+p^2)^2/(16p^3))",
         "implicit": "27(4L-5)^3(R^2-1)^2 - 4(L-1)(L+1)^3(R^2+3)^3"},
    )


def _m() -> CurveSpec:
    return CurveSpec(
        CurveId.M,
        lambda p: 2 * as_dual(p) - 1,
        lambda p: -1 + 2 / as_dual(p),
        lambda p: _sqrt_checked(1 / as_dual(p), "M"),
        (_Lg + 1) * (_Rg + 1) - 4,
        1.0,
        _rows([-INF, 0, 1, INF], [-INF, -1, 1, INF], [-1, (-INF, INF), 1, -1]),
        (Symmetry("p -> 1/p", lambda p: 1 / p, "L <-> R", lambda L, R: (R, L)),),
        {"L": "2p - 1", "R": "-1 + 2/p", "A": "sqrt(1/p)", "implicit": "(L+1)(R+1) - 4"},
    )


_WBREAK = [-INF, -1, 0, 1, INF]
_WLTAB = [-INF, -1, (-INF, INF), 1, INF]
_WRTAB = [1, (INF, -INF), -1, (-INF, INF), 1]


def _w_symmetries() -> tuple[Symmetry, ...]:
    return (Symmetry("p -> (p+1)/(p-1)", lambda p: (p + 1) / (p - 1), "L <-> R",
                     lambda L, R: (R, L)),
            Symmetry("p -> 1/p", lambda p: 1 / p, "R -> -R", lambda L, R: (L, -R)),
            Symmetry("p -> -p", lambda p: -p, "L -> -L", lambda L, R: (-L, R)))


def _w2() -> CurveSpec:
    return CurveSpec(
        CurveId.W2,
        lambda p: (as_dual(p) ** 2 + 1) / (2 * as_dual(p)),
        lambda p: (as_dual(p) ** 2 + 1) / (as_dual(p) ** 2 - 1),
        lambda p: _sqrt_checked(2 * as_dual(p) / (as_dual(p) ** 2 - 1), "W2"),
        (_Lg ** 2 - 1) * (_Rg ** 2 - 1) - 1,
        1.0 + math.sqrt(2.0),
        _rows(_WBREAK, _WLTAB, _WRTAB),
        _w_symmetries(),
        {"L": "(p^2+1)/(2p)", "R": "(p^2+1)/(p^2-1)", "A": "sqrt(2p/(p^2-1))",
         "implicit": "(L^2-1)(R^2-1) - 1"},
    )


def _w4() -> CurveSpec:
    return CurveSpec(
        CurveId.W4,
        lambda p: (as_dual(p) ** 4 + 6 * as_dual(p) ** 2 + 1) / (4 * as_dual(p) * (as_dual(p) ** 2 + 1)),
        lambda p: (as_dual(p) ** 4 + 1) / (as_dual(p) ** 4 - 1),
        lambda p: _sqrt_checked(2 * as_dual(p) / (as_dual(p) ** 2 - 1), "W4"),
        16 * (_Lg ** 2 - 1) * (_Rg ** 2 - 1) * (4 * _Lg ** 2 + 4 * _Rg ** 2 - 5) - 1,
        1.0 + math.sqrt(2.0),
        _rows(_WBREAK, _WLTAB, _WRTAB),
        _w_symmetries(),
        {"L": "(p^4+6p^2+1)/(4p(p^2+1))", "R": "(p^4+1)/(p^4-1)", "A": "sqrt(2p/(p^2-1))",
         "implicit": "16(L^2-1)(R^2-1)(4L^2+4R^2-5) - 1"},
    )


X_ROOT_NEG = -(5.0 * SQ5 - 11.0) / 2.0
X_ROOT_POS = (5.0 * SQ5 + 11.0) / 2.0


def _x() -> CurveSpec:
    def R(p: Scalar) -> DualScalar:
        p = as_dual(p)
        return 1 - 2 * p * (2 + p) ** 5 / ((1 + p ** 2) * (1 + 11 * p - p ** 2) ** 2)

    def A(p: Scalar) -> DualScalar:
        p = as_dual(p)
        return _sqrt_checked((2 + p) * (1 - 2 * p) / (2 * (1 + 11 * p - p ** 2)), "X")
    r = 11.0 / (5.0 * SQ5)
    return CurveSpec(
        CurveId.X,
        lambda p: (1 - as_dual(p) ** 2) / (1 + as_dual(p) ** 2),
        R, A, None, 0.0,
        _rows([-INF, -2, X_ROOT_NEG, 0, 0.5, X_ROOT_POS, INF],
              [-1, -0.6, r, 1, 0.6, -r, -1],
              [-1, 1, INF, 1, -1, -INF, -1]),
        (Symmetry("p -> -1/p", lambda p: -1 / p, "(L, R) -> (-L, -R)",
                  lambda L, R: (-L, -R)),),
        {"L": "(1-p^2)/(1+p^2)", "R": "1 - 2p(2+p)^5/((1+p^2)(1+11p-p^2)^2)",
         "A": "sqrt((2+p)(1-2p)/(2(1+11p-p^2)))", "implicit": None},
    )


CURVES: dict[CurveId, CurveSpec] = {
    spec.id: spec for spec in (_c3(), _c3p(), _c4(), _c4p(), _c6(), _c6p(),
                               _m(), _w2(), _w4(), _x())
}


def _spec(curve: CurveId | str) -> CurveSpec:
    try:
        return CURVES[CurveId(curve)]
    except ValueError as exc:
        raise DomainError(f"unknown curve {curve!r}") from exc


def curve_point(curve: CurveId | str, p: Scalar) -> tuple[DualScalar, DualScalar, DualScalar]:
    """``(L, R, A)`` at ``p`` with derivatives.

    A float ``p`` is promoted to the independent variable, so the ``d``
    parts are ``d/dp``.  A :class:`DualScalar` ``p`` propagates its own
    derivative through the chain rule.

    Raises
    ------
    DomainError
        If ``p`` is a pole of the parametrization or ``A`` is not real.
    """
    spec = _spec(curve)
    pd = p if isinstance(p, DualScalar) else DualScalar.variable(p)
    if not math.isfinite(pd.v):
        raise DomainError(f"p must be finite, got {pd.v!r}")
    try:
        return spec.L_of_p(pd), spec.R_of_p(pd), spec.A_of_p(pd)
    except ZeroDivisionError as exc:
        raise DomainError(f"p={pd.v!r} is a pole of curve {spec.id.value}") from exc


# factored forms of (L - 1, L + 1, R - 1, R + 1); they keep full relative
# accuracy where L or R approaches a singular point +-1
def _off_c4(p):
    return 2 * (p - 1) * (p + 1), 2 * p * p, (1 - p) / p, (1 + p) / p


def _off_c4p(p):
    q = (p + 1) ** 2
    return -2 * (p - 1) ** 2 / q, 8 * p / q, 2 * (1 - p) / p, 2 / p


def _off_l6(p):
    d = (p * p - 3) ** 3
    return -54 * (p * p - 1) / d, 2 * p ** 4 * (p * p - 9) / d


def _off_l6p(p):
    d = (p * p + 3) ** 3
    return -54 * (p * p - 1) ** 2 / d, 2 * p * p * (p * p - 9) ** 2 / d


def _off_r3(p):
    d = 8 * p ** 3
    return -(p - 1) * (3 + p) ** 3 / d, (p + 1) * (3 - p) ** 3 / d


def _off_c6(p):
    return _off_l6(p) + ((p - 1) * (p - 3) / (4 * p), (p + 1) * (p + 3) / (4 * p))


def _off_c6p(p):
    return _off_l6p(p) + (-(p + 3) * (p - 1) / (2 * p), -(p - 3) * (p + 1) / (2 * p))


def _off_m(p):
    return 2 * (p - 1), 2 * p, 2 * (1 - p) / p, 2 / p


def _off_w2(p):
    q = p * p - 1
    return (p - 1) ** 2 / (2 * p), (p + 1) ** 2 / (2 * p), 2 / q, 2 * p * p / q


def _off_w4(p):
    d = 4 * p * (p * p + 1)
    q = p ** 4 - 1
    return (p - 1) ** 4 / d, (p + 1) ** 4 / d, 2 / q, 2 * p ** 4 / q


def _off_x(p):
    d = (1 + p * p) * (1 + 11 * p - p * p) ** 2
    return (-2 * p * p / (1 + p * p), 2 / (1 + p * p),
            -2 * p * (2 + p) ** 5 / d, 2 * (1 - 2 * p) ** 5 / d)


_OFFSETS = {
    CurveId.C4: _off_c4, CurveId.C4p: _off_c4p,
    CurveId.C6: _off_c6, CurveId.C6p: _off_c6p,
    CurveId.C3: lambda p: _off_l6(p) + _off_r3(p),
    CurveId.C3p: lambda p: _off_l6p(p) + _off_r3(p),
    CurveId.M: _off_m, CurveId.W2: _off_w2, CurveId.W4: _off_w4, CurveId.X: _off_x,
}


def curve_arguments(curve: CurveId | str, p: float) -> tuple[Argument, Argument]:
    """``L(p)`` and ``R(p)`` as :class:`Argument` values with accurate offsets from +-1."""
    spec = _spec(curve)
    p = float(p)
    try:
        lm, lp, rm, rp = _OFFSETS[spec.id](p)
        L, R = spec.L_of_p(p).v, spec.R_of_p(p).v
    except ZeroDivisionError as exc:
        raise DomainError(f"p={p!r} is a pole of curve {spec.id.value}") from exc
    return Argument(L, lm, lp), Argument(R, rm, rp)


def implicit_residual(curve: CurveId | str, L: float, R: float) -> float:
    """Value of the curve's implicit polynomial at ``(L, R)``.

    Raises
    ------
    UnsupportedCurveError
        For ``X``, which has no implicit polynomial in the registry.
    """
    spec = _spec(curve)
    if spec.implicit is None:
        raise UnsupportedCurveError(f"curve {spec.id.value} has no implicit polynomial")
    return spec.implicit(float(L), float(R))


def implicit_scale(curve: CurveId | str, L: float, R: float) -> float:
    """Largest monomial magnitude of the implicit polynomial at ``(L, R)``."""
    spec = _spec(curve)
    if spec.implicit is None:
        raise UnsupportedCurveError(f"curve {spec.id.value} has no implicit polynomial")
    return float(np.abs(spec.implicit.monomials(float(L), float(R))).max())


def _acoth(u: DualScalar) -> DualScalar:
    return DualScalar(0.5 * math.log((u.v + 1.0) / (u.v - 1.0)), u.d / (1.0 - u.v * u.v))


def _c6_i(t: DualScalar) -> DualScalar:
    r = (1 + dtanh(t / 3) ** 2 / 3) ** -0.5
    return (2 - 1 / dcosh(t / 3)) * r


def _c6_ii(t: DualScalar) -> DualScalar:
    r = (1 - dtan(t / 3) ** 2 / 3) ** -0.5
    return 3 / (r * (2 + 1 / dcos(t / 3)))


# angle -> p for each (curve, branch); "i" rows have Legendre L except on the
# primed curves and X, where both rows carry Ferrers arguments
_CLOSED: dict[tuple[CurveId, str], Callable[[DualScalar], DualScalar]] = {
    (CurveId.C4, "i"): lambda t: dcosh(t / 2),
    (CurveId.C4, "ii"): lambda t: dcos(t / 2),
    (CurveId.C4p, "i"): lambda t: dtan((math.pi + t) / 4) ** 2,
    (CurveId.C4p, "ii"): lambda t: dtan((math.pi - t) / 4) ** 2,
    (CurveId.C6, "i"): _c6_i,
    (CurveId.C6, "ii"): _c6_ii,
    (CurveId.C3, "i"): _c6_i,
    (CurveId.C3, "ii"): _c6_ii,
    (CurveId.C6p, "i"): lambda t: SQ3 * dtan((math.pi + t) / 6),
    (CurveId.C6p, "ii"): lambda t: SQ3 * dtan((math.pi - t) / 6),
    (CurveId.C3p, "i"): lambda t: SQ3 * dtan((math.pi + t) / 6),
    (CurveId.C3p, "ii"): lambda t: SQ3 * dtan((math.pi - t) / 6),
    (CurveId.M, "i"): lambda t: dcosh(t / 2) ** 2,
    (CurveId.M, "ii"): lambda t: dcos(t / 2) ** 2,
    (CurveId.W2, "i"): lambda t: dexp(t),
    (CurveId.W4, "i"): lambda t: 1 / dtanh(_acoth(dcosh(t)) / 4),
    (CurveId.X, "i"): lambda t: dtan(t / 2),
    (CurveId.X, "ii"): lambda t: -dtan(t / 2),
}

# p-interval of each branch row
BRANCH_INTERVALS: dict[tuple[CurveId, str], tuple[float, float]] = {
    (CurveId.C4, "i"): (1.0, INF), (CurveId.C4, "ii"): (0.0, 1.0),
    (CurveId.C4p, "i"): (1.0, INF), (CurveId.C4p, "ii"): (0.0, 1.0),
    (CurveId.C6, "i"): (1.0, SQ3), (CurveId.C6, "ii"): (0.0, 1.0),
    (CurveId.C6p, "i"): (1.0, 3.0), (CurveId.C6p, "ii"): (0.0, 1.0),
    (CurveId.C3, "i"): (1.0, SQ3), (CurveId.C3, "ii"): (0.0, 1.0),
    (CurveId.C3p, "i"): (1.0, 3.0), (CurveId.C3p, "ii"): (0.0, 1.0),
    (CurveId.M, "i"): (1.0, INF), (CurveId.M, "ii"): (0.0, 1.0),
    (CurveId.W2, "i"): (1.0, INF), (CurveId.W4, "i"): (1.0, INF),
    (CurveId.X, "i"): (0.0, 0.5), (CurveId.X, "ii"): (X_ROOT_NEG, 0.0),
}


def left_is_legendre(curve: CurveId | str, branch: str) -> bool:
    """Whether the branch's ``L`` lies in ``(1, inf)`` (angle ``xi``) rather than ``(-1, 1)``."""
    cid = CurveId(curve)
    lo, hi = BRANCH_INTERVALS[(cid, _branch_key(branch))]
    mid = lo + 1.0 if math.isinf(hi) else 0.5 * (lo + hi)
    return _spec(cid).L_of_p(mid).v > 1.0


def _branch_key(branch: str) -> str:
    """Map ``"I4(ii-bar)"``, ``"ii-bar"`` or ``"ii"`` to the row key ``"ii"``."""
    b = branch.strip()
    if "(" in b:
        b = b[b.index("(") + 1:b.rindex(")")]
    b = b.replace("-bar", "")
    if b not in ("i", "ii"):
        raise DomainError(f"unknown branch {branch!r}")
    return b


def solve_parameter(curve: CurveId | str, branch: str, target_L: float,
                    xtol: float = 1e-14, side: str = "L") -> float:
    """Bracketed root of ``L(p) = target_L`` on the branch interval.

    With ``side="R"`` the right argument is matched instead.
    """
    cid = CurveId(curve)
    key = (cid, _branch_key(branch))
    if key not in BRANCH_INTERVALS:
        raise DomainError(f"curve {cid.value} has no branch {branch!r}")
    lo, hi = BRANCH_INTERVALS[key]
    spec = _spec(cid)
    if side not in ("L", "R"):
        raise ValueError("side must be 'L' or 'R'")
    of_p = spec.L_of_p if side == "L" else spec.R_of_p
    f = lambda p: of_p(p).v - target_L  # noqa: E731
    span = 1e-300 if lo == 0.0 else 0.0
    a = lo + max(abs(lo), 1.0) * 1e-15 + span
    if math.isinf(hi):
        b = lo + 1.0
        while f(a) * f(b) > 0.0:
            b = lo + 2.0 * (b - lo)
            if b > 1e150:
                raise DomainError(f"{side}={target_L!r} not reached on {cid.value}({branch})")
    else:
        b = hi - max(abs(hi), 1.0) * 1e-15
    if f(a) * f(b) > 0.0:
        raise DomainError(f"{side}={target_L!r} not reached on {cid.value}({branch})")
    return brentq(f, a, b, xtol=xtol, rtol=4.0 * np.finfo(float).eps, maxiter=500)


def trig_parameter_dual(curve: CurveId | str, branch: str, angle: Scalar) -> DualScalar:
    """``p`` as a dual in the angle (``L = cosh(angle)`` or ``cos(angle)``)."""
    cid = CurveId(curve)
    key = (cid, _branch_key(branch))
    if key not in BRANCH_INTERVALS:
        raise DomainError(f"curve {cid.value} has no branch {branch!r}")
    t = angle if isinstance(angle, DualScalar) else DualScalar.variable(angle)
    legendre = left_is_legendre(cid, key[1])
    if legendre and not t.v > 0.0:
        raise DomainError(f"xi must be positive, got {t.v!r}")
    if not legendre and not 0.0 < t.v < math.pi:
        raise DomainError(f"theta must lie in (0, pi), got {t.v!r}")
    fn = _CLOSED.get(key)
    if fn is not None:
        p = fn(t)
    else:
        target = dcosh(t) if legendre else dcos(t)
        pv = solve_parameter(cid, key[1], target.v)
        dl = _spec(cid).L_of_p(DualScalar.variable(pv)).d
        p = DualScalar(pv, target.d / dl)
    lo, hi = BRANCH_INTERVALS[key]
    if not lo < p.v < hi:
        raise DomainError(f"angle {t.v!r} is outside the range of {cid.value}({branch})")
    return p


def trig_parameter(curve: CurveId | str, branch: str, angle: float) -> float:
    """Parameter ``p`` on the branch row at which ``L`` equals ``cosh(xi)`` or ``cos(theta)``.

    Parameters
    ----------
    curve : CurveId or str
    branch : str
        Identity label (``"I4(ii-bar)"``) or row key (``"i"``, ``"ii"``).
    angle : float
        ``xi > 0`` for Legendre rows, ``theta`` in ``(0, pi)`` for Ferrers rows.

    Examples
    --------
    >>> round(trig_parameter("X", "X(i)", 0.5), 15) == round(math.tan(0.25), 15)
    True
    """
    return trig_parameter_dual(curve, branch, float(angle)).v


def registry_dict() -> list[dict]:
    out = []
    for spec in CURVES.values():
        out.append({
            "curve": spec.id.value,
            "parametrization": spec.formulas,
            "basepoint": spec.basepoint,
            "intervals": [row.as_dict() for row in spec.rows],
            "symmetries": [{"p_map": s.name, "action": s.action} for s in spec.symmetries],
        })
    return out


def registry_json(indent: int | None = 2) -> str:
    """Registry dump for documentation tooling and the ``table`` command."""
    return json.dumps(registry_dict(), indent=indent)
