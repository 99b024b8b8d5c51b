"""Foundation numerics: gamma, complete elliptic integrals, dual numbers.

The gamma function wraps :func:`math.gamma` (a Lanczos-type approximation
with reflection in CPython) and adds explicit pole detection.  The
complete elliptic integrals use the arithmetic-geometric mean, so that
quadrature stays available as an independent check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

from . import _kernels
from .errors import ConvergenceError, DomainError, PoleError

__all__ = [
    "POLE_TOL",
    "gamma_fn",
    "rgamma",
    "is_nonpositive_integer",
    "complete_elliptic_k",
    "complete_elliptic_e",
    "elliptic_ke",
    "elliptic_derivatives",
    "DualScalar",
    "Number",
    "as_dual",
    "dsqrt",
    "dexp",
    "dlog",
    "dsin",
    "dcos",
    "dtan",
    "dsinh",
    "dcosh",
    "dtanh",
    "dpow",
    "Argument",
    "offsets",
]

POLE_TOL = 1e-12
_AGM_TOL = 1e-15
_AGM_MAX_ITER = 64
_M_EDGE = 1e-12


def is_nonpositive_integer(x: float, tol: float = POLE_TOL) -> bool:
    """Return True when ``x`` is within ``tol`` of 0, -1, -2, ..."""
    n = round(x)
    return n <= 0 and abs(x - n) <= tol


def gamma_fn(x: float) -> float:
    """Gamma function of a real argument.

    Parameters
    ----------
    x : float
        Argument, not within ``1e-12`` of a non-positive integer.

    Returns
    -------
    float
        ``Gamma(x)``.

    Raises
    ------
    PoleError
        If ``x`` is at or near a pole.
    DomainError
        If the result overflows.
    """
    x = float(x)
    if is_nonpositive_integer(x):
        raise PoleError(f"gamma has a pole at x={x!r}")
    try:
        out = math.gamma(x)
    except OverflowError as exc:
        raise DomainError(f"gamma({x!r}) overflows") from exc
    if not math.isfinite(out):
        raise DomainError(f"gamma({x!r}) is not finite")
    return out


def rgamma(x: float) -> float:
    """Reciprocal gamma function, equal to zero at the poles of gamma."""
    x = float(x)
    if is_nonpositive_integer(x):
        return 0.0
    if x > 171.0:
        return 0.0
    return 1.0 / math.gamma(x)


def _check_modulus(m: float, mc: float | None) -> tuple[float, float]:
    m = float(m)
    if not math.isfinite(m):
        raise DomainError(f"elliptic parameter must be finite, got {m!r}")
    mc = 1.0 - m if mc is None else float(mc)
    if m < 0.0 or mc < 0.0:
        raise DomainError(f"elliptic parameter m={m!r} outside [0, 1]")
    if abs(m + mc - 1.0) > 1e-12:
        raise DomainError("m and its complement must sum to 1")
    return m, mc


def elliptic_ke(m: float, mc: float | None = None) -> tuple[float, float]:
    """Return ``(K(m), E(m))`` from a single AGM run.

    Parameters
    ----------
    m : float
        Elliptic parameter in ``[0, 1)``.
    mc : float, optional
        The complement ``1 - m`` when known more accurately than by
        subtraction.

    Raises
    ------
    DomainError
        If ``m < 0`` or ``m`` is within ``1e-12`` of 1.
    """
    m, mc = _check_modulus(m, mc)
    if mc <= _M_EDGE:
        raise DomainError(f"K(m) diverges at m=1 (m={m!r} too close to 1)")
    k, e, _, ok = _kernels.agm_ke(m, mc, _AGM_TOL, _AGM_MAX_ITER)
    if not ok:
        raise ConvergenceError(f"AGM did not converge for m={m!r}")
    return k, e


def complete_elliptic_k(m: float, mc: float | None = None) -> float:
    """Complete elliptic integral of the first kind ``K(m)``.

    Examples
    --------
    >>> round(complete_elliptic_k(0.0), 15) == round(math.pi / 2, 15)
    True
    """
    return elliptic_ke(m, mc)[0]


def complete_elliptic_e(m: float, mc: float | None = None) -> float:
    """Complete elliptic integral of the second kind ``E(m)``, ``0 <= m <= 1``."""
    m, mc = _check_modulus(m, mc)
    if mc == 0.0:
        return 1.0
    if mc <= _M_EDGE:
        # E is continuous at m = 1; the first log correction is O(mc log mc)
        return 1.0 + 0.25 * mc * (math.log(16.0 / mc) - 1.0)
    return elliptic_ke(m, mc)[1]


def elliptic_derivatives(m: float, mc: float | None = None) -> tuple[float, float]:
    """Derivatives ``(dK/dm, dE/dm)`` expressed through K and E.

    Uses ``dK/dm = (E - (1-m) K) / (2 m (1-m))`` and
    ``dE/dm = (E - K) / (2 m)``.  Both are 0/0 at ``m = 0``, so the
    endpoint is rejected rather than regularized.
    """
    m, mc = _check_modulus(m, mc)
    if m == 0.0 or mc <= _M_EDGE:
        raise DomainError(f"derivative formulas are singular at m={m!r}")
    k, e = elliptic_ke(m, mc)
    return (e - mc * k) / (2.0 * m * mc), (e - k) / (2.0 * m)


Number = Union[int, float]


@dataclass(frozen=True, slots=True)
class DualScalar:
    """First-order dual number ``v + d*eps`` with ``eps**2 = 0``.

    ``d`` is the derivative with respect to whichever evaluation
    parameter the caller declared (usually an angle ``xi`` or ``theta``).
    """

    v: float
    d: float = 0.0

    @staticmethod
    def variable(x: float) -> "DualScalar":
        """The independent variable itself, with unit derivative."""
        return DualScalar(float(x), 1.0)

    @staticmethod
    def constant(x: float) -> "DualScalar":
        return DualScalar(float(x), 0.0)

    def __add__(self, other: "DualScalar | Number") -> "DualScalar":
        if isinstance(other, DualScalar):
            return DualScalar(self.v + other.v, self.d + other.d)
        return DualScalar(self.v + other, self.d)

    __radd__ = __add__

    def __sub__(self, other: "DualScalar | Number") -> "DualScalar":
        if isinstance(other, DualScalar):
            return DualScalar(self.v - other.v, self.d - other.d)
        return DualScalar(self.v - other, self.d)

    def __rsub__(self, other: Number) -> "DualScalar":
        return DualScalar(other - self.v, -self.d)

    def __mul__(self, other: "DualScalar | Number") -> "DualScalar":
        if isinstance(other, DualScalar):
            return DualScalar(self.v * other.v, self.d * other.v + self.v * other.d)
        return DualScalar(self.v * other, self.d * other)

    __rmul__ = __mul__

    def __truediv__(self, other: "DualScalar | Number") -> "DualScalar":
        if isinstance(other, DualScalar):
            q = self.v / other.v
            return DualScalar(q, (self.d - q * other.d) / other.v)
        return DualScalar(self.v / other, self.d / other)

    def __rtruediv__(self, other: Number) -> "DualScalar":
        q = other / self.v
        return DualScalar(q, -q * self.d / self.v)

    def __neg__(self) -> "DualScalar":
        return DualScalar(-self.v, -self.d)

    def __pos__(self) -> "DualScalar":
        return self

    def __pow__(self, k: Number) -> "DualScalar":
        if isinstance(k, DualScalar):
            raise TypeError("dual exponents are not supported")
        if k == 0:
            return DualScalar(1.0, 0.0)
        if float(k).is_integer():
            p = self.v ** int(k)
            dp = k * self.v ** (int(k) - 1) * self.d
            return DualScalar(p, dp)
        p = self.v ** k
        return DualScalar(p, k * p / self.v * self.d)

    def __abs__(self) -> "DualScalar":
        return -self if self.v < 0 else self

    def __float__(self) -> float:
        return float(self.v)

    def __repr__(self) -> str:
        return f"DualScalar(v={self.v!r}, d={self.d!r})"


def as_dual(x: "DualScalar | Number") -> DualScalar:
    return x if isinstance(x, DualScalar) else DualScalar(float(x), 0.0)


def _lift(x: "DualScalar | Number", f, df) -> DualScalar:
    x = as_dual(x)
    return DualScalar(f(x.v), df(x.v) * x.d)


def dsqrt(x: "DualScalar | Number") -> DualScalar:
    x = as_dual(x)
    if x.v < 0.0:
        raise DomainError(f"square root of negative value {x.v!r}")
    r = math.sqrt(x.v)
    return DualScalar(r, 0.5 * x.d / r if x.d else 0.0)


def dexp(x: "DualScalar | Number") -> DualScalar:
    x = as_dual(x)
    e = math.exp(x.v)
    return DualScalar(e, e * x.d)


def dlog(x: "DualScalar | Number") -> DualScalar:
    x = as_dual(x)
    if x.v <= 0.0:
        raise DomainError(f"logarithm of nonpositive value {x.v!r}")
    return DualScalar(math.log(x.v), x.d / x.v)


def dsin(x: "DualScalar | Number") -> DualScalar:
    return _lift(x, math.sin, math.cos)


def dcos(x: "DualScalar | Number") -> DualScalar:
    return _lift(x, math.cos, lambda t: -math.sin(t))


def dtan(x: "DualScalar | Number") -> DualScalar:
    return _lift(x, math.tan, lambda t: 1.0 / math.cos(t) ** 2)


def dsinh(x: "DualScalar | Number") -> DualScalar:
    return _lift(x, math.sinh, math.cosh)


def dcosh(x: "DualScalar | Number") -> DualScalar:
    return _lift(x, math.cosh, math.sinh)


def dtanh(x: "DualScalar | Number") -> DualScalar:
    return _lift(x, math.tanh, lambda t: 1.0 / math.cosh(t) ** 2)


def dpow(x: "DualScalar | Number", k: Number) -> DualScalar:
    return as_dual(x) ** k


class Argument(float):
    """A real argument that also carries ``x - 1`` and ``x + 1`` accurately.

    Legendre and Ferrers functions are singular at ``x = +-1``.  When an
    argument is produced by a formula (for example a curve parametrization)
    its distance to ``+-1`` can be far more accurate than ``x`` itself.
    Code that needs those distances reads them through :func:`offsets`.
    """

    __slots__ = ("minus_one", "plus_one")

    def __new__(cls, value: float, minus_one: float | None = None,
                plus_one: float | None = None) -> "Argument":
        obj = super().__new__(cls, value)
        v = float(value)
        obj.minus_one = v - 1.0 if minus_one is None else float(minus_one)
        obj.plus_one = v + 1.0 if plus_one is None else float(plus_one)
        return obj

    def __neg__(self) -> "Argument":
        return Argument(-float(self), -self.plus_one, -self.minus_one)

    def __repr__(self) -> str:
        return f"Argument({float(self)!r}, minus_one={self.minus_one!r}, plus_one={self.plus_one!r})"

    def __reduce__(self):
        return (Argument, (float(self), self.minus_one, self.plus_one))


def offsets(x: float) -> tuple[float, float]:
    """``(x - 1, x + 1)``, taken from an :class:`Argument` when available."""
    if isinstance(x, Argument):
        return x.minus_one, x.plus_one
    x = float(x)
    return x - 1.0, x + 1.0
