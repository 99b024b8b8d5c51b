"""Series-based reference evaluator for 2F1 and Legendre/Ferrers functions.

Nothing here touches elliptic integrals or ladder recurrences, so the
values serve as an independent check on the production kernel.

Routing for ``2F1(a, b; c; x)`` with real parameters and ``x < 1``:

* terminating series when ``a`` or ``b`` is a non-positive integer;
* the defining series for ``-1/2 <= x <= 3/4``;
* a Pfaff transformation ``x -> x/(x-1)`` for ``x < -1/2``;
* the connection formula about ``x = 1`` for ``3/4 < x < 1``, with the
  logarithmic form when ``c - a - b`` is an integer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.special import psi

from . import _kernels
from .errors import ConvergenceError, DomainError, PoleError
from .indices import FunctionKind, LegendreIndex, check_point, validate_index
from .numerics import gamma_fn, is_nonpositive_integer, offsets, rgamma

__all__ = [
    "gauss_2f1",
    "hyp2f1_regularized",
    "oracle_legendre",
    "oracle_legendre_ex",
    "OracleValue",
]

SERIES_TOL = 1e-17
SERIES_RUN = 10
SERIES_MAX_TERMS = 100_000
INTEGER_GAP_TOL = 1e-12
# Ferrers Q switches to order perturbation when both of its closed
# combinations would divide by a sine smaller than this.
_FERRERS_Q_SINE_FLOOR = 1e-3
_PERTURB_STEP = 1e-3
# Past this point the connection formula about x = 1 cancels less than
# the defining series loses to slow convergence.
_SERIES_UPPER = 0.75


def _series(a: float, b: float, c: float, x: float) -> float:
    val, _, ok = _kernels.series_2f1(a, b, c, x, SERIES_TOL, SERIES_RUN, SERIES_MAX_TERMS)
    if not ok:
        raise ConvergenceError(f"2F1 series did not converge for ({a}, {b}; {c}; {x})")
    return val


def _terminating(a: float, b: float) -> bool:
    return is_nonpositive_integer(a) or is_nonpositive_integer(b)


def _poly(a: float, b: float, c: float, x: float) -> float:
    n_max = -round(a) if is_nonpositive_integer(a) else -round(b)
    if is_nonpositive_integer(a) and is_nonpositive_integer(b):
        n_max = min(-round(a), -round(b))
    total = 1.0
    term = 1.0
    for n in range(n_max):
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * x
        total += term
    return total


def _poch(a: float, n: int) -> float:
    out = 1.0
    for k in range(n):
        out *= a + k
    return out


def _f(a: float, b: float, c: float, x: float, y: float | None = None) -> float:
    """2F1 for ``c`` off the poles and ``x < 1``; ``y`` is ``1 - x`` if known better."""
    if x == 0.0:
        return 1.0
    if _terminating(a, b):
        return _poly(a, b, c, x)
    if -0.5 <= x <= _SERIES_UPPER:
        return _series(a, b, c, x)
    if y is None:
        y = 1.0 - x
    if x < -0.5:
        w = -x / y
        # either Pfaff form works; prefer one that terminates
        if is_nonpositive_integer(c - a):
            return y ** (-b) * _f(c - a, b, c, w, 1.0 / y)
        return y ** (-a) * _f(a, c - b, c, w, 1.0 / y)
    return _connection(a, b, c, y)


def _connection(a: float, b: float, c: float, y: float) -> float:
    """Connection formula about ``x = 1`` for ``3/4 < x < 1``, in ``y = 1 - x``."""
    s = c - a - b
    k = round(s)
    gc = gamma_fn(c)
    if abs(s - k) > INTEGER_GAP_TOL:
        t1 = 0.0
        w1 = rgamma(c - a) * rgamma(c - b)
        if w1 != 0.0:
            t1 = gamma_fn(s) * w1 * _f(a, b, 1.0 - s, y)
        t2 = 0.0
        w2 = rgamma(a) * rgamma(b)
        if w2 != 0.0:
            t2 = y ** s * gamma_fn(-s) * w2 * _f(c - a, c - b, 1.0 + s, y)
        return gc * (t1 + t2)
    return gc * _log_connection(a, b, int(k), y)


def _log_series(a: float, b: float, m: int, y: float) -> float:
    val, _, ok = _kernels.log_series_2f1(
        a, b, m, y, math.log(y),
        float(psi(1.0)), float(psi(m + 1.0)), float(psi(a)), float(psi(b)),
        SERIES_TOL, SERIES_RUN, SERIES_MAX_TERMS)
    if not ok:
        raise ConvergenceError("logarithmic 2F1 connection series did not converge")
    return val


def _log_connection(a: float, b: float, k: int, y: float) -> float:
    """``2F1(a, b; a+b+k; 1-y) / Gamma(a+b+k)`` for integer ``k``."""
    if k >= 0:
        m = k
        finite = 0.0
        if m > 0:
            w = rgamma(a + m) * rgamma(b + m)
            if w != 0.0:
                acc = 0.0
                term = 1.0
                for n in range(m):
                    if n:
                        term *= (a + n - 1) * (b + n - 1) / (n * (n - m)) * y
                    acc += term
                finite = math.gamma(m) * w * acc
        w = rgamma(a) * rgamma(b)
        tail = 0.0
        if w != 0.0:
            tail = (-y) ** m * w * _log_series(a + m, b + m, m, y)
        return finite - tail
    m = -k
    w = rgamma(a) * rgamma(b)
    finite = 0.0
    if w != 0.0:
        acc = 0.0
        term = 1.0
        for n in range(m):
            if n:
                term *= (a - m + n - 1) * (b - m + n - 1) / (n * (n - m)) * y
            acc += term
        finite = math.gamma(m) * w * y ** (-m) * acc
    w = rgamma(a - m) * rgamma(b - m)
    tail = 0.0
    if w != 0.0:
        tail = (-1) ** m * w * _log_series(a, b, m, y)
    return finite - tail


def _check_x(c: float, a: float, b: float, x: float, y: float | None = None) -> float:
    x = float(x)
    if not math.isfinite(x):
        raise DomainError(f"2F1 argument must be finite, got {x!r}")
    supplied = y is not None
    y = 1.0 - x if y is None else y
    if x >= 1.0 or y <= 0.0:
        raise DomainError(f"2F1 argument must be < 1, got {x!r}")
    # without an accurate complement the log-singular regime is refused
    if not supplied and y < 1e-8 and c - a - b <= 0.0 and not _terminating(a, b):
        raise DomainError(f"2F1 argument {x!r} too close to 1 for c-a-b <= 0")
    return x


def hyp2f1_regularized(a: float, b: float, c: float, x: float,
                       complement: float | None = None) -> float:
    """Regularized Gauss function ``2F1(a, b; c; x) / Gamma(c)``.

    Defined for every real ``c``; at ``c = -n`` it equals
    ``(a)_{n+1} (b)_{n+1} / (n+1)! * x**(n+1) * 2F1(a+n+1, b+n+1; n+2; x)``.
    ``complement`` may supply ``1 - x`` when it is known more accurately.
    """
    a, b, c = float(a), float(b), float(c)
    x = _check_x(c, a, b, x, complement)
    if is_nonpositive_integer(c):
        n = -round(c)
        coef = _poch(a, n + 1) * _poch(b, n + 1) / math.factorial(n + 1)
        if coef == 0.0 or x == 0.0:
            return 0.0
        return coef * x ** (n + 1) * _f(a + n + 1, b + n + 1, n + 2.0, x, complement)
    return rgamma(c) * _f(a, b, c, x, complement)


def gauss_2f1(a: float, b: float, c: float, x: float,
              complement: float | None = None) -> float:
    """Gauss hypergeometric function ``2F1(a, b; c; x)`` for real ``x < 1``.

    Parameters
    ----------
    a, b, c : float
        Parameters; ``c`` must not be a non-positive integer.
    x : float
        Argument, ``x < 1``.
    complement : float, optional
        ``1 - x`` when known more accurately than by subtraction.

    Raises
    ------
    PoleError
        If ``c`` is a non-positive integer.
    DomainError
        If ``x >= 1`` or too close to 1 for a divergent case.
    ConvergenceError
        If a series exhausts its term budget.

    Examples
    --------
    >>> abs(gauss_2f1(1, 1, 2, -1.0) - math.log(2.0)) < 1e-15
    True
    """
    a, b, c = float(a), float(b), float(c)
    if is_nonpositive_integer(c):
        raise PoleError(f"2F1 is undefined for c={c!r}")
    x = _check_x(c, a, b, x, complement)
    return _f(a, b, c, x, complement)


@dataclass(frozen=True)
class OracleValue:
    """Oracle result; ``reduced_precision`` marks the perturbation route."""

    value: float
    reduced_precision: bool = False


def _legendre_p(nu: float, mu: float, z: float) -> float:
    zm, zp = offsets(z)
    return (zp / zm) ** (0.5 * mu) * hyp2f1_regularized(
        -nu, nu + 1.0, 1.0 - mu, -0.5 * zm, 0.5 * zp)


def _ferrers_p(nu: float, mu: float, x: float) -> float:
    xm, xp = offsets(x)
    return (xp / -xm) ** (0.5 * mu) * hyp2f1_regularized(
        -nu, nu + 1.0, 1.0 - mu, -0.5 * xm, 0.5 * xp)


def _legendre_qhat(nu: float, mu: float, z: float) -> float:
    # series about infinity: Gamma(nu+mu+1) times the Olver-normalized Q
    zm, zp = offsets(z)
    z = float(z)
    pre = (math.sqrt(math.pi) * gamma_fn(nu + mu + 1.0)
           * (zm * zp) ** (0.5 * mu)
           / (2.0 ** (nu + 1.0) * z ** (nu + mu + 1.0)))
    f = hyp2f1_regularized(0.5 * (nu + mu) + 1.0, 0.5 * (nu + mu + 1.0), nu + 1.5,
                           1.0 / (z * z), zm * zp / (z * z))
    return pre * f


def _ferrers_q_direct(nu: float, mu: float, x: float, force: bool = False) -> float | None:
    s_num = math.sin((nu + mu) * math.pi)
    s_ord = math.sin(mu * math.pi)
    near_pole = round(nu + mu) < 0
    if not force and not near_pole and max(abs(s_num), abs(s_ord)) < _FERRERS_Q_SINE_FLOOR:
        return None
    # close to a negative integer nu + mu the value is pole dominated and the
    # reflection numerator stays O(1), so the small divisor costs nothing
    if near_pole or abs(s_num) >= abs(s_ord):
        # reflection form: Q = [cos((nu+mu)pi) P(x) - P(-x)] (pi/2) / sin((nu+mu)pi)
        return (math.cos((nu + mu) * math.pi) * _ferrers_p(nu, mu, x)
                - _ferrers_p(nu, mu, -x)) * (0.5 * math.pi) / s_num
    # order-pair form: combination of P^mu and P^-mu
    g = gamma_fn(nu + mu + 1.0) * rgamma(nu - mu + 1.0)
    return (0.5 * math.pi / s_ord) * (math.cos(mu * math.pi) * _ferrers_p(nu, mu, x)
                                       - g * _ferrers_p(nu, -mu, x))


def _ferrers_q(nu: float, mu: float, x: float) -> OracleValue:
    direct = _ferrers_q_direct(nu, mu, x)
    if direct is not None:
        return OracleValue(direct)
    h = _PERTURB_STEP

    def sym(step: float) -> float:
        hi = _ferrers_q_direct(nu, mu + step, x, force=True)
        lo = _ferrers_q_direct(nu, mu - step, x, force=True)
        return 0.5 * (hi + lo)

    # Richardson on symmetric means cancels the h**2 term
    s1, s2 = sym(h), sym(0.5 * h)
    return OracleValue((4.0 * s2 - s1) / 3.0, reduced_precision=True)


def oracle_legendre_ex(kind: FunctionKind, idx: LegendreIndex, point: float) -> OracleValue:
    """Evaluate a Legendre or Ferrers function from its hypergeometric form.

    Returns an :class:`OracleValue` whose flag marks values obtained by
    order perturbation and extrapolation (accurate to about 1e-10 rather
    than working precision).
    """
    kind = FunctionKind(kind)
    x = check_point(kind, point)
    validate_index(kind, idx)
    nu, mu = idx.nu, idx.mu
    if kind is FunctionKind.LEGENDRE_P:
        return OracleValue(_legendre_p(nu, mu, x))
    if kind is FunctionKind.LEGENDRE_QHAT:
        return OracleValue(_legendre_qhat(nu, mu, x))
    if kind is FunctionKind.FERRERS_P:
        return OracleValue(_ferrers_p(nu, mu, x))
    if kind is FunctionKind.FERRERS_PBAR:
        return OracleValue(_ferrers_p(nu, mu, -x))
    if kind is FunctionKind.FERRERS_Q:
        return _ferrers_q(nu, mu, x)
    if kind is FunctionKind.LEGENDRE_PTILDE:
        s = (nu + mu) * math.pi
        p = _legendre_p(nu, mu, x)
        q = _legendre_qhat(nu, mu, x)
        return OracleValue(math.cos(s) * p - (2.0 / math.pi) * math.cos(mu * math.pi) * math.sin(s) * q)
    raise DomainError(f"unknown function kind {kind!r}")


def oracle_legendre(kind: FunctionKind, idx: LegendreIndex, point: float) -> float:
    """Value-only form of :func:`oracle_legendre_ex`.

    Examples
    --------
    >>> from ellipleg.indices import LegendreIndex, FunctionKind
    >>> round(oracle_legendre(FunctionKind.LEGENDRE_P, LegendreIndex(2.0, 0.0), 2.0), 12)
    5.5
    """
    return oracle_legendre_ex(kind, idx, point).value
