"""Fourier coefficients of ``(1 + x cos phi)^nu`` and Laplace coefficients.

The coefficient of ``exp(i m phi)`` in ``(1 + x cos phi)^nu`` with
``0 < x < 1`` is

    (1 - x^2)^{nu/2} Gamma(nu+1) / Gamma(nu+m+1) P_nu^m(1 / sqrt(1 - x^2)),

with the Legendre function evaluated through the elliptic reduction
whenever the degree is of the form ``n +- 1/r``.

Laplace coefficients use the celestial-mechanics normalization

    b_s^{(m)}(alpha) = (1/pi) int_0^{2 pi} cos(m phi)
                       (1 + alpha^2 - 2 alpha cos phi)^{-s} dphi,

so that ``b_s^{(0)} -> 2`` as ``alpha -> 0``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from scipy import integrate

from .errors import DomainError, PoleError
from .indices import FunctionKind, LegendreIndex
from .numerics import Argument, gamma_fn, is_nonpositive_integer, rgamma
from .reduction import evaluate_ex

__all__ = [
    "LAPLACE_CONVENTION",
    "FourierSpec",
    "fourier_coefficient",
    "fourier_coefficient_ex",
    "fourier_coefficient_quadrature",
    "laplace_coefficient",
    "laplace_coefficient_ex",
    "laplace_coefficient_quadrature",
]

Real = Union[int, float, Fraction]

LAPLACE_CONVENTION = ("b_s^(m)(alpha) = (1/pi) * integral over [0, 2 pi] of "
                      "cos(m phi) (1 + alpha^2 - 2 alpha cos phi)^(-s) dphi")


@dataclass(frozen=True)
class FourierSpec:
    """Exponent ``nu``, harmonic ``m`` and expansion parameter ``x`` in ``(0, 1)``.

    ``nu`` may be a :class:`fractions.Fraction` so that its classification
    is exact.
    """

    nu: Real
    m: int
    x: float

    def __post_init__(self) -> None:
        if not 0.0 < self.x < 1.0:
            raise DomainError(f"x must lie in (0, 1), got {self.x!r}")
        if int(self.m) != self.m:
            raise DomainError(f"m must be an integer, got {self.m!r}")
        if is_nonpositive_integer(float(self.nu) + 1.0):
            raise PoleError(f"Gamma(nu+1) has a pole at nu={self.nu!r}")


def _legendre_argument(x: float) -> Argument:
    """``1 / sqrt(1 - x^2)`` with ``z - 1`` computed without cancellation."""
    c = math.sqrt((1.0 - x) * (1.0 + x))
    z = 1.0 / c
    return Argument(z, x * x / (c * (1.0 + c)), z + 1.0)


def fourier_coefficient_ex(spec: FourierSpec) -> tuple[float, str]:
    """Coefficient and the evaluation route of its Legendre factor."""
    nu = spec.nu
    m = int(spec.m)
    ratio = gamma_fn(float(nu) + 1.0) * rgamma(float(nu) + m + 1.0)
    if ratio == 0.0:
        return 0.0, "vanishing gamma ratio"
    z = _legendre_argument(spec.x)
    mu = Fraction(m)
    idx = LegendreIndex.of(nu if isinstance(nu, (Fraction, int)) else float(nu), mu)
    ev = evaluate_ex(FunctionKind.LEGENDRE_P, idx, z)
    scale = math.exp(0.5 * float(nu) * math.log1p(-spec.x * spec.x))
    return scale * ratio * ev.value, ev.method


def fourier_coefficient(spec: FourierSpec) -> float:
    """Coefficient of ``exp(i m phi)`` in ``(1 + x cos phi)^nu``.

    Raises
    ------
    PoleError
        If ``Gamma(nu + 1)`` is infinite.
    DomainError
        If ``x`` is outside ``(0, 1)`` or ``m`` is not an integer.
    """
    return fourier_coefficient_ex(spec)[0]


def fourier_coefficient_quadrature(spec: FourierSpec) -> float:
    """Independent adaptive-quadrature value of :func:`fourier_coefficient`."""
    nu, m, x = float(spec.nu), int(spec.m), spec.x
    val, _ = integrate.quad(lambda phi: math.cos(m * phi) * (1.0 + x * math.cos(phi)) ** nu,
                            0.0, math.pi, epsabs=1e-13, epsrel=1e-12, limit=200)
    return val / math.pi


def _laplace_check(s: Real, m: int, alpha: float) -> None:
    if not float(s) > 0.0:
        raise DomainError(f"s must be positive, got {s!r}")
    if int(m) != m or m < 0:
        raise DomainError(f"m must be a nonnegative integer, got {m!r}")
    if not 0.0 < alpha < 1.0:
        raise DomainError(f"alpha must lie in (0, 1), got {alpha!r}")


def laplace_coefficient_ex(s: Real, m: int, alpha: float) -> tuple[float, str]:
    """Laplace coefficient and the evaluation route of its Legendre factor."""
    _laplace_check(s, m, alpha)
    q = 1.0 + alpha * alpha
    x = 2.0 * alpha / q
    # 1 + a^2 - 2 a cos(phi) = q (1 + x cos(phi + pi)); the shift gives (-1)^m
    nu = -s if isinstance(s, (Fraction, int)) else -float(s)
    c, method = fourier_coefficient_ex(FourierSpec(nu, int(m), x))
    sign = -1.0 if m % 2 else 1.0
    return 2.0 * q ** (-float(s)) * sign * c, method


def laplace_coefficient(s: Real, m: int, alpha: float) -> float:
    """Laplace coefficient ``b_s^{(m)}(alpha)`` (see :data:`LAPLACE_CONVENTION`).

    Parameters
    ----------
    s : real or Fraction
        Positive exponent; ``n +- 1/r`` values use the elliptic reduction.
    m : int
        Harmonic, ``m >= 0``.
    alpha : float
        Ratio in ``(0, 1)``.

    Raises
    ------
    DomainError
        For inputs outside these ranges.
    """
    return laplace_coefficient_ex(s, m, alpha)[0]


def laplace_coefficient_quadrature(s: Real, m: int, alpha: float) -> float:
    """Independent adaptive-quadrature value of :func:`laplace_coefficient`."""
    _laplace_check(s, m, alpha)
    s = float(s)
    val, _ = integrate.quad(
        lambda phi: math.cos(m * phi) * (1.0 + alpha * alpha - 2.0 * alpha * math.cos(phi)) ** -s,
        0.0, math.pi, epsabs=1e-13, epsrel=1e-12, limit=200)
    return 2.0 * val / math.pi
