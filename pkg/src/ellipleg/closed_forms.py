"""Algebraic closed forms at degrees -1/6 and -1/4.

The brackets under the fourth roots are differences of nearly equal terms
near the singular endpoints.  Each is evaluated through an exact rewrite
(a triple-angle identity or a Cardano substitution) that makes the
positivity manifest and avoids the cancellation; the radicands are still
checked before any root is taken.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, InternalError, NegativeRadicandError
from .numerics import gamma_fn

__all__ = [
    "CardanoAux",
    "ferrers_p_m16_m14",
    "legendre_p_m16_m14",
    "qhat_m14_m13",
    "thm71_constant",
    "thm71_constant_forms",
    "qhat_m14_m12",
    "octahedral_2f1",
]

_PREFACTOR = 3.0 ** 0.75 / math.gamma(1.25)


def _root4(x: float, what: str) -> float:
    if not x >= 0.0:
        raise NegativeRadicandError(f"negative radicand {x!r} in {what}")
    return math.exp(0.25 * math.log(x)) if x > 0.0 else 0.0


def _sqrt(x: float, what: str) -> float:
    if not x >= 0.0:
        raise NegativeRadicandError(f"negative radicand {x!r} in {what}")
    return math.sqrt(x)


def _trig_bracket(theta: float) -> float:
    """``cos(theta/3) - sqrt(sin(theta) / (3 sin(theta/3)))``.

    With ``s = sin(theta/3)`` the ratio under the root is ``1 - 4 s**2/3``,
    so the bracket equals ``s**2 / (3 (cos(theta/3) + sqrt(1 - 4 s**2/3)))``.
    """
    s = math.sin(theta / 3.0)
    root = _sqrt(1.0 - 4.0 * s * s / 3.0, "sin(theta)/(3 sin(theta/3))")
    return s * s / (3.0 * (math.cos(theta / 3.0) + root))


def _hyp_bracket(xi: float) -> float:
    """``-cosh(xi/3) + sqrt(sinh(xi) / (3 sinh(xi/3)))``, rewritten likewise."""
    s = math.sinh(xi / 3.0)
    root = _sqrt(1.0 + 4.0 * s * s / 3.0, "sinh(xi)/(3 sinh(xi/3))")
    return s * s / (3.0 * (math.cosh(xi / 3.0) + root))


def ferrers_p_m16_m14(theta: float) -> float:
    """Ferrers ``P_{-1/6}^{-1/4}(cos theta)`` in radicals.

    ``3^{3/4} / Gamma(5/4) (sin theta)^{-1/4}
    [cos(theta/3) - sqrt(sin theta / (3 sin(theta/3)))]^{1/4}``

    Parameters
    ----------
    theta : float
        Angle in ``(0, pi)``.

    Raises
    ------
    DomainError
        Outside ``(0, pi)``.
    """
    if not 0.0 < theta < math.pi:
        raise DomainError(f"theta must lie in (0, pi), got {theta!r}")
    bracket = _root4(_trig_bracket(theta), "the trigonometric bracket")
    return _PREFACTOR * bracket / _root4(math.sin(theta), "sin(theta)")


def legendre_p_m16_m14(xi: float) -> float:
    """Legendre ``P_{-1/6}^{-1/4}(cosh xi)`` in radicals.

    ``3^{3/4} / Gamma(5/4) (sinh xi)^{-1/4}
    [-cosh(xi/3) + sqrt(sinh xi / (3 sinh(xi/3)))]^{1/4}``

    Raises
    ------
    DomainError
        Unless ``xi > 0``.
    """
    if not 0.0 < xi < math.inf:
        raise DomainError(f"xi must be positive and finite, got {xi!r}")
    bracket = _root4(_hyp_bracket(xi), "the hyperbolic bracket")
    return _PREFACTOR * bracket / _root4(math.sinh(xi), "sinh(xi)")


def thm71_constant_forms() -> tuple[float, float]:
    """Both closed forms of the prefactor of :func:`qhat_m14_m13`.

    ``3^{3/4} sqrt(pi/2) Gamma(5/12) / Gamma(5/4)`` and
    ``2^{3/4} 3^{9/8} Gamma(2/3) sqrt(sqrt(3) - 1)``.
    """
    first = 3.0 ** 0.75 * math.sqrt(0.5 * math.pi) * gamma_fn(5.0 / 12.0) / gamma_fn(1.25)
    second = 2.0 ** 0.75 * 3.0 ** 1.125 * gamma_fn(2.0 / 3.0) * math.sqrt(math.sqrt(3.0) - 1.0)
    return first, second


def thm71_constant() -> float:
    """Prefactor of :func:`qhat_m14_m13`, cross-checked between its two forms.

    Raises
    ------
    InternalError
        If the two forms differ by more than ``1e-12`` relative.
    """
    first, second = thm71_constant_forms()
    if abs(first - second) > 1e-12 * abs(first):
        raise InternalError(f"prefactor forms disagree: {first!r} vs {second!r}")
    return first


def qhat_m14_m13(xi: float) -> float:
    """``Qhat_{-1/4}^{-1/3}(coth xi)`` in radicals.

    ``C (sinh xi)^{1/4} [-cosh(xi/3) + sqrt(sinh xi / (3 sinh(xi/3)))]^{1/4}``
    with ``C`` from :func:`thm71_constant`.

    Raises
    ------
    DomainError
        Unless ``xi > 0``.
    """
    if not 0.0 < xi < math.inf:
        raise DomainError(f"xi must be positive and finite, got {xi!r}")
    bracket = _root4(_hyp_bracket(xi), "the hyperbolic bracket")
    return thm71_constant() * bracket * _root4(math.sinh(xi), "sinh(xi)")


def qhat_m14_m12(z: float) -> float:
    """``Qhat_{-1/4}^{-1/2}(z) = 4 sqrt(pi/2) [(z - sqrt(z^2-1)) / (z^2-1)]^{1/4}``.

    Raises
    ------
    DomainError
        Unless ``z > 1``.
    """
    if not 1.0 < z < math.inf:
        raise DomainError(f"z must exceed 1, got {z!r}")
    zm = z - 1.0
    w = zm * (z + 1.0)
    # z - sqrt(z^2 - 1) = 1 / (z + sqrt(z^2 - 1))
    inner = 1.0 / ((z + math.sqrt(w)) * w)
    return 4.0 * math.sqrt(0.5 * math.pi) * _root4(inner, "the algebraic bracket")


@dataclass(frozen=True)
class CardanoAux:
    """Cardano variable ``A = (sqrt(-2x) + sqrt(-2(x-1)))^2 / 2`` for ``x <= 0``.

    ``A - 1 = -2x + sqrt(-2x) sqrt(2 - 2x)`` is kept separately so that
    ``log A`` stays accurate as ``x -> 0``.
    """

    A: float
    A_minus_one: float

    @classmethod
    def of(cls, x: float) -> "CardanoAux":
        if not x <= 0.0:
            raise DomainError(f"the Cardano variable needs x <= 0, got {x!r}")
        am1 = -2.0 * x + math.sqrt(-2.0 * x) * math.sqrt(2.0 - 2.0 * x)
        return cls(1.0 + am1, am1)

    @property
    def third_log(self) -> float:
        """``log(A) / 3``."""
        return math.log1p(self.A_minus_one) / 3.0


def octahedral_2f1(x: float) -> float:
    """``2F1(1/6, 5/6; 5/4; x)`` for ``x <= 0`` in radicals.

    ``3^{3/4} (-2x)^{-1/4} [-(A^{1/3} + A^{-1/3})/2
    + sqrt((1 + A^{2/3} + A^{-2/3})/3)]^{1/4}`` with ``A`` from
    :class:`CardanoAux`.  Writing ``A^{1/3} = exp(l)`` the bracket is
    ``sinh(l)^2 / (3 (cosh(l) + sqrt((4 cosh(l)^2 - 1)/3)))``.

    Raises
    ------
    DomainError
        For ``x > 0``.
    """
    if x == 0.0:
        return 1.0
    aux = CardanoAux.of(x)
    l = aux.third_log
    ch, sh = math.cosh(l), math.sinh(l)
    root = _sqrt((4.0 * ch * ch - 1.0) / 3.0, "(1 + A^{2/3} + A^{-2/3})/3")
    bracket = sh * sh / (3.0 * (ch + root))
    return 3.0 ** 0.75 * _root4(bracket, "the Cardano bracket") / _root4(-2.0 * x, "-2x")
