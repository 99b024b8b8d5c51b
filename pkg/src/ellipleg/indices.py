"""Function kinds and (degree, order) indices with their classification."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Union

from .errors import DomainError, UnsupportedIndexError
from .numerics import Argument, offsets

__all__ = [
    "FunctionKind",
    "LegendreIndex",
    "Classification",
    "classify",
    "validate_index",
    "check_point",
    "RATIONAL_TOL",
]

RATIONAL_TOL = 1e-12
SIGNATURES = (2, 3, 4, 6)

Real = Union[int, float, Fraction]


class FunctionKind(str, enum.Enum):
    """Which solution of the Legendre equation is meant.

    Legendre kinds live on ``(1, inf)``; Ferrers kinds on ``(-1, 1)``.
    ``FERRERS_PBAR`` is the reflected Ferrers function ``P(-x)`` and
    ``LEGENDRE_PTILDE`` is the auxiliary combination of ``P`` and ``Qhat``
    defined in :func:`ellipleg.kernel.aux_tildep`.
    """

    LEGENDRE_P = "legendre-p"
    LEGENDRE_QHAT = "legendre-qhat"
    FERRERS_P = "ferrers-p"
    FERRERS_Q = "ferrers-q"
    FERRERS_PBAR = "ferrers-pbar"
    LEGENDRE_PTILDE = "legendre-ptilde"

    @property
    def is_legendre(self) -> bool:
        return self in (FunctionKind.LEGENDRE_P, FunctionKind.LEGENDRE_QHAT,
                        FunctionKind.LEGENDRE_PTILDE)

    @property
    def is_ferrers(self) -> bool:
        return not self.is_legendre

    @property
    def is_second_kind(self) -> bool:
        """True for the kinds normalized with ``Gamma(nu + mu + 1)``."""
        return self in (FunctionKind.LEGENDRE_QHAT, FunctionKind.FERRERS_Q,
                        FunctionKind.LEGENDRE_PTILDE)


def check_point(kind: FunctionKind, point: float) -> float:
    """Validate that ``point`` lies in the open interval of ``kind``.

    An :class:`~ellipleg.numerics.Argument` is returned unchanged so that
    its accurate offsets survive; anything else comes back as a float.
    """
    x = float(point)
    if not math.isfinite(x):
        raise DomainError(f"argument must be finite, got {point!r}")
    below, above = offsets(point)
    if kind.is_legendre:
        if not below > 0.0:
            raise DomainError(f"{kind.value} needs an argument in (1, inf), got {x!r}")
    elif not (below < 0.0 < above):
        raise DomainError(f"{kind.value} needs an argument in (-1, 1), got {x!r}")
    return point if isinstance(point, Argument) else x


@dataclass(frozen=True)
class Classification:
    """Where a degree sits relative to the elliptic-reducible families.

    ``tag`` is ``"classical"`` for half-odd-integer degree, ``"fractional"``
    for ``nu = n + sign/r`` with ``r`` in {3, 4, 6}, else ``"general"``.
    For classical degrees ``r = 2``, ``sign = -1`` and ``n = nu + 1/2``.
    ``m`` is the integer order when the order is an integer.
    """

    tag: str
    r: Optional[int]
    n: Optional[int]
    sign: Optional[int]
    m: Optional[int]

    @property
    def elliptic(self) -> bool:
        """True when the kernel can reach this index (integer order needed)."""
        return self.tag in ("classical", "fractional") and self.m is not None


def _near_int(x: Real, tol: float = RATIONAL_TOL) -> Optional[int]:
    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else None
    n = round(float(x))
    return n if abs(float(x) - n) <= tol else None


def classify(nu: Real, mu: Real) -> Classification:
    """Classify a degree/order pair.

    Exact ``Fraction`` inputs are classified exactly; floats with tolerance
    ``1e-12``.
    """
    m = _near_int(mu)
    for r in SIGNATURES:
        for sign in (-1, 1):
            if r == 2 and sign == 1:
                continue
            offset = Fraction(sign, r)
            if isinstance(nu, Fraction):
                n = _near_int(nu - offset)
            else:
                n = _near_int(float(nu) - sign / r)
            if n is not None:
                tag = "classical" if r == 2 else "fractional"
                return Classification(tag, r, n, sign, m)
    return Classification("general", None, None, None, m)


@dataclass(frozen=True)
class LegendreIndex:
    """Degree ``nu`` and order ``mu``.

    Either may be given as a :class:`fractions.Fraction`, in which case the
    classification is exact.  Floats are classified with tolerance ``1e-12``.
    """

    nu: float
    mu: float
    exact_nu: Optional[Fraction] = field(default=None, compare=False, repr=False)
    exact_mu: Optional[Fraction] = field(default=None, compare=False, repr=False)

    @classmethod
    def of(cls, nu: Real, mu: Real) -> "LegendreIndex":
        return cls(float(nu), float(mu),
                   nu if isinstance(nu, Fraction) else None,
                   mu if isinstance(mu, Fraction) else None)

    @property
    def classification(self) -> Classification:
        nu = self.exact_nu if self.exact_nu is not None else self.nu
        mu = self.exact_mu if self.exact_mu is not None else self.mu
        return classify(nu, mu)

    def shifted(self, dnu: int = 0, dmu: int = 0) -> "LegendreIndex":
        """Index moved by integer steps in degree and order."""
        en = self.exact_nu + dnu if self.exact_nu is not None else None
        em = self.exact_mu + dmu if self.exact_mu is not None else None
        return LegendreIndex(self.nu + dnu, self.mu + dmu, en, em)

    def reflected(self) -> "LegendreIndex":
        """Index with degree ``-nu - 1``."""
        en = -self.exact_nu - 1 if self.exact_nu is not None else None
        return LegendreIndex(-self.nu - 1.0, self.mu, en, self.exact_mu)

    def negated_order(self) -> "LegendreIndex":
        em = -self.exact_mu if self.exact_mu is not None else None
        return LegendreIndex(self.nu, -self.mu, self.exact_nu, em)


def validate_index(kind: FunctionKind, idx: LegendreIndex) -> None:
    """Reject indices at which ``kind`` is undefined.

    Second-kind functions carry a ``Gamma(nu + mu + 1)`` factor and are
    rejected when ``nu + mu`` is a negative integer, including the
    exceptional half-odd sub-cases whose limiting values are not supported.
    """
    if not (math.isfinite(idx.nu) and math.isfinite(idx.mu)):
        raise DomainError("degree and order must be finite")
    if kind.is_second_kind:
        if idx.exact_nu is not None and idx.exact_mu is not None:
            s = idx.exact_nu + idx.exact_mu
            bad = s.denominator == 1 and s < 0
        else:
            s = idx.nu + idx.mu
            n = round(s)
            bad = n < 0 and abs(s - n) <= RATIONAL_TOL
        if bad:
            raise UnsupportedIndexError(
                f"{kind.value} is undefined when nu + mu is a negative integer "
                f"(nu={idx.nu!r}, mu={idx.mu!r})")
