"""Exception hierarchy shared by every evaluation route."""

from __future__ import annotations

__all__ = [
    "EllipLegError",
    "DomainError",
    "PoleError",
    "ConvergenceError",
    "UnsupportedIndexError",
    "SingularLadderError",
    "StabilityError",
    "DegenerateReflectionError",
    "DegenerateParameterError",
    "UnsupportedCurveError",
    "NegativeRadicandError",
    "InternalError",
]


class EllipLegError(Exception):
    """Base class for all library errors."""


class DomainError(EllipLegError, ValueError):
    """An argument lies outside the domain of the requested function."""


class PoleError(EllipLegError, ValueError):
    """A gamma-type factor is evaluated at (or within tolerance of) a pole."""


class ConvergenceError(EllipLegError, ArithmeticError):
    """A series or iteration did not reach its tolerance within its budget."""


class UnsupportedIndexError(EllipLegError, ValueError):
    """The requested (degree, order) pair has no supported evaluation route."""


class SingularLadderError(EllipLegError, ArithmeticError):
    """A ladder step would divide by a vanishing bracket constant."""


class StabilityError(EllipLegError, ValueError):
    """The requested recurrence chain exceeds the stability budget."""


class DegenerateReflectionError(EllipLegError, ArithmeticError):
    """A coefficient needed to solve a reflection formula vanishes."""


class DegenerateParameterError(EllipLegError, ValueError):
    """An identity parameter sits at a singular value of a constant factor."""


class UnsupportedCurveError(EllipLegError, ValueError):
    """The curve does not carry the requested piece of data."""


class NegativeRadicandError(EllipLegError, ArithmeticError):
    """A radicand that is nonnegative in exact arithmetic came out negative."""


class InternalError(EllipLegError, RuntimeError):
    """An internal self-consistency check failed."""
