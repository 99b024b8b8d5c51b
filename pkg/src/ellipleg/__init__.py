"""Legendre and Ferrers functions of fractional degree via complete elliptic integrals.

Quick start
-----------
>>> from fractions import Fraction
>>> from ellipleg import FunctionKind, LegendreIndex, evaluate
>>> idx = LegendreIndex.of(Fraction(-1, 4), Fraction(0))
>>> round(evaluate(FunctionKind.LEGENDRE_P, idx, 1.5), 12)
0.958606919329

The package layers are:

* :mod:`ellipleg.numerics` - gamma, AGM-based ``K``/``E`` and dual numbers
* :mod:`ellipleg.hypergeom` - an independent hypergeometric series oracle
* :mod:`ellipleg.kernel` - half-odd degree functions as ``K``/``E`` combinations
* :mod:`ellipleg.curves` - the algebraic curves linking identity arguments
* :mod:`ellipleg.identities` - the executable identity catalogue
* :mod:`ellipleg.reduction` - the fractional-degree reduction and dispatcher
* :mod:`ellipleg.closed_forms` - radical closed forms
* :mod:`ellipleg.applications` - Fourier and Laplace coefficients
* :mod:`ellipleg.checks` - the acceptance criteria
"""

from __future__ import annotations

from ._kernels import BACKEND
from .applications import FourierSpec, fourier_coefficient, laplace_coefficient
from .closed_forms import (ferrers_p_m16_m14, legendre_p_m16_m14, octahedral_2f1,
                           qhat_m14_m12, qhat_m14_m13, thm71_constant)
from .curves import CurveId, curve_point
from .errors import (ConvergenceError, DegenerateParameterError, DegenerateReflectionError,
                     DomainError, EllipLegError, InternalError, NegativeRadicandError,
                     PoleError, SingularLadderError, StabilityError, UnsupportedCurveError,
                     UnsupportedIndexError)
from .hypergeom import gauss_2f1, oracle_legendre
from .identities import catalogue, get_record, identity_sides
from .indices import FunctionKind, LegendreIndex, classify
from .kernel import EllipticCombination, eval_classical
from .reduction import eval_fractional, evaluate, evaluate_ex

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ConvergenceError",
    "CurveId",
    "DegenerateParameterError",
    "DegenerateReflectionError",
    "DomainError",
    "EllipLegError",
    "EllipticCombination",
    "FourierSpec",
    "FunctionKind",
    "InternalError",
    "LegendreIndex",
    "NegativeRadicandError",
    "PoleError",
    "SingularLadderError",
    "StabilityError",
    "UnsupportedCurveError",
    "UnsupportedIndexError",
    "catalogue",
    "classify",
    "curve_point",
    "eval_classical",
    "eval_fractional",
    "evaluate",
    "evaluate_ex",
    "ferrers_p_m16_m14",
    "fourier_coefficient",
    "gauss_2f1",
    "get_record",
    "identity_sides",
    "laplace_coefficient",
    "legendre_p_m16_m14",
    "octahedral_2f1",
    "oracle_legendre",
    "qhat_m14_m12",
    "qhat_m14_m13",
    "thm71_constant",
]
