"""Production kernel: half-odd-integer degree, integer order, via K and E.

Every value is carried as an :class:`EllipticCombination`, a linear
combination of ``K(m0), E(m0), K(1-m0), E(1-m0)`` whose coefficients are
:class:`DualScalar` pairs.  The ``v`` parts give the function value and
the ``d`` parts give its derivative with respect to the angle parameter
(``xi`` for ``z = cosh(xi)``, ``theta`` for ``x = cos(theta)``).

Ladder operators act linearly on (value, derivative).  Second derivatives
are removed with the angle forms of the Legendre equation::

    u'' = -coth(xi) u' + [nu (nu+1) + mu**2 / sinh(xi)**2] u
    u'' = -cot(theta) u' + [mu**2 / sin(theta)**2 - nu (nu+1)] u
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Union

from .errors import (DegenerateReflectionError, DomainError, PoleError,
                     SingularLadderError, StabilityError, UnsupportedIndexError)
from .hypergeom import oracle_legendre
from .indices import FunctionKind, LegendreIndex, check_point, validate_index
from .numerics import DualScalar, elliptic_ke, gamma_fn, offsets

__all__ = [
    "EllipticCombination",
    "PointGeometry",
    "geometry",
    "base_half_degree",
    "fundamental_qhat_exponential",
    "ladder_order",
    "ladder_degree",
    "eval_classical",
    "evaluate_component",
    "aux_barp",
    "aux_barp_combination",
    "aux_tildep",
    "reflect_degree",
    "reflect_degree_combination",
    "SHIFT_BUDGET",
    "MAX_CONDITION",
]

SHIFT_BUDGET = 12
MAX_CONDITION = 1e3
LADDER_TOL = 1e-12
_ZERO = DualScalar(0.0, 0.0)

_KERNEL_KINDS = (FunctionKind.LEGENDRE_P, FunctionKind.LEGENDRE_QHAT,
                 FunctionKind.FERRERS_P, FunctionKind.FERRERS_Q)


@dataclass(frozen=True)
class EllipticCombination:
    """``a K(m0) + b E(m0) + c K(1-m0) + e E(1-m0)`` with dual coefficients.

    Attributes
    ----------
    modulus : float
        The parameter ``m0``.
    complement : float
        ``1 - m0``, stored separately to keep precision near either end.
    coef_k, coef_e, coef_kc, coef_ec : DualScalar
        Coefficients of ``K(m0)``, ``E(m0)``, ``K(1-m0)``, ``E(1-m0)``.
        The ``v`` parts recompose the value, the ``d`` parts the derivative.
    parameter : str
        ``"xi"`` or ``"theta"``: the variable the derivative refers to.
    trace : tuple of str
        Human-readable record of how the combination was produced.
    """

    modulus: float
    complement: float
    coef_k: DualScalar = _ZERO
    coef_e: DualScalar = _ZERO
    coef_kc: DualScalar = _ZERO
    coef_ec: DualScalar = _ZERO
    parameter: str = "xi"
    trace: tuple[str, ...] = field(default=(), compare=False)

    @classmethod
    def from_coefficient_functions(cls, m: float, mc: float, dm: float,
                                   ck: DualScalar = _ZERO, ce: DualScalar = _ZERO,
                                   ckc: DualScalar = _ZERO, cec: DualScalar = _ZERO,
                                   parameter: str = "xi",
                                   trace: tuple[str, ...] = ()) -> "EllipticCombination":
        """Combination for ``sum c_i(t) B_i(m(t))`` with ``dm/dt = dm``.

        The inputs ``c_i`` are duals of the coefficient functions; the
        derivatives of ``K`` and ``E`` are folded back into the basis so
        that the result carries the derivative of the whole expression.
        """
        if m <= 0.0 or mc <= 0.0:
            raise DomainError("modulus must lie strictly inside (0, 1)")
        h = 0.5 * dm
        k_d = ck.d - h * (ck.v + ce.v) / m
        e_d = ce.d + h * (ck.v / (m * mc) + ce.v / m)
        kc_d = ckc.d + h * (ckc.v + cec.v) / mc
        ec_d = cec.d - h * (ckc.v / (mc * m) + cec.v / mc)
        return cls(m, mc,
                   DualScalar(ck.v, k_d), DualScalar(ce.v, e_d),
                   DualScalar(ckc.v, kc_d), DualScalar(cec.v, ec_d),
                   parameter, trace)

    def coefficients(self) -> tuple[DualScalar, DualScalar, DualScalar, DualScalar]:
        return self.coef_k, self.coef_e, self.coef_kc, self.coef_ec

    def basis(self) -> tuple[float, float, float, float]:
        """``(K(m0), E(m0), K(1-m0), E(1-m0))``; unused entries are 0."""
        k = e = kc = ec = 0.0
        if self.coef_k.v or self.coef_k.d or self.coef_e.v or self.coef_e.d:
            k, e = elliptic_ke(self.modulus, self.complement)
        if self.coef_kc.v or self.coef_kc.d or self.coef_ec.v or self.coef_ec.d:
            kc, ec = elliptic_ke(self.complement, self.modulus)
        return k, e, kc, ec

    def dual(self) -> DualScalar:
        """Recomposed ``(value, derivative)``."""
        b = self.basis()
        c = self.coefficients()
        v = sum(ci.v * bi for ci, bi in zip(c, b))
        d = sum(ci.d * bi for ci, bi in zip(c, b))
        return DualScalar(v, d)

    @property
    def value(self) -> float:
        return self.dual().v

    @property
    def condition(self) -> float:
        """Cancellation ratio ``sum |c_i B_i| / |sum c_i B_i|`` of the value.

        Rounding in the coefficients is amplified by about this factor, so
        a large ratio flags a recessive solution the recurrences cannot
        resolve in double precision.
        """
        b = self.basis()
        mag = sum(abs(ci.v * bi) for ci, bi in zip(self.coefficients(), b))
        v = abs(sum(ci.v * bi for ci, bi in zip(self.coefficients(), b)))
        if mag == 0.0:
            return 1.0
        return mag / v if v > 0.0 else math.inf

    @property
    def derivative(self) -> float:
        return self.dual().d

    def mix(self, a1: float, b1: float, a2: float, b2: float) -> "EllipticCombination":
        """Apply ``(F, F') -> (a1 F + b1 F', a2 F + b2 F')`` coefficientwise."""
        def one(c: DualScalar) -> DualScalar:
            return DualScalar(a1 * c.v + b1 * c.d, a2 * c.v + b2 * c.d)
        return EllipticCombination(self.modulus, self.complement,
                                   *(one(c) for c in self.coefficients()),
                                   parameter=self.parameter, trace=self.trace)

    def scale(self, s: float) -> "EllipticCombination":
        return self.mix(s, 0.0, 0.0, s)

    def combine(self, other: "EllipticCombination", wa: float = 1.0,
                wb: float = 1.0) -> "EllipticCombination":
        """``wa * self + wb * other``; both must share modulus and parameter."""
        if (abs(self.modulus - other.modulus) > 1e-15 * max(1.0, abs(self.modulus))
                or self.parameter != other.parameter):
            raise ValueError("combinations live on different moduli")
        coefs = [DualScalar(wa * x.v + wb * y.v, wa * x.d + wb * y.d)
                 for x, y in zip(self.coefficients(), other.coefficients())]
        return EllipticCombination(self.modulus, self.complement, *coefs,
                                   parameter=self.parameter, trace=self.trace)

    def with_trace(self, *steps: str) -> "EllipticCombination":
        return EllipticCombination(self.modulus, self.complement,
                                   *self.coefficients(), parameter=self.parameter,
                                   trace=self.trace + tuple(steps))

    def as_dict(self) -> dict:
        return {
            "modulus": self.modulus,
            "parameter": self.parameter,
            "coef_k": [self.coef_k.v, self.coef_k.d],
            "coef_e": [self.coef_e.v, self.coef_e.d],
            "coef_kc": [self.coef_kc.v, self.coef_kc.d],
            "coef_ec": [self.coef_ec.v, self.coef_ec.d],
        }


State = Union[DualScalar, EllipticCombination]


def _mix(state: State, a1: float, b1: float, a2: float, b2: float) -> State:
    if isinstance(state, EllipticCombination):
        return state.mix(a1, b1, a2, b2)
    return DualScalar(a1 * state.v + b1 * state.d, a2 * state.v + b2 * state.d)


@dataclass(frozen=True)
class PointGeometry:
    """Trigonometric data of an argument, computed without cancellation.

    For Legendre arguments ``z = cosh(xi)``: ``c = cosh``, ``s = sinh``.
    For Ferrers arguments ``x = cos(theta)``: ``c = cos``, ``s = sin``.
    ``m``/``mc`` are the fundamental moduli and ``dm`` is ``dm/dangle``.
    """

    legendre: bool
    c: float
    s: float
    angle: float
    m: float
    mc: float
    dm: float

    @property
    def cot(self) -> float:
        return self.c / self.s


def geometry(point: float, legendre: bool) -> PointGeometry:
    below, above = offsets(point)
    if legendre:
        if not below > 0.0:
            raise DomainError(f"Legendre argument must exceed 1, got {float(point)!r}")
        s = math.sqrt(below * above)
        m = below / above
        mc = 2.0 / above
        # m = tanh(xi/2)**2, so dm/dxi = tanh(xi/2) sech(xi/2)**2
        return PointGeometry(True, float(point), s, math.log1p(below + s), m, mc,
                             math.sqrt(m) * mc)
    if not below < 0.0 < above:
        raise DomainError(f"Ferrers argument must lie in (-1, 1), got {float(point)!r}")
    s = math.sqrt(-below * above)
    m = -0.5 * below
    mc = 0.5 * above
    # m = sin(theta/2)**2, so dm/dtheta = sin(theta)/2
    return PointGeometry(False, float(point), s,
                         2.0 * math.atan2(math.sqrt(m), math.sqrt(mc)), m, mc, 0.5 * s)


def base_half_degree(kind: FunctionKind, point: float) -> EllipticCombination:
    """Degree ``-1/2``, order 0 functions as elliptic combinations.

    * ``P(cosh xi)    = (2/pi) sech(xi/2) K(tanh(xi/2)**2)``
    * ``Qhat(cosh xi) = sech(xi/2) K(sech(xi/2)**2)``, the Landen image of
      ``2 exp(-xi/2) K(exp(-2 xi))`` that shares the modulus of ``P``
    * Ferrers ``P(cos theta) = (2/pi) K(sin(theta/2)**2)``
    * Ferrers ``Q(cos theta) = K(cos(theta/2)**2)``
    """
    kind = FunctionKind(kind)
    if kind not in _KERNEL_KINDS:
        raise UnsupportedIndexError(f"no fundamental representation for {kind.value}")
    check_point(kind, point)
    g = geometry(point, kind.is_legendre)
    m, mc = g.m, g.mc
    if kind is FunctionKind.LEGENDRE_P:
        sm, smc = math.sqrt(m), math.sqrt(mc)
        ck = DualScalar(2.0 / math.pi * smc, -smc * sm / math.pi)
        return EllipticCombination.from_coefficient_functions(
            m, mc, g.dm, ck=ck, parameter="xi", trace=("P_{-1/2}(cosh xi)",))
    if kind is FunctionKind.LEGENDRE_QHAT:
        sm, smc = math.sqrt(m), math.sqrt(mc)
        ckc = DualScalar(smc, -0.5 * smc * sm)
        return EllipticCombination.from_coefficient_functions(
            m, mc, g.dm, ckc=ckc, parameter="xi", trace=("Qhat_{-1/2}(cosh xi)",))
    if kind is FunctionKind.FERRERS_P:
        return EllipticCombination.from_coefficient_functions(
            m, mc, g.dm, ck=DualScalar(2.0 / math.pi, 0.0), parameter="theta",
            trace=("P_{-1/2}(cos theta)",))
    return EllipticCombination.from_coefficient_functions(
        m, mc, g.dm, ckc=DualScalar(1.0, 0.0), parameter="theta",
        trace=("Q_{-1/2}(cos theta)",))


def fundamental_qhat_exponential(z: float) -> float:
    """``Qhat_{-1/2}(cosh xi) = 2 exp(-xi/2) K(exp(-2 xi))`` evaluated directly."""
    check_point(FunctionKind.LEGENDRE_QHAT, z)
    xi = math.acosh(z)
    q = math.exp(-2.0 * xi)
    return 2.0 * math.exp(-0.5 * xi) * elliptic_ke(q, -math.expm1(-2.0 * xi))[0]


def _ladder_sign(kind: FunctionKind) -> float:
    return -1.0 if kind is FunctionKind.LEGENDRE_QHAT else 1.0


def ladder_order(kind: FunctionKind, state: State, idx: LegendreIndex,
                 direction: int, point: float,
                 geom: PointGeometry | None = None) -> tuple[State, LegendreIndex]:
    """Shift the order by ``direction`` (+1 or -1).

    ``state`` holds the value and angle derivative at ``idx``; either a
    :class:`DualScalar` or an :class:`EllipticCombination`.

    Raises
    ------
    SingularLadderError
        When lowering and ``(nu+1/2)**2 - (mu-1/2)**2`` vanishes.
    """
    kind = FunctionKind(kind)
    if kind not in _KERNEL_KINDS:
        raise UnsupportedIndexError(f"no order ladder for {kind.value}")
    if direction not in (1, -1):
        raise ValueError("direction must be +1 or -1")
    g = geom or geometry(point, kind.is_legendre)
    nu, mu = idx.nu, idx.mu
    lam = nu * (nu + 1.0)
    cot = g.cot
    inv_s2 = 1.0 / (g.s * g.s)
    if kind.is_legendre:
        sgn = _ladder_sign(kind)
        if direction == 1:
            out = _mix(state, -sgn * mu * cot, sgn,
                       sgn * (lam + mu * (mu + 1.0) * inv_s2), -sgn * (1.0 + mu) * cot)
        else:
            cm = _lowering_constant(nu, mu)
            w = sgn / cm
            out = _mix(state, w * mu * cot, w,
                       w * (lam + mu * (mu - 1.0) * inv_s2), w * (mu - 1.0) * cot)
    else:
        if direction == 1:
            out = _mix(state, -mu * cot, 1.0,
                       -lam + mu * (mu + 1.0) * inv_s2, -(1.0 + mu) * cot)
        else:
            cm = _lowering_constant(nu, mu)
            w = -1.0 / cm
            out = _mix(state, w * mu * cot, w,
                       w * (-lam + mu * (mu - 1.0) * inv_s2), w * (mu - 1.0) * cot)
    return out, idx.shifted(dmu=direction)


def _lowering_constant(nu: float, mu: float) -> float:
    cm = (nu + 0.5) ** 2 - (mu - 0.5) ** 2
    if abs(cm) <= LADDER_TOL:
        raise SingularLadderError(
            f"order-lowering constant vanishes at nu={nu!r}, mu={mu!r}")
    return cm


def ladder_degree(kind: FunctionKind, state: State, idx: LegendreIndex,
                  direction: int, point: float,
                  geom: PointGeometry | None = None) -> tuple[State, LegendreIndex]:
    """Shift the degree by ``direction`` (+1 or -1).

    Uses ``[-s D - (1/2 +- (nu+1/2)) c] F = [-+(nu+1/2) + (mu-1/2)] F_{nu+-1}``
    with ``(c, s) = (cosh, sinh)`` or ``(cos, sin)``.

    Raises
    ------
    SingularLadderError
        When the bracket constant on the right vanishes.
    """
    kind = FunctionKind(kind)
    if kind not in _KERNEL_KINDS:
        raise UnsupportedIndexError(f"no degree ladder for {kind.value}")
    if direction not in (1, -1):
        raise ValueError("direction must be +1 or -1")
    g = geom or geometry(point, kind.is_legendre)
    nu, mu = idx.nu, idx.mu
    h = nu + 0.5
    kappa = 0.5 + direction * h
    beta = -direction * h + (mu - 0.5)
    if abs(beta) <= LADDER_TOL:
        raise SingularLadderError(
            f"degree ladder constant vanishes at nu={nu!r}, mu={mu!r}, direction={direction}")
    lam = nu * (nu + 1.0)
    c, s = g.c, g.s
    if kind.is_legendre:
        a2 = -((lam + kappa) * s + mu * mu / s) / beta
    else:
        a2 = ((lam + kappa) * s - mu * mu / s) / beta
    out = _mix(state, -kappa * c / beta, -s / beta, a2, -kappa * c / beta)
    return out, idx.shifted(dnu=direction)


def _require_classical(idx: LegendreIndex) -> tuple[int, int]:
    cl = idx.classification
    if cl.tag != "classical" or cl.m is None:
        raise UnsupportedIndexError(
            f"kernel needs half-odd-integer degree and integer order, got ({idx.nu}, {idx.mu})")
    return cl.n, cl.m


def eval_classical(kind: FunctionKind, idx: LegendreIndex, point: float) -> EllipticCombination:
    """Evaluate a kernel kind at half-odd-integer degree and integer order.

    Starts from the degree ``-1/2`` representation, applies order ladders
    at ``nu = -1/2`` and then degree ladders.

    Raises
    ------
    StabilityError
        If either shift exceeds the budget of 12 steps.
    """
    kind = FunctionKind(kind)
    if kind not in _KERNEL_KINDS:
        raise UnsupportedIndexError(f"kernel does not evaluate {kind.value}")
    check_point(kind, point)
    validate_index(kind, idx)
    n, m = _require_classical(idx)
    # with nu = n - 1/2, n counts degree steps from -1/2
    if abs(n) > SHIFT_BUDGET or abs(m) > SHIFT_BUDGET:
        raise StabilityError(
            f"ladder chain of {abs(m)} order and {abs(n)} degree steps exceeds budget {SHIFT_BUDGET}")
    g = geometry(point, kind.is_legendre)
    state = base_half_degree(kind, point)
    cur = LegendreIndex(-0.5, 0.0)
    step = 1 if m > 0 else -1
    for _ in range(abs(m)):
        state, cur = ladder_order(kind, state, cur, step, point, g)
    step = 1 if n > 0 else -1
    for _ in range(abs(n)):
        state, cur = ladder_degree(kind, state, cur, step, point, g)
    return state.with_trace(f"order ladder x{m:+d}", f"degree ladder x{n:+d}")


def evaluate_component(kind: FunctionKind, idx: LegendreIndex, point: float) -> float:
    """Kernel value when the index is classical, else the series oracle.

    The oracle also takes over when the kernel's cancellation ratio exceeds
    :data:`MAX_CONDITION`.
    """
    kind = FunctionKind(kind)
    if kind in _KERNEL_KINDS:
        cl = idx.classification
        if cl.tag == "classical" and cl.m is not None and abs(cl.n) <= SHIFT_BUDGET \
                and abs(cl.m) <= SHIFT_BUDGET:
            comb = eval_classical(kind, idx, point)
            if comb.condition <= MAX_CONDITION:
                return comb.value
    if kind is FunctionKind.FERRERS_PBAR:
        return evaluate_component(FunctionKind.FERRERS_P, idx, -check_point(kind, point))
    if kind is FunctionKind.LEGENDRE_PTILDE:
        return aux_tildep(idx, point)
    return oracle_legendre(kind, idx, point)


def aux_barp(idx: LegendreIndex, point: float) -> float:
    """Reflected Ferrers function ``Pbar(x) = P(-x)``.

    This is the production route.  :func:`aux_barp_combination` gives the
    equivalent ``cos[(nu+mu) pi] P - (2/pi) sin[(nu+mu) pi] Q`` form.
    """
    x = check_point(FunctionKind.FERRERS_PBAR, point)
    return evaluate_component(FunctionKind.FERRERS_P, idx, -x)


def aux_barp_combination(idx: LegendreIndex, point: float) -> float:
    """``cos[(nu+mu) pi] P(x) - (2/pi) sin[(nu+mu) pi] Q(x)`` (self-check form)."""
    x = check_point(FunctionKind.FERRERS_PBAR, point)
    s = (idx.nu + idx.mu) * math.pi
    p = evaluate_component(FunctionKind.FERRERS_P, idx, x)
    sin_s = math.sin(s)
    if sin_s == 0.0:
        return math.cos(s) * p
    q = evaluate_component(FunctionKind.FERRERS_Q, idx, x)
    return math.cos(s) * p - (2.0 / math.pi) * sin_s * q


def aux_tildep(idx: LegendreIndex, point: float) -> float:
    """Auxiliary Legendre function ``cos[(nu+mu) pi] P - (2/pi) cos(mu pi) sin[(nu+mu) pi] Qhat``."""
    z = check_point(FunctionKind.LEGENDRE_PTILDE, point)
    validate_index(FunctionKind.LEGENDRE_PTILDE, idx)
    s = (idx.nu + idx.mu) * math.pi
    p = evaluate_component(FunctionKind.LEGENDRE_P, idx, z)
    w = (2.0 / math.pi) * math.cos(idx.mu * math.pi) * math.sin(s)
    if w == 0.0:
        return math.cos(s) * p
    q = evaluate_component(FunctionKind.LEGENDRE_QHAT, idx, z)
    return math.cos(s) * p - w * q


def _reflection_weights(kind: FunctionKind, idx: LegendreIndex) -> tuple[float, float, LegendreIndex]:
    """Weights ``(w_f, w_p, pidx)`` with ``F_{-nu-1} = w_f F_nu + w_p P_pidx``."""
    nu, mu = idx.nu, idx.mu
    if kind is FunctionKind.LEGENDRE_QHAT:
        # Qhat_{-nu-1} - Qhat_nu = cos(nu pi) Gamma(nu+mu+1) Gamma(mu-nu) P_nu^{-mu}
        c = math.cos(nu * math.pi)
        if c == 0.0:
            return 1.0, 0.0, idx.negated_order()
        w = c * gamma_fn(nu + mu + 1.0) * gamma_fn(mu - nu)
        return 1.0, w, idx.negated_order()
    if kind is FunctionKind.FERRERS_Q:
        # sin[(nu-mu) pi] Q_{-nu-1} - sin[(nu+mu) pi] Q_nu = -pi cos(nu pi) cos(mu pi) P_nu
        d = math.sin((nu - mu) * math.pi)
        if abs(d) <= 1e-12:
            raise DegenerateReflectionError(
                f"sin[(nu-mu) pi] vanishes at nu={nu!r}, mu={mu!r}")
        return (math.sin((nu + mu) * math.pi) / d,
                -math.pi * math.cos(nu * math.pi) * math.cos(mu * math.pi) / d, idx)
    raise UnsupportedIndexError(f"degree reflection is defined for Qhat and Ferrers Q, not {kind.value}")


def reflect_degree(kind: FunctionKind, idx: LegendreIndex, point: float) -> float:
    """Value of ``F_{-nu-1}^mu`` assembled from ``F_nu^mu`` and a first-kind term.

    Raises
    ------
    PoleError
        If a gamma factor sits at a pole.
    DegenerateReflectionError
        If the Ferrers solving coefficient ``sin[(nu-mu) pi]`` vanishes.
    """
    kind = FunctionKind(kind)
    check_point(kind, point)
    wf, wp, pidx = _reflection_weights(kind, idx)
    validate_index(kind, idx.reflected())
    pkind = FunctionKind.LEGENDRE_P if kind.is_legendre else FunctionKind.FERRERS_P
    f = evaluate_component(kind, idx, point)
    p = evaluate_component(pkind, pidx, point) if wp else 0.0
    return wf * f + wp * p


def reflect_degree_combination(kind: FunctionKind, idx: LegendreIndex,
                               f: EllipticCombination,
                               p: EllipticCombination) -> EllipticCombination:
    """Combination form of :func:`reflect_degree` for kernel-produced inputs.

    ``f`` is ``F_nu^mu`` and ``p`` is the first-kind companion (``P_nu^{-mu}``
    for Legendre, Ferrers ``P_nu^mu`` for Ferrers).
    """
    wf, wp, _ = _reflection_weights(FunctionKind(kind), idx)
    return f.combine(p, wf, wp)
