"""The acceptance criteria as runnable checks.

Each ``criterion_N`` returns a :class:`CriterionResult` with the worst
observed discrepancy and the tolerance it was held to.  :func:`run_all`
runs every criterion and is shared by the test suite and ``selftest``.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

import numpy as np

from . import closed_forms as cf
from .applications import (FourierSpec, fourier_coefficient, fourier_coefficient_quadrature,
                           laplace_coefficient, laplace_coefficient_quadrature)
from .curves import CURVES, CurveId, curve_point, implicit_residual, implicit_scale
from .errors import DegenerateParameterError, EllipLegError
from .hypergeom import gauss_2f1, oracle_legendre
from .identities import catalogue, identity_sides, p_grid, w4_composition
from .indices import FunctionKind, LegendreIndex
from .kernel import base_half_degree, fundamental_qhat_exponential
from .numerics import elliptic_ke, gamma_fn
from .reduction import eval_fractional, evaluate

__all__ = [
    "CriterionResult",
    "CRITERIA",
    "ALPHA_GRID",
    "criterion_1",
    "criterion_2",
    "criterion_3",
    "criterion_4",
    "criterion_5",
    "criterion_6",
    "criterion_7",
    "criterion_8",
    "criterion_9",
    "criterion_10",
    "criterion_11",
    "run_all",
    "ode_residual",
    "two_term_errors",
]

FK = FunctionKind
ALPHA_GRID = (0.0, 0.2, -0.2, 0.499, -0.499, 1.0, 2.0)
KERNEL_KINDS = (FK.LEGENDRE_P, FK.LEGENDRE_QHAT, FK.FERRERS_P, FK.FERRERS_Q)
LEGENDRE_POINTS = tuple(1.0 + 0.05 * 1.7 ** k for k in range(10))
FERRERS_POINTS = tuple(-0.91 + 0.19 * k for k in range(10))


@dataclass(frozen=True)
class CriterionResult:
    """Outcome of one criterion."""

    number: int
    title: str
    passed: bool
    worst: float
    tolerance: float
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = (f"[{status}] {self.number:2d}. {self.title}: worst {self.worst:.3e} "
                f"(tolerance {self.tolerance:.0e})")
        return text + (f"; {self.detail}" if self.detail else "")


class _Worst:
    """Running maximum with the label of the worst case."""

    def __init__(self) -> None:
        self.value = 0.0
        self.where = ""

    def add(self, value: float, where: Callable[[], str]) -> None:
        if not value <= self.value:
            self.value = value if math.isfinite(value) else math.inf
            self.where = where()


def _rel(a: float, b: float) -> float:
    return abs(a - b) / abs(b) if b != 0.0 else abs(a)


def _result(number: int, title: str, worst: _Worst, tol: float, extra: str = "",
            ok: bool = True) -> CriterionResult:
    detail = "; ".join(s for s in (f"worst at {worst.where}" if worst.where else "", extra) if s)
    return CriterionResult(number, title, ok and worst.value <= tol, worst.value, tol, detail)


def _param_sets(constraint: str, alphas: Iterable[float]) -> list[dict[str, float]]:
    alphas = tuple(alphas)
    if constraint == "zero":
        return [{"alpha": 0.0}]
    if constraint == "none":
        return [{}]
    if constraint == "two":
        return [{"alpha": a, "beta": b} for a in alphas for b in alphas]
    return [{"alpha": a} for a in alphas]


def criterion_1(n: int = 50, alphas: Iterable[float] = ALPHA_GRID) -> CriterionResult:
    """All catalogue identities on interior grids."""
    worst = _Worst()
    count = skipped = 0
    for rec in catalogue():
        for prm in _param_sets(rec.alpha_constraint, alphas):
            for p in p_grid(rec.label, n):
                try:
                    lhs, rhs, gap = identity_sides(rec.label, prm, p)
                except DegenerateParameterError:
                    skipped += 1
                    continue
                count += 1
                worst.add(gap, lambda: f"{rec.label} {prm} p={p:.6g}")
    return _result(1, "catalogue residual sweep", worst, 1e-9,
                   f"{count} evaluations, {skipped} degenerate parameter sets skipped")


def _limit(f: Callable[[float], float], p0: float, side: int, h: float = 1e-7) -> float:
    """One-sided limit of ``f`` at ``p0`` by Richardson extrapolation."""
    if math.isinf(p0):
        s = 1.0 if p0 > 0 else -1.0
        return 2.0 * f(s / (0.5 * h)) - f(s / h)
    return 2.0 * f(p0 + side * 0.5 * h) - f(p0 + side * h)


def criterion_2(samples: int = 1000) -> CriterionResult:
    """Implicit residuals of the curves and their interval tables."""
    rng = np.random.default_rng(2024)
    worst = _Worst()
    table = _Worst()
    for cid, spec in CURVES.items():
        if spec.implicit is None:
            continue
        lo_row, hi_row = spec.rows[0].p_lo, spec.rows[-1].p_hi
        ps = rng.uniform(-6.0, 6.0, samples)
        if math.isfinite(lo_row) and math.isfinite(hi_row):
            ps = rng.uniform(lo_row, hi_row, samples)
        done = 0
        for p in ps:
            try:
                L, R = spec.L_of_p(float(p)).v, spec.R_of_p(float(p)).v
            except (ZeroDivisionError, EllipLegError):
                continue
            if not (math.isfinite(L) and math.isfinite(R)):
                continue
            done += 1
            res = abs(implicit_residual(cid, L, R)) / implicit_scale(cid, L, R)
            worst.add(res, lambda: f"{cid.value} p={p:.6g}")
        if done < samples // 2:
            worst.add(math.inf, lambda: f"{cid.value}: only {done} usable samples")
    for cid, spec in CURVES.items():
        for row in spec.rows:
            for p0, side, L0, R0 in ((row.p_lo, 1, row.L_lo, row.R_lo),
                                     (row.p_hi, -1, row.L_hi, row.R_hi)):
                for name, fn, want in (("L", spec.L_of_p, L0), ("R", spec.R_of_p, R0)):
                    got = _limit(lambda q: fn(q).v, p0, side)
                    if math.isinf(want):
                        err = 0.0 if (abs(got) > 1e5 and (got > 0) == (want > 0)) else math.inf
                    else:
                        err = abs(got - want)
                    table.add(err, lambda: f"{cid.value} {name} at p={p0}")
    ok = table.value <= 1e-8
    return _result(2, "curve implicit residuals and interval tables", worst, 1e-10,
                   f"interval-table worst {table.value:.2e} (tolerance 1e-08)"
                   + (f" at {table.where}" if table.where else ""), ok)


def _fractional_indices() -> list[LegendreIndex]:
    out = []
    for r in (2, 3, 4, 6):
        for sign in ((-1,) if r == 2 else (-1, 1)):
            for n in range(-2, 3):
                for m in range(-2, 3):
                    out.append(LegendreIndex.of(n + Fraction(sign, r), Fraction(m)))
    return out


def criterion_3() -> CriterionResult:
    """Elliptic reduction against the series oracle."""
    worst = _Worst()
    recompose = 0.0
    count = 0
    for kind in KERNEL_KINDS:
        points = LEGENDRE_POINTS if kind.is_legendre else FERRERS_POINTS
        for idx in _fractional_indices():
            for x in points:
                comb = eval_fractional(kind, idx, x)
                o = oracle_legendre(kind, idx, x)
                count += 1
                worst.add(_rel(comb.value, o),
                          lambda: f"{kind.value} nu={idx.exact_nu} m={idx.exact_mu} x={x:.4g}")
                k, e = elliptic_ke(comb.modulus, comb.complement)
                kc, ec = elliptic_ke(comb.complement, comb.modulus)
                c = comb.as_dict()
                v = (c["coef_k"][0] * k + c["coef_e"][0] * e
                     + c["coef_kc"][0] * kc + c["coef_ec"][0] * ec)
                recompose = max(recompose, _rel(v, comb.value))
    return _result(3, "fractional-degree reduction", worst, 1e-7,
                   f"{count} evaluations; recomposition worst {recompose:.1e}",
                   recompose <= 1e-12)


def criterion_4(n: int = 50) -> CriterionResult:
    """Fundamental degree -1/2 representations."""
    worst = _Worst()
    idx = LegendreIndex.of(Fraction(-1, 2), Fraction(0))
    xis = np.linspace(0.02, 6.0, n)
    thetas = np.linspace(0.02, math.pi - 0.02, n)
    for kind in KERNEL_KINDS:
        for t in (xis if kind.is_legendre else thetas):
            x = math.cosh(t) if kind.is_legendre else math.cos(t)
            o = oracle_legendre(kind, idx, x)
            worst.add(_rel(base_half_degree(kind, x).value, o), lambda: f"{kind.value} t={t:.4g}")
            if kind is FK.LEGENDRE_QHAT:
                worst.add(_rel(fundamental_qhat_exponential(x), o),
                          lambda: f"exponential form t={t:.4g}")
    return _result(4, "fundamental representations", worst, 1e-10)


def criterion_5(n: int = 50) -> CriterionResult:
    """Radical closed forms at degrees -1/6 and -1/4."""
    worst = _Worst()
    i16 = LegendreIndex.of(Fraction(-1, 6), Fraction(-1, 4))
    i14 = LegendreIndex.of(Fraction(-1, 4), Fraction(-1, 3))
    for t in np.linspace(0.02, math.pi - 0.02, n):
        worst.add(_rel(cf.ferrers_p_m16_m14(t), oracle_legendre(FK.FERRERS_P, i16, math.cos(t))),
                  lambda: f"Ferrers theta={t:.4g}")
    for t in np.geomspace(0.02, 8.0, n):
        worst.add(_rel(cf.legendre_p_m16_m14(t), oracle_legendre(FK.LEGENDRE_P, i16, math.cosh(t))),
                  lambda: f"Legendre xi={t:.4g}")
        z = 1.0 / math.tanh(t)
        worst.add(_rel(cf.qhat_m14_m13(t), oracle_legendre(FK.LEGENDRE_QHAT, i14, z)),
                  lambda: f"Qhat xi={t:.4g}")
    first, second = cf.thm71_constant_forms()
    const_gap = abs(first - second) / abs(first)
    return _result(5, "radical closed forms", worst, 1e-9,
                   f"prefactor forms differ by {const_gap:.1e} (tolerance 1e-12)",
                   const_gap <= 1e-12)


def criterion_6(n: int = 200) -> CriterionResult:
    """Octahedral hypergeometric formula."""
    worst = _Worst()
    for x in -np.geomspace(1e-3, 1e3, n):
        worst.add(_rel(cf.octahedral_2f1(x), gauss_2f1(1 / 6, 5 / 6, 1.25, x)),
                  lambda: f"x={x:.4g}")
    at0 = cf.octahedral_2f1(0.0)
    return _result(6, "octahedral formula", worst, 1e-10, f"value at 0 is {at0!r}", at0 == 1.0)


W4_ALPHAS = (0.0, 0.2, -0.2, 1.0, 2.0)


def criterion_7(points: int = 20) -> CriterionResult:
    """Whipple route against the oracle and W4 as a composition."""
    worst = _Worst()
    for label in ("W2(i)", "W2(i-bar)"):
        for a in (0.0, 0.2, 0.5, 1.0):
            for b in (0.0, 0.5, 1.0, 2.0):
                for p in p_grid(label, points):
                    try:
                        gap = identity_sides(label, {"alpha": a, "beta": b}, p)[2]
                    except DegenerateParameterError:
                        continue
                    worst.add(gap, lambda: f"{label} a={a} b={b} p={p:.6g}")
    # the classical Whipple pair at L = R = sqrt(2)
    gap = identity_sides("W2(i)", {"alpha": 0.5, "beta": 0.5}, 1.0 + math.sqrt(2.0))[2]
    worst.add(gap, lambda: "Whipple base pair")
    for a in W4_ALPHAS:
        for p in np.geomspace(1.1, 30.0, points):
            gap = w4_composition(a, float(p))[2]
            worst.add(gap, lambda: f"W4 composition a={a} p={p:.4g}")
    return _result(7, "Whipple consistency and W4 composition", worst, 1e-9)


def _eps_oracle_qhat(nu: float, mu: float, z: float, eps: float = 1e-4) -> float:
    """Oracle ``Qhat`` from symmetric order perturbation with Richardson extrapolation."""
    def sym(h: float) -> float:
        return 0.5 * (oracle_legendre(FK.LEGENDRE_QHAT, LegendreIndex(nu, mu + h), z)
                      + oracle_legendre(FK.LEGENDRE_QHAT, LegendreIndex(nu, mu - h), z))
    return (4.0 * sym(0.5 * eps) - sym(eps)) / 3.0


def criterion_8(points: int = 10) -> CriterionResult:
    """``Qhat_{2a-1/2}^{-a}`` at a = 1/2, 3/2, 5/2 through W4(i-bar)."""
    worst = _Worst()
    for a in (0.5, 1.5, 2.5):
        fa = Fraction(int(2 * a), 2)
        idx = LegendreIndex.of(2 * fa - Fraction(1, 2), -fa)
        for p in p_grid("W4(i-bar)", points, margin=0.05, span=50.0):
            L, R, A = (d.v for d in curve_point(CurveId.W4, p))
            # (2/pi) Qhat(L) = A * 2 P(R)
            via_w4 = math.pi * A * evaluate(FK.LEGENDRE_P, idx, R)
            ref = _eps_oracle_qhat(idx.nu, idx.mu, L)
            worst.add(_rel(via_w4, ref), lambda: f"a={a} p={p:.4g}")
    return _result(8, "W4(i-bar) tabulation of Qhat", worst, 1e-6)


def criterion_9() -> CriterionResult:
    """Asymptotic laws near the defining singular points."""
    worst = _Worst()
    delta = 1e-6
    for mu in (0.2, 0.25, 1 / 3, 0.5, 1.0):
        for nu in (-0.25, 1 / 3, 0.7):
            lead = delta ** (0.5 * mu) / (2.0 ** (0.5 * mu) * gamma_fn(mu + 1.0))
            idx = LegendreIndex(nu, -mu)
            worst.add(abs(evaluate(FK.LEGENDRE_P, idx, 1.0 + delta) / lead - 1.0),
                      lambda: f"P nu={nu:.3g} mu={mu:.3g}")
            worst.add(abs(evaluate(FK.FERRERS_P, idx, 1.0 - delta) / lead - 1.0),
                      lambda: f"Ferrers P nu={nu:.3g} mu={mu:.3g}")
    z = 1e6
    for nu, mu in ((-0.25, -0.5), (-0.25, 1 / 3), (0.5, 0.0), (1 / 6, -0.25), (1.5, 1.0)):
        lead = (math.sqrt(math.pi) * gamma_fn(nu + mu + 1.0)
                / (2.0 ** (nu + 1.0) * gamma_fn(nu + 1.5)) * z ** (-nu - 1.0))
        worst.add(abs(evaluate(FK.LEGENDRE_QHAT, LegendreIndex(nu, mu), z) / lead - 1.0),
                  lambda: f"Qhat nu={nu:.3g} mu={mu:.3g} at infinity")
    slope = _two_term_slope()
    expected = 1.0 - 1.0 / 6.0
    ok = abs(slope - expected) <= 0.1
    return _result(9, "asymptotic laws", worst, 1e-3,
                   f"two-term error slope {slope:.3f} (expected {expected:.3f} +- 0.1)", ok)


def two_term_errors(nu: float = -0.25, mu: float = 1 / 3,
                    ks: Iterable[int] = (4, 5, 6)) -> list[tuple[float, float]]:
    """``(delta, error)`` of the two-term Frobenius law for ``Qhat`` at ``1 + delta``."""
    out = []
    lhs_scale = (2.0 / math.pi) * math.sin(mu * math.pi) / gamma_fn(nu + mu + 1.0)
    for k in ks:
        d = 10.0 ** -k
        q = evaluate(FK.LEGENDRE_QHAT, LegendreIndex(nu, mu), 1.0 + d)
        u = 0.5 * d
        approx = (u ** (-0.5 * mu) / (gamma_fn(1.0 - mu) * gamma_fn(nu + mu + 1.0))
                  - u ** (0.5 * mu) / (gamma_fn(1.0 + mu) * gamma_fn(nu - mu + 1.0)))
        out.append((d, abs(lhs_scale * q - approx)))
    return out


def _two_term_slope() -> float:
    pts = two_term_errors()
    x = np.log10([d for d, _ in pts])
    y = np.log10([e for _, e in pts])
    return float(np.polyfit(x, y, 1)[0])


def criterion_10() -> CriterionResult:
    """Fourier and Laplace coefficients against quadrature."""
    worst = _Worst()
    exact = 0.0
    for m, want in ((0, 1.0), (1, 0.25), (2, 0.0), (-1, 0.25)):
        exact = max(exact, abs(fourier_coefficient(FourierSpec(1, m, 0.5)) - want))
    for nu in (Fraction(-1, 4), Fraction(-1, 6), Fraction(1, 3), Fraction(-3, 2), Fraction(1, 2)):
        for m in range(0, 4):
            for x in (0.2, 0.4, 0.6, 0.8):
                spec = FourierSpec(nu, m, x)
                got, want = fourier_coefficient(spec), fourier_coefficient_quadrature(spec)
                worst.add(abs(got - want) / max(1.0, abs(want)),
                          lambda: f"Fourier nu={nu} m={m} x={x}")
    for s in (Fraction(1, 2), Fraction(3, 2), Fraction(1, 4), Fraction(1, 6), Fraction(1, 3)):
        for m in range(0, 4):
            for alpha in np.round(np.arange(0.1, 0.95, 0.1), 10):
                got = laplace_coefficient(s, m, float(alpha))
                want = laplace_coefficient_quadrature(s, m, float(alpha))
                worst.add(abs(got - want) / max(1.0, abs(want)),
                          lambda: f"Laplace s={s} m={m} alpha={alpha}")
    return _result(10, "Fourier and Laplace coefficients", worst, 1e-8,
                   f"binomial cases off by {exact:.1e} (tolerance 1e-12)", exact <= 1e-12)


def ode_residual(kind: FunctionKind, idx: LegendreIndex, t: float, h: float | None = None,
                 fn: Callable[[FunctionKind, LegendreIndex, float], float] = evaluate,
                 stencil: int = 5) -> float:
    """Relative residual of the angle-form Legendre equation by finite differences.

    Legendre kinds use ``u'' + coth(t) u' - [nu(nu+1) + mu^2/sinh(t)^2] u``
    with ``z = cosh t``; Ferrers kinds ``u'' + cot(t) u' + [nu(nu+1) -
    mu^2/sin(t)^2] u`` with ``x = cos t``.  The residual is divided by the
    largest of the three terms.

    ``stencil=5`` uses fourth-order central differences, whose error
    ``O(h^4)`` allows a step large enough that rounding in the values is
    amplified only by about ``1/h^2``; ``stencil=3`` is the plain
    second-order form.  The default step is ``min(0.01, 0.02 d)`` with
    ``d`` the distance of ``t`` to the nearest singular end.
    """
    if h is None:
        d = t if kind.is_legendre else min(t, math.pi - t)
        h = min(1e-2, 0.02 * d)
    nu, mu = idx.nu, idx.mu
    if kind.is_legendre:
        arg, cot, s2, lam = math.cosh, 1.0 / math.tanh(t), math.sinh(t) ** 2, -nu * (nu + 1.0)
    else:
        arg, cot, s2, lam = math.cos, 1.0 / math.tan(t), math.sin(t) ** 2, nu * (nu + 1.0)
    u = {k: fn(kind, idx, arg(t + k * h)) for k in ((-2, -1, 0, 1, 2) if stencil == 5 else (-1, 0, 1))}
    if stencil == 5:
        d1 = (u[-2] - 8.0 * u[-1] + 8.0 * u[1] - u[2]) / (12.0 * h)
        d2 = (-u[-2] + 16.0 * u[-1] - 30.0 * u[0] + 16.0 * u[1] - u[2]) / (12.0 * h * h)
    elif stencil == 3:
        d1 = (u[1] - u[-1]) / (2.0 * h)
        d2 = (u[1] - 2.0 * u[0] + u[-1]) / (h * h)
    else:
        raise ValueError("stencil must be 3 or 5")
    coef = lam - mu * mu / s2
    terms = (d2, cot * d1, coef * u[0])
    scale = max(abs(v) for v in terms)
    return abs(sum(terms)) / scale if scale > 0.0 else 0.0


def criterion_11() -> CriterionResult:
    """Legendre equation residuals of production evaluations."""
    worst = _Worst()
    indices = [LegendreIndex.of(nu, Fraction(m))
               for nu in (Fraction(-1, 2), Fraction(3, 2), Fraction(-1, 3), Fraction(2, 3),
                          Fraction(-1, 4), Fraction(5, 4), Fraction(-1, 6), Fraction(7, 6))
               for m in (-2, 0, 1)]
    indices += [LegendreIndex(0.3, 0.45), LegendreIndex(-0.7, -0.2)]
    for kind in (*KERNEL_KINDS, FK.FERRERS_PBAR):
        ts = np.linspace(0.15, 2.5, 6) if kind.is_legendre else np.linspace(0.2, math.pi - 0.2, 6)
        for idx in indices:
            for t in ts:
                worst.add(ode_residual(kind, idx, float(t)),
                          lambda: f"{kind.value} nu={idx.nu:.4g} mu={idx.mu:.4g} t={t:.3g}")
    return _result(11, "Legendre equation residuals", worst, 1e-5)


CRITERIA: tuple[Callable[[], CriterionResult], ...] = (
    criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6,
    criterion_7, criterion_8, criterion_9, criterion_10, criterion_11,
)


def run_all() -> list[CriterionResult]:
    """Run every criterion in order, recording wall time."""
    out = []
    for fn in CRITERIA:
        t0 = time.perf_counter()
        res = fn()
        out.append(CriterionResult(res.number, res.title, res.passed, res.worst,
                                   res.tolerance, res.detail, time.perf_counter() - t0))
    return out
