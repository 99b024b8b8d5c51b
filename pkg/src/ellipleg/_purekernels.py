"""Pure-Python hot loops: hypergeometric series sums and the AGM.

These mirror ``_speedups.pyx`` one for one and are used whenever the
compiled module is unavailable.  Each routine returns a status flag
instead of raising so that both implementations share one error path
in :mod:`ellipleg._kernels`.
"""

from __future__ import annotations

import math


def series_2f1(a: float, b: float, c: float, x: float,
               tol: float, run: int, max_terms: int) -> tuple[float, int, bool]:
    """Sum the Gauss series term by term.

    Stops once ``run`` consecutive terms are below ``tol`` relative to the
    running sum.  Returns ``(sum, terms_used, converged)``.
    """
    total = 1.0
    term = 1.0
    quiet = 0
    n = 0
    while n < max_terms:
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * x
        total += term
        n += 1
        if term == 0.0:
            return total, n, True
        if abs(term) <= tol * abs(total):
            quiet += 1
            if quiet >= run:
                return total, n, True
        else:
            quiet = 0
    return total, n, False


def log_series_2f1(a: float, b: float, m: int, y: float, log_y: float,
                   psi_1: float, psi_m1: float, psi_a: float, psi_b: float,
                   tol: float, run: int, max_terms: int) -> tuple[float, int, bool]:
    """Sum the logarithmic series of the integer-gap connection formula.

    Computes ``sum_n (a)_n (b)_n / (n! (n+m)!) y**n * [log_y - psi(n+1)
    - psi(n+m+1) + psi(a+n) + psi(b+n)]`` where the four ``psi_*``
    arguments are the digamma values at ``n = 0``.
    """
    coef = 1.0 / math.factorial(m)
    total = coef * (log_y - psi_1 - psi_m1 + psi_a + psi_b)
    quiet = 0
    n = 0
    while n < max_terms:
        psi_1 += 1.0 / (n + 1.0)
        psi_m1 += 1.0 / (n + m + 1.0)
        psi_a += 1.0 / (a + n)
        psi_b += 1.0 / (b + n)
        coef *= (a + n) * (b + n) / ((n + 1.0) * (n + m + 1.0)) * y
        n += 1
        term = coef * (log_y - psi_1 - psi_m1 + psi_a + psi_b)
        total += term
        if coef == 0.0:
            return total, n, True
        if abs(term) <= tol * abs(total):
            quiet += 1
            if quiet >= run:
                return total, n, True
        else:
            quiet = 0
    return total, n, False


def agm_ke(m: float, mc: float, tol: float, max_iter: int) -> tuple[float, float, int, bool]:
    """Complete elliptic integrals K(m), E(m) by the AGM.

    ``mc`` is the complementary parameter ``1 - m`` supplied separately so
    that callers can keep full precision near ``m = 1``.
    Returns ``(K, E, iterations, converged)``.
    """
    a = 1.0
    g = math.sqrt(mc)
    c = math.sqrt(m)
    # E = K * (1 - sum 2**(n-1) c_n**2) with c_0**2 = m
    acc = 0.5 * m
    weight = 0.5
    it = 0
    while it < max_iter:
        if abs(a - g) <= tol * a:
            k = math.pi / (a + g)
            return k, k * (1.0 - acc), it, True
        c = 0.5 * (a - g)
        a, g = 0.5 * (a + g), math.sqrt(a * g)
        weight *= 2.0
        acc += weight * c * c
        it += 1
    k = math.pi / (2.0 * a)
    return k, k * (1.0 - acc), it, False
