# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled versions of the hot loops in ``_purekernels``."""

from libc.math cimport fabs, sqrt, M_PI


cdef double _factorial(int m):
    cdef double out = 1.0
    cdef int k
    for k in range(2, m + 1):
        out *= k
    return out


def series_2f1(double a, double b, double c, double x,
               double tol, int run, long max_terms):
    cdef double total = 1.0
    cdef double term = 1.0
    cdef int quiet = 0
    cdef long n = 0
    while n < max_terms:
        term *= (a + n) * (b + n) / ((c + n) * (n + 1.0)) * x
        total += term
        n += 1
        if term == 0.0:
            return total, n, True
        if fabs(term) <= tol * fabs(total):
            quiet += 1
            if quiet >= run:
                return total, n, True
        else:
            quiet = 0
    return total, n, False


def log_series_2f1(double a, double b, int m, double y, double log_y,
                   double psi_1, double psi_m1, double psi_a, double psi_b,
                   double tol, int run, long max_terms):
    cdef double coef = 1.0 / _factorial(m)
    cdef double total = coef * (log_y - psi_1 - psi_m1 + psi_a + psi_b)
    cdef double term
    cdef int quiet = 0
    cdef long n = 0
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
        if fabs(term) <= tol * fabs(total):
            quiet += 1
            if quiet >= run:
                return total, n, True
        else:
            quiet = 0
    return total, n, False


def agm_ke(double m, double mc, double tol, int max_iter):
    cdef double a = 1.0
    cdef double g = sqrt(mc)
    cdef double c
    cdef double a_next
    cdef double acc = 0.5 * m
    cdef double weight = 0.5
    cdef double k
    cdef int it = 0
    while it < max_iter:
        if fabs(a - g) <= tol * a:
            k = M_PI / (a + g)
            return k, k * (1.0 - acc), it, True
        c = 0.5 * (a - g)
        a_next = 0.5 * (a + g)
        g = sqrt(a * g)
        a = a_next
        weight *= 2.0
        acc += weight * c * c
        it += 1
    k = M_PI / (2.0 * a)
    return k, k * (1.0 - acc), it, False
