# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled scans over leader grids.  Mirrors ``_fallback`` exactly."""

import numpy as np


cdef inline double _traffic(double a, double x, double gamma) nogil:
    return 1.0 - a - x + gamma * a * x


def leader_scan(const double[::1] alphas, double r_f, double r_g, double c,
                double m, double gamma, double tie_tol):
    """Return ``(index, U, x)`` of the best grid point.

    Follower reply compares V at both endpoints of ``[0, 1 - alpha]``; a gain
    not exceeding ``tie_tol`` counts as a tie and resolves to ``x = 0``.
    Leader ties keep the earliest (smallest) alpha.
    """
    cdef Py_ssize_t n = alphas.shape[0]
    cdef Py_ssize_t i, best_i = -1
    cdef double a, xf, v0, v1, x, u
    cdef double best_u = 0.0, best_x = 0.0
    if n == 0:
        raise ValueError("empty alpha grid")
    with nogil:
        for i in range(n):
            a = alphas[i]
            xf = 1.0 - a
            v0 = (1.0 - _traffic(a, 0.0, gamma)) * r_g - m * a
            v1 = (1.0 - _traffic(a, xf, gamma)) * r_g - c * xf - m * a
            if v1 - v0 > tie_tol:
                x = xf
            else:
                x = 0.0
            u = _traffic(a, x, gamma) * r_f + m * a
            if best_i < 0 or u > best_u:
                best_i = i
                best_u = u
                best_x = x
    return best_i, best_u, best_x


def onpath_utility(const double[::1] alphas, double r_f, double m, double gamma,
                   double r_g_threshold):
    """Firm utility along the grid given GenAI's threshold reply."""
    cdef Py_ssize_t n = alphas.shape[0]
    cdef Py_ssize_t i
    cdef double a, x
    out = np.empty(n, dtype=np.float64)
    cdef double[::1] res = out
    with nogil:
        for i in range(n):
            a = alphas[i]
            if a < r_g_threshold:
                x = 1.0 - a
            else:
                x = 0.0
            res[i] = _traffic(a, x, gamma) * r_f + m * a
    return out
