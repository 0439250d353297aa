"""Pure numpy versions of the compiled scans in ``_kernels.pyx``."""

from __future__ import annotations

import numpy as np


def _traffic(a: np.ndarray, x: np.ndarray, gamma: float) -> np.ndarray:
    return 1.0 - a - x + gamma * a * x


def leader_scan(
    alphas: np.ndarray, r_f: float, r_g: float, c: float, m: float, gamma: float, tie_tol: float
) -> tuple[int, float, float]:
    a = np.ascontiguousarray(alphas, dtype=np.float64)
    if a.size == 0:
        raise ValueError("empty alpha grid")
    xf = 1.0 - a
    v0 = (1.0 - _traffic(a, np.zeros_like(a), gamma)) * r_g - m * a
    v1 = (1.0 - _traffic(a, xf, gamma)) * r_g - c * xf - m * a
    x = np.where(v1 - v0 > tie_tol, xf, 0.0)
    u = _traffic(a, x, gamma) * r_f + m * a
    # argmax returns the first maximiser, i.e. the smallest alpha on ties
    i = int(np.argmax(u))
    return i, float(u[i]), float(x[i])


def onpath_utility(
    alphas: np.ndarray, r_f: float, m: float, gamma: float, r_g_threshold: float
) -> np.ndarray:
    a = np.ascontiguousarray(alphas, dtype=np.float64)
    x = np.where(a < r_g_threshold, 1.0 - a, 0.0)
    return _traffic(a, x, gamma) * r_f + m * a
