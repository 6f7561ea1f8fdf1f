"""Numeric checks of the operator-theoretic route to cycle volumes.

The integration operator (Tg)(t) = ∫_0^{1-t} g(s) ds has eigenvalues
2/(pi(4k+1)) with cosine eigenfunctions, which turns the cycle volume
into the trace identity sum_k 1/(4k+1)^n = pi^n vol(C_n) / 2^n. This
module evaluates partial sums in extended precision, approximates the
trace by iterated trapezoid quadrature, and checks the eigenfunction
relation on a grid. Everything here is floating point by design; the
exact modules never depend on it.
"""

import numpy as np
from mpmath import mp

from .closed import cycle_volume
from .errors import ParameterError

WORKING_DPS = 50


def series_partial(n: int, terms: int):
    """sum_{k=-K}^{K} 1/(4k+1)^n with k and -k paired, as an mpf.

    Pairing cancels the leading 1/k^n parts for odd n, which is what
    makes the slowly converging n = 2, 3 cases usable.
    """
    if n < 2:
        raise ParameterError("series diverges absolutely for n < 2")
    if terms < 1:
        raise ParameterError("need at least one term")
    with mp.workdps(WORKING_DPS):
        total = mp.mpf(0)
        for k in range(terms, 0, -1):
            total += mp.mpf(1) / (4 * k + 1) ** n + mp.mpf(1) / (1 - 4 * k) ** n
        return total + 1


def series_target(n: int):
    """pi^n vol(C_n) / 2^n, the closed-form limit of the partial sums."""
    v = cycle_volume(n)  # accepts n = 2 as the formula's extension
    with mp.workdps(WORKING_DPS):
        return mp.pi ** n * mp.mpf(v.numerator) / v.denominator / 2 ** n


def series_tail_bound(n: int, terms: int):
    """Integral-comparison bound on the truncation error after pairing."""
    with mp.workdps(WORKING_DPS):
        return mp.mpf(2) / (4 * terms) ** (n - 1)


def _cumtrapz(rows: np.ndarray, h: float) -> np.ndarray:
    """Cumulative trapezoid integral along axis 0, starting at 0."""
    steps = (rows[:-1] + rows[1:]) * (h / 2)
    out = np.zeros_like(rows)
    np.cumsum(steps, axis=0, out=out[1:])
    return out


def trace_quadrature(n: int, grid: int) -> float:
    """Trapezoid approximation of ∫ K_n(t,t) dt, the trace giving vol(C_n).

    The iterated kernel is built column by column: K_n(t, s) is the
    cumulative integral of K_{n-1}(·, s) up to 1-t, which on a uniform
    grid is just the reversed cumulative-sum table.
    """
    if n < 2:
        raise ParameterError("trace identity needs n >= 2")
    if grid < 100:
        raise ParameterError("grid must be at least 100")
    h = 1.0 / grid
    t = np.linspace(0.0, 1.0, grid + 1)
    kernel = (t[:, None] + t[None, :] <= 1.0 + 1e-12).astype(float)
    for _ in range(n - 1):
        kernel = _cumtrapz(kernel, h)[::-1, :]
    diag = np.diagonal(kernel)
    return float(h * (diag.sum() - (diag[0] + diag[-1]) / 2))


def eigen_residual(k: int, grid: int) -> float:
    """max_t |(Tg)(t) - lambda g(t)| for the k-th cosine eigenfunction,
    with T applied by trapezoid quadrature."""
    if abs(k) > 5:
        raise ParameterError("eigenfunction index limited to |k| <= 5")
    if grid < 1000:
        raise ParameterError("grid must be at least 1000")
    h = 1.0 / grid
    t = np.linspace(0.0, 1.0, grid + 1)
    freq = np.pi * (4 * k + 1) / 2
    g = np.cos(freq * t)
    applied = _cumtrapz(g[:, None], h)[::-1, 0]  # (Tg)(t_j) = ∫_0^{1-t_j} g
    lam = 2 / (np.pi * (4 * k + 1))
    return float(np.max(np.abs(applied - lam * g)))
