"""Hot numeric kernels: numba-jitted loops with a pure-numpy fallback.

The three inner loops that dominate runtime (quadrature node sums and the
brute-force series used as test oracles) exist in two implementations:

* ``*_numba`` -- compiled with ``@njit(cache=True)``, Kahan-compensated;
* ``*_numpy`` -- vectorized numpy (pairwise summation), chunked.

The public names bind to the numba versions when numba imports and the
environment variable ``LOGINT_PURE_NUMPY`` is unset/false, else to numpy.
``benchmarks/bench_kernels.py`` compares the two paths.
"""

from __future__ import annotations

import math
import os

import numpy as np

_env = os.environ.get("LOGINT_PURE_NUMPY", "").strip().lower()
_want_numba = _env not in {"1", "true", "yes", "on"}

_CHUNK = 1 << 20


# ---------------------------------------------------------------------------
# numpy fallback implementations


def weighted_rational_sum_numpy(num: np.ndarray, den: np.ndarray, scale: float,
                                xs: np.ndarray, ws: np.ndarray) -> tuple[float, float]:
    """sum_i ws[i] * scale * num(xs[i]) / den(xs[i]) and min_i |den(xs[i])|.

    num/den are coefficient arrays, ascending powers (Horner on arrays).
    """
    if xs.size == 0:
        return 0.0, math.inf
    nv = np.full_like(xs, num[-1])
    for c in num[-2::-1]:
        nv = nv * xs + c
    dv = np.full_like(xs, den[-1])
    for c in den[-2::-1]:
        dv = dv * xs + c
    min_den = float(np.min(np.abs(dv)))
    return scale * float(np.sum(ws * (nv / dv))), min_den


def chebyshev_log_moment_numpy(a: float, m: int, w: int, terms: int) -> float:
    """sum_{k=0}^{terms-1} U_k(a) / (k+m+1)^w with U_k = sin((k+1)t)/sin(t)."""
    t = math.acos(a)
    sin_t = math.sin(t)
    total = 0.0
    for start in range(0, terms, _CHUNK):
        ks = np.arange(start, min(start + _CHUNK, terms), dtype=np.float64)
        total += float(np.sum(np.sin((ks + 1.0) * t) / (ks + m + 1.0) ** w))
    return total / sin_t


def sine_series_numpy(theta: float, w: int, terms: int) -> float:
    """sum_{n=1}^{terms} sin(n theta) / n^w."""
    total = 0.0
    for start in range(1, terms + 1, _CHUNK):
        ns = np.arange(start, min(start + _CHUNK, terms + 1), dtype=np.float64)
        total += float(np.sum(np.sin(ns * theta) / ns**w))
    return total


# ---------------------------------------------------------------------------
# numba implementations

HAVE_NUMBA = False
if _want_numba:
    try:
        from numba import njit

        HAVE_NUMBA = True
    except ImportError:
        pass

if HAVE_NUMBA:

    @njit(cache=True)
    def weighted_rational_sum_numba(num, den, scale, xs, ws):
        total = 0.0
        comp = 0.0  # Kahan carry
        min_den = np.inf
        for i in range(xs.shape[0]):
            x = xs[i]
            nv = num[num.shape[0] - 1]
            for j in range(num.shape[0] - 2, -1, -1):
                nv = nv * x + num[j]
            dv = den[den.shape[0] - 1]
            for j in range(den.shape[0] - 2, -1, -1):
                dv = dv * x + den[j]
            ad = abs(dv)
            if ad < min_den:
                min_den = ad
            y = ws[i] * (nv / dv) - comp
            t = total + y
            comp = (t - total) - y
            total = t
        return scale * total, min_den

    @njit(cache=True)
    def chebyshev_log_moment_numba(a, m, w, terms):
        t = math.acos(a)
        sin_t = math.sin(t)
        total = 0.0
        comp = 0.0
        for k in range(terms):
            y = math.sin((k + 1.0) * t) / (k + m + 1.0) ** w - comp
            s = total + y
            comp = (s - total) - y
            total = s
        return total / sin_t

    @njit(cache=True)
    def sine_series_numba(theta, w, terms):
        total = 0.0
        comp = 0.0
        for n in range(1, terms + 1):
            y = math.sin(n * theta) / float(n) ** w - comp
            s = total + y
            comp = (s - total) - y
            total = s
        return total

    def _wrs(num, den, scale, xs, ws):
        out = weighted_rational_sum_numba(
            np.asarray(num, dtype=np.float64), np.asarray(den, dtype=np.float64),
            float(scale), xs, ws)
        return float(out[0]), float(out[1])

    weighted_rational_sum = _wrs
    chebyshev_log_moment = chebyshev_log_moment_numba
    sine_series = sine_series_numba
    BACKEND = "numba"
else:

    def _wrs_np(num, den, scale, xs, ws):
        return weighted_rational_sum_numpy(
            np.asarray(num, dtype=np.float64), np.asarray(den, dtype=np.float64),
            float(scale), xs, ws)

    weighted_rational_sum = _wrs_np
    chebyshev_log_moment = chebyshev_log_moment_numpy
    sine_series = sine_series_numpy
    BACKEND = "numpy"
