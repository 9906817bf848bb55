"""Independent numerical quadrature of int_0^1 R(x) log^p(x) dx.

Primary rule: tanh-sinh (double exponential), which absorbs the log^p
endpoint singularity at 0.  Secondary rule for cross-validation: the
substitution u = -log x followed by truncated composite Gauss-Legendre --
a genuinely different discretization.  Shares nothing with the symbolic
engine beyond polynomial evaluation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable

import numpy as np

from . import kernels
from .errors import NoConvergence, PoleDetected
from .ratfun import RationalFunction

_MAX_LEVEL = 12
_TMAX = 6.1          # |u| = (pi/2) sinh(TMAX) ~ 345: x under/overflows beyond
_POLE_EPS = 1e-12
_X_FLOOR = 1e-300


@dataclass(frozen=True)
class QuadratureResult:
    value: float
    est_error: float
    levels_used: int
    evaluations: int


@lru_cache(maxsize=None)
def _nodes(level: int) -> tuple[np.ndarray, np.ndarray]:
    """New tanh-sinh abscissas/weights at this refinement level.

    x(t) = 1/(1 + exp(-pi sinh t)) on (0,1); weights include dx/dt but not
    the step h.  Level 0 holds the integer grid, level l > 0 the odd
    multiples of h = 2^-l.
    """
    if level == 0:
        ts = np.arange(-_TMAX // 1, _TMAX // 1 + 1) * 1.0
    else:
        h = 2.0**-level
        n = int(_TMAX / h)
        odd = np.arange(1, n + 1, 2, dtype=np.float64)
        ts = np.concatenate([-odd[::-1], odd]) * h
    u = 0.5 * np.pi * np.sinh(ts)
    eu = np.exp(-2.0 * np.abs(u))  # <= 1: no overflow either side
    xs = np.where(u >= 0, 1.0 / (1.0 + eu), eu / (1.0 + eu))
    xs = np.clip(xs, _X_FLOOR, 1.0 - 2.0**-53)
    sech2 = 4.0 * eu / (1.0 + eu) ** 2
    ws = 0.25 * np.pi * np.cosh(ts) * sech2
    return xs, ws


def _tanh_sinh_levels(batch: Callable[[np.ndarray, np.ndarray], float],
                      rel_tol: float) -> tuple[QuadratureResult, list[float]]:
    """Level-halving trapezoid driver; batch(xs, ws) returns sum(ws * f(xs))."""
    total = None
    evals = 0
    diffs: list[float] = []
    for level in range(_MAX_LEVEL + 1):
        xs, ws = _nodes(level)
        evals += xs.size
        h = 2.0**-level
        partial = batch(xs, ws)
        new_total = h * partial if total is None else 0.5 * total + h * partial
        if total is not None:
            diff = abs(new_total - total)
            diffs.append(diff)
            if level >= 2 and diff <= rel_tol * (1.0 + abs(new_total)):
                est = max(diff, abs(new_total) * 1e-16)
                return QuadratureResult(new_total, est, level, evals), diffs
        total = new_total
    raise NoConvergence(
        f"tanh-sinh did not reach rel_tol={rel_tol} in {_MAX_LEVEL} levels "
        f"(last value {total!r})")


def tanh_sinh(integrand: Callable[[float], float], rel_tol: float = 1e-11) -> QuadratureResult:
    """Integrate a scalar callable over (0,1); tolerates log^p endpoint blowup."""
    _check_tol(rel_tol)

    def batch(xs: np.ndarray, ws: np.ndarray) -> float:
        return float(np.sum(ws * np.array([integrand(float(x)) for x in xs])))

    result, _ = _tanh_sinh_levels(batch, rel_tol)
    return result


def _check_tol(rel_tol: float) -> None:
    if not 1e-13 <= rel_tol <= 1e-6:
        raise ValueError(f"rel_tol must lie in [1e-13, 1e-6], got {rel_tol!r}")


def _pole_screen(f: RationalFunction) -> None:
    """Cheap upfront check: sign change or near-zero of den on [0,1]."""
    den = np.asarray(f.den.float_coeffs())
    grid = np.linspace(0.0, 1.0, 513)
    dv = np.full_like(grid, den[-1])
    for c in den[-2::-1]:
        dv = dv * grid + c
    if float(np.min(np.abs(dv))) < _POLE_EPS or np.any(np.sign(dv[:-1]) != np.sign(dv[1:])):
        raise PoleDetected("denominator vanishes or changes sign on [0, 1]")


def integrate_log_power(f: RationalFunction, p: int, rel_tol: float = 1e-11) -> QuadratureResult:
    """Tanh-sinh value of int_0^1 f(x) log^p(x) dx with pole monitoring."""
    if p < 0:
        raise ValueError("log power must be >= 0")
    _check_tol(rel_tol)
    _pole_screen(f)
    num = f.num.float_coeffs()
    den = f.den.float_coeffs()
    scale = float(f.scale)

    def batch(xs: np.ndarray, ws: np.ndarray) -> float:
        ws_eff = ws * np.log(xs) ** p if p else ws
        total, min_den = kernels.weighted_rational_sum(num, den, scale, xs, ws_eff)
        if min_den < _POLE_EPS:
            raise PoleDetected("quadrature node hit a pole (|den| < 1e-12)")
        return total

    result, _ = _tanh_sinh_levels(batch, rel_tol)
    return result


def tanh_sinh_level_differences(f: RationalFunction, p: int,
                                rel_tol: float = 1e-11) -> list[float]:
    """Successive |I_l - I_{l-1}| until convergence (order-sanity checks)."""
    _check_tol(rel_tol)
    num = f.num.float_coeffs()
    den = f.den.float_coeffs()
    scale = float(f.scale)

    def batch(xs: np.ndarray, ws: np.ndarray) -> float:
        ws_eff = ws * np.log(xs) ** p if p else ws
        return kernels.weighted_rational_sum(num, den, scale, xs, ws_eff)[0]

    _, diffs = _tanh_sinh_levels(batch, rel_tol)
    return diffs


# ---------------------------------------------------------------------------
# Secondary rule: u = -log x, truncated composite Gauss-Legendre


@lru_cache(maxsize=None)
def _gl_base(order: int) -> tuple[np.ndarray, np.ndarray]:
    return np.polynomial.legendre.leggauss(order)


def integrate_log_power_gauss(f: RationalFunction, p: int,
                              rel_tol: float = 1e-11) -> QuadratureResult:
    """Same integral via int_0^inf R(e^-u) (-u)^p e^-u du, truncated at U.

    The tail beyond U = 60 + 10p is bounded by max|R| * Gamma(p+1, U),
    which is below 1e-25 * max|R| for every p <= 6; panels are doubled
    until the value is stable.
    """
    if p < 0:
        raise ValueError("log power must be >= 0")
    _check_tol(rel_tol)
    _pole_screen(f)
    num = f.num.float_coeffs()
    den = f.den.float_coeffs()
    scale = float(f.scale)
    upper = 60.0 + 10.0 * p
    base_x, base_w = _gl_base(20)

    def value_with(panels: int) -> tuple[float, int]:
        edges = np.linspace(0.0, upper, panels + 1)
        pieces = []
        for lo, hi in zip(edges[:-1], edges[1:]):
            mid, half = 0.5 * (lo + hi), 0.5 * (hi - lo)
            us = mid + half * base_x
            xs = np.exp(-us)
            ws = half * base_w * us**p * xs * (-1.0) ** p
            total, min_den = kernels.weighted_rational_sum(num, den, scale, xs, ws)
            if min_den < _POLE_EPS:
                raise PoleDetected("quadrature node hit a pole (|den| < 1e-12)")
            pieces.append(total)
        return float(math.fsum(pieces)), panels * base_x.size

    panels = max(16, int(upper / 4))
    value, evals = value_with(panels)
    for round_ in range(1, 5):
        refined, more = value_with(2 * panels)
        evals += more
        diff = abs(refined - value)
        if diff <= rel_tol * (1.0 + abs(refined)):
            return QuadratureResult(refined, max(diff, abs(refined) * 1e-16),
                                    round_, evals)
        panels *= 2
        value = refined
    raise NoConvergence(f"Gauss-Legendre route did not stabilize at rel_tol={rel_tol}")
