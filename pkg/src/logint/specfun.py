"""Numeric special functions to near machine precision.

Complex polylogarithms on the closed unit disk, the Clausen function,
Hurwitz zeta at integer weight, polygamma at rationals, and the named
constants built from them.  Everything is 64-bit float with compensated
summation; series are reorganized (argument reduction, Bernoulli-type
expansions, Euler-Maclaurin) so no loop needs more than ~100 terms.
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import cache, lru_cache

from .errors import DomainError, PoleError

_EPS = 1e-17
_TWO_PI = 2.0 * math.pi


# ---------------------------------------------------------------------------
# Bernoulli numbers (exact)


@cache
def bernoulli(n: int) -> Fraction:
    """Exact Bernoulli number B_n (B_1 = -1/2 convention)."""
    if n < 0:
        raise ValueError("Bernoulli index must be >= 0")
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(-1, 2)
    if n % 2 == 1:
        return Fraction(0)
    # sum_{j<n} C(n+1, j) B_j = -C(n+1, n) B_n
    acc = Fraction(0)
    for j in range(n):
        acc += math.comb(n + 1, j) * bernoulli(j)
    return -acc / (n + 1)


# ---------------------------------------------------------------------------
# Riemann / Hurwitz zeta and polygamma

_EM_TERMS = 30      # explicit head terms in Euler-Maclaurin
_EM_BERNOULLI = 7   # corrections through B_14; B_16 monitors the error


def hurwitz_zeta(s: int, q: Fraction | int) -> float:
    """zeta(s, q) = sum_{k>=0} 1/(k+q)^s for integer s >= 2, 0 < q <= 1.

    Euler-Maclaurin with 30 explicit terms and Bernoulli corrections
    through B_14; the first omitted correction is asserted < 1e-15
    relative.
    """
    if not isinstance(s, int) or s < 2:
        raise DomainError(f"hurwitz_zeta weight must be an integer >= 2, got {s!r}")
    q = Fraction(q)
    if not 0 < q <= 1:
        raise DomainError(f"hurwitz_zeta argument must be in (0, 1], got {q}")
    pieces = [float(q + k) ** (-s) for k in range(_EM_TERMS)]
    x = float(q + _EM_TERMS)
    pieces.append(x ** (1 - s) / (s - 1))
    pieces.append(0.5 * x**-s)
    rising = float(s)
    xpow = x ** (-s - 1)
    inv_x2 = 1.0 / (x * x)
    for j in range(1, _EM_BERNOULLI + 2):
        term = float(bernoulli(2 * j) / math.factorial(2 * j)) * rising * xpow
        if j <= _EM_BERNOULLI:
            pieces.append(term)
        else:
            total = math.fsum(pieces)
            assert abs(term) < 1e-15 * abs(total), "Euler-Maclaurin tail too large"
            return total
        rising *= (s + 2 * j - 1) * (s + 2 * j)
        xpow *= inv_x2
    raise AssertionError("unreachable")


@lru_cache(maxsize=None)
def zeta(m: int) -> float:
    """Riemann zeta at integer m >= 2; even m in closed form via Bernoulli."""
    if not isinstance(m, int) or m < 2:
        raise DomainError(f"zeta argument must be an integer >= 2, got {m!r}")
    if m % 2 == 0:
        # zeta(2n) = (2 pi)^{2n} |B_2n| / (2 (2n)!)
        return float(abs(bernoulli(m)) * 2 ** (m - 1) / math.factorial(m)) * math.pi**m
    return hurwitz_zeta(m, Fraction(1))


def polygamma(m: int, q: Fraction | int) -> float:
    """psi^(m)(q) = (-1)^(m+1) m! zeta(m+1, q) for m >= 1, 0 < q <= 1."""
    if not isinstance(m, int) or m < 1:
        raise DomainError(f"polygamma order must be an integer >= 1, got {m!r}")
    return (-1) ** (m + 1) * math.factorial(m) * hurwitz_zeta(m + 1, q)


# ---------------------------------------------------------------------------
# Clausen function


def _clausen2_reduced(theta: float) -> float:
    """Cl_2 on [0, pi] via the Bernoulli-type expansion

        Cl_2(t) = t - t log t + sum_{n>=1} |B_2n| t^(2n+1) / (2 (2n)! n (2n+1))
    """
    if theta == 0.0:
        return 0.0
    pieces = [theta - theta * math.log(theta)]
    t2 = theta * theta
    tpow = theta * t2
    for n in range(1, 40):
        c = float(abs(bernoulli(2 * n)) / (2 * math.factorial(2 * n) * n * (2 * n + 1)))
        term = c * tpow
        pieces.append(term)
        if term < _EPS * abs(pieces[0]) + 1e-300:
            break
        tpow *= t2
    return math.fsum(pieces)


def clausen2(theta: float) -> float:
    """Cl_2(theta) = sum_{k>=1} sin(k theta)/k^2; odd, 2 pi periodic."""
    t = math.remainder(theta, _TWO_PI)  # [-pi, pi]
    if t < 0:
        return -_clausen2_reduced(-t)
    return _clausen2_reduced(t)


def clausen2_pi(r: Fraction | int) -> float:
    """Cl_2(pi * r) with the periodic reduction done exactly on the rational r.

    Avoids rounding pi * r for large r before reduction.
    """
    r = Fraction(r) % 2  # [0, 2)
    if r > 1:
        return -clausen2_pi(2 - r)
    return _clausen2_reduced(math.pi * float(r))


@cache
def catalan() -> float:
    """Catalan's constant, Cl_2(pi/2); computed once and memoized."""
    return clausen2_pi(Fraction(1, 2))


# ---------------------------------------------------------------------------
# Dilogarithm and polylogarithm on the closed unit disk


def _dilog_series(z: complex) -> complex:
    """Defining series, geometric convergence for |z| <= 1/2."""
    acc = complex(0.0)
    zk = complex(1.0)
    for k in range(1, 200):
        zk *= z
        term = zk / (k * k)
        acc += term
        if abs(term) < _EPS * abs(acc) + 1e-300:
            break
    return acc


def _dilog_log_series(z: complex) -> complex:
    """Bernoulli expansion Li_2(z) = sum_n B_n w^(n+1)/(n+1)!, w = -log(1-z).

    Converges for |w| < 2 pi; used in the annulus where neither the
    defining series nor the 1-z reflection converges quickly.
    """
    w = -cmath.log(1 - z)
    acc = w - w * w / 4.0  # n = 0 and n = 1 terms
    wpow = w * w * w
    for n in range(2, 44, 2):  # odd B_n vanish
        term = float(bernoulli(n) / math.factorial(n + 1)) * wpow
        acc += term
        if abs(term) < _EPS * abs(acc):
            break
        wpow *= w * w
    return acc


def _unit_circle_angle(z: complex) -> float:
    """Argument of z mapped to [0, 2 pi)."""
    theta = math.atan2(z.imag, z.real)
    return theta + _TWO_PI if theta < 0 else theta


def dilog(z: complex | float) -> complex:
    """Li_2(z) = sum z^k/k^2 on |z| <= 1, each component to ~1e-15 relative.

    On the unit circle the real part is the exact Bernoulli polynomial
    pi^2/6 - pi t/2 + t^2/4 and the imaginary part is Cl_2(t).
    """
    z = complex(z)
    r = abs(z)
    if r > 1 + 1e-12:
        raise DomainError(f"dilog argument outside the closed unit disk: |z| = {r}")
    if r <= 0.5:
        return _dilog_series(z)
    if abs(r - 1.0) <= 1e-13:
        t = _unit_circle_angle(z)
        re = math.pi**2 / 6 - math.pi * t / 2 + t * t / 4
        return complex(re, clausen2(t))
    if abs(1 - z) <= 0.5:
        # Li_2(z) + Li_2(1-z) = pi^2/6 - log(z) log(1-z)
        return math.pi**2 / 6 - cmath.log(z) * cmath.log(1 - z) - _dilog_series(1 - z)
    return _dilog_log_series(z)


def _polylog_series(s: int, z: complex) -> complex:
    acc = complex(0.0)
    zk = complex(1.0)
    for k in range(1, 400):
        zk *= z
        term = zk / k**s
        acc += term
        if abs(term) < _EPS * abs(acc) + 1e-300:
            break
    return acc


def _zeta_at_int(n: int) -> float:
    """zeta at any integer except 1: negative values via Bernoulli."""
    if n > 1:
        return zeta(n)
    if n == 0:
        return -0.5
    if n < 0:
        return float(-bernoulli(1 - n) / (1 - n))
    raise PoleError("zeta pole at 1")


def _polylog_log_series(s: int, z: complex) -> complex:
    """Li_s(e^w) = sum_{k != s-1} zeta(s-k) w^k/k!
                   + w^(s-1)/(s-1)! (H_{s-1} - log(-w)),   |w| < 2 pi.

    For |z| <= 1, Re w <= 0, so -w stays clear of the log branch cut.
    """
    w = cmath.log(z)
    harmonic = math.fsum(1.0 / j for j in range(1, s))
    pieces = [w ** (s - 1) / math.factorial(s - 1) * (harmonic - cmath.log(-w))]
    scale = abs(pieces[0]) + 1.0
    wpow = complex(1.0)
    fact = 1.0
    for k in range(0, 120):
        if k > 0:
            wpow *= w
            fact *= k
        if k == s - 1:
            continue
        zv = _zeta_at_int(s - k)
        if zv == 0.0:  # zeta(-2), zeta(-4), ...: no information on convergence
            continue
        term = zv * wpow / fact
        pieces.append(term)
        if k > s and abs(term) < _EPS * scale:
            break
    re = math.fsum(p.real for p in pieces)
    im = math.fsum(p.imag for p in pieces)
    return complex(re, im)


def polylog(s: int, z: complex | float) -> complex:
    """Li_s(z) = sum_{k>=1} z^k/k^s for integer s >= 1, |z| <= 1.

    s = 1 returns -log(1-z) (PoleError at z = 1).
    """
    if not isinstance(s, int) or s < 1:
        raise DomainError(f"polylog weight must be an integer >= 1, got {s!r}")
    z = complex(z)
    r = abs(z)
    if r > 1 + 1e-12:
        raise DomainError(f"polylog argument outside the closed unit disk: |z| = {r}")
    if s == 1:
        if abs(1 - z) < 1e-15:
            raise PoleError("Li_1 diverges at z = 1")
        return -cmath.log(1 - z)
    if s == 2:
        return dilog(z)
    if z == 0:
        return complex(0.0)
    if z == 1:
        return complex(zeta(s))
    if z == -1:
        return complex(-(1 - 2.0 ** (1 - s)) * zeta(s))
    if r <= 0.75:
        return _polylog_series(s, z)
    return _polylog_log_series(s, z)
