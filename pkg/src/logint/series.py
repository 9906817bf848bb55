"""Chebyshev-U machinery and exact reduction of periodic sine sums.

For the three angles t with rational cosine and t/pi rational (pi/2, pi/3,
2 pi/3 -- Niven's theorem leaves no others short of t = 0, pi), the sums

    sum_{n >= shift} sin(n t) / n^w

regroup by residue class mod the period P into exact combinations
P^{-w} * sum_j sin(j t) * zeta(w, j/P).  Coefficients live in the small
field {q * sqrt(d) : q rational, d in {1, 2, 3}}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import specfun
from .errors import UnsupportedAngle


@dataclass(frozen=True)
class AlgebraicScalar:
    """Exact scalar q * sqrt(d) with q rational and d in {1, 2, 3}."""

    q: Fraction
    d: int = 1

    def __post_init__(self):
        if self.d not in (1, 2, 3):
            raise ValueError(f"unsupported radical sqrt({self.d})")
        if self.q == 0 and self.d != 1:
            object.__setattr__(self, "d", 1)

    @classmethod
    def of(cls, q: Fraction | int, d: int = 1) -> "AlgebraicScalar":
        return cls(Fraction(q), d)

    @property
    def is_zero(self) -> bool:
        return self.q == 0

    def __neg__(self) -> "AlgebraicScalar":
        return AlgebraicScalar(-self.q, self.d)

    def __add__(self, other: "AlgebraicScalar") -> "AlgebraicScalar":
        if self.is_zero:
            return other
        if other.is_zero:
            return self
        if self.d != other.d:
            raise ValueError(f"cannot add sqrt({self.d}) and sqrt({other.d}) terms")
        return AlgebraicScalar(self.q + other.q, self.d)

    def __sub__(self, other: "AlgebraicScalar") -> "AlgebraicScalar":
        return self + (-other)

    def __mul__(self, other: "AlgebraicScalar | Fraction | int") -> "AlgebraicScalar":
        if isinstance(other, AlgebraicScalar):
            if self.d == other.d:
                return AlgebraicScalar(self.q * other.q * self.d, 1)
            if self.d == 1:
                return AlgebraicScalar(self.q * other.q, other.d)
            if other.d == 1:
                return AlgebraicScalar(self.q * other.q, self.d)
            raise ValueError(f"sqrt({self.d}) * sqrt({other.d}) leaves the field")
        return AlgebraicScalar(self.q * Fraction(other), self.d)

    __rmul__ = __mul__

    def __float__(self) -> float:
        return float(self.q) * math.sqrt(self.d)

    def __str__(self) -> str:
        if self.d == 1:
            return str(self.q)
        return f"{self.q}*sqrt({self.d})"


ALG_ZERO = AlgebraicScalar(Fraction(0))
ALG_ONE = AlgebraicScalar(Fraction(1))


def chebyshev_u(k: int, a: Fraction | int) -> Fraction:
    """U_k(a) by the exact recurrence U_{k+1} = 2a U_k - U_{k-1}."""
    if k < 0:
        raise ValueError("Chebyshev index must be >= 0")
    a = Fraction(a)
    u_prev, u = Fraction(1), 2 * a
    if k == 0:
        return u_prev
    for _ in range(k - 1):
        u_prev, u = u, 2 * a * u - u_prev
    return u


# exact sin(j * pi * r) tables, j = 1..P, for the supported angles
_HALF_ROOT3 = AlgebraicScalar(Fraction(1, 2), 3)
_PROFILES: dict[Fraction, tuple[AlgebraicScalar, ...]] = {
    Fraction(1, 2): (ALG_ONE, ALG_ZERO, -ALG_ONE, ALG_ZERO),
    Fraction(1, 3): (_HALF_ROOT3, _HALF_ROOT3, ALG_ZERO,
                     -_HALF_ROOT3, -_HALF_ROOT3, ALG_ZERO),
    Fraction(2, 3): (_HALF_ROOT3, -_HALF_ROOT3, ALG_ZERO),
}


@dataclass(frozen=True)
class SinePeriodProfile:
    """Period and exact values of n -> sin(n * pi * angle), angle rational.

    values[i] = sin((i+1) t); the last entry is sin(P t) = 0 since P t is a
    multiple of 2 pi for every supported angle.
    """

    angle: Fraction
    period: int
    values: tuple[AlgebraicScalar, ...]

    def value_at(self, n: int) -> AlgebraicScalar:
        """sin(n t) for any integer n, via periodicity."""
        return self.values[(n - 1) % self.period]


def sine_profile(angle: Fraction) -> SinePeriodProfile:
    """Profile for t = pi * angle; only 1/2, 1/3, 2/3 reduce exactly."""
    angle = Fraction(angle)
    values = _PROFILES.get(angle)
    if values is None:
        raise UnsupportedAngle(
            f"no exact sine profile for t = pi*{angle}; "
            "rational cos(t) with t/pi rational forces t/pi in {1/2, 1/3, 2/3}")
    return SinePeriodProfile(angle, len(values), values)


@dataclass(frozen=True)
class HurwitzCombo:
    """Exact combination sum_i coeff_i * zeta(weight, q_i), q_i in (0, 1]."""

    weight: int
    terms: tuple[tuple[AlgebraicScalar, Fraction], ...]

    def value(self) -> float:
        return math.fsum(
            float(c) * specfun.hurwitz_zeta(self.weight, q) for c, q in self.terms)


@dataclass(frozen=True)
class PeriodicSumResult:
    """Value = combo + head_offset, exactly."""

    combo: HurwitzCombo
    head_offset: AlgebraicScalar

    def value(self) -> float:
        return self.combo.value() + float(self.head_offset)


def _full_sum_combo(profile: SinePeriodProfile, weight: int,
                    sin_at: "callable" = None) -> HurwitzCombo:
    """sum_{n>=1} sin(n t)/n^w as P^{-w} sum_j sin(jt) zeta(w, j/P)."""
    p = profile.period
    scale = Fraction(1, p**weight)
    terms = []
    for j in range(1, p + 1):
        c = (sin_at(j) if sin_at else profile.value_at(j)) * scale
        if not c.is_zero:
            terms.append((c, Fraction(j, p)))
    return HurwitzCombo(weight, tuple(terms))


def periodic_sum(profile: SinePeriodProfile, weight: int, shift: int = 1) -> PeriodicSumResult:
    """Exact form of sum_{n >= shift} sin(n t) / n^weight.

    Residue classes j mod P give P^{-weight} * sin(jt) * zeta(weight, j/P);
    the finitely many terms with n < shift are subtracted exactly.
    """
    if weight < 2:
        raise ValueError("weight must be >= 2 for absolute convergence")
    if shift < 1:
        raise ValueError("shift must be >= 1")
    combo = _full_sum_combo(profile, weight)
    head = ALG_ZERO
    for n in range(1, shift):
        head = head - profile.value_at(n) * Fraction(1, n**weight)
    return PeriodicSumResult(combo, head)


def shifted_sine_sum(profile: SinePeriodProfile, weight: int, m: int) -> PeriodicSumResult:
    """Exact form of sum_{n >= 1} sin(n t) / (n + m)^weight for m >= 0.

    Re-indexing by N = n + m rotates the residue classes of the profile
    (pure integer bookkeeping): the result is sum_{N >= m+1} sin((N-m) t)/N^w.
    """
    if m < 0:
        raise ValueError("shift m must be >= 0")
    rotated = lambda j: profile.value_at(j - m)
    combo = _full_sum_combo(profile, weight, sin_at=rotated)
    head = ALG_ZERO
    for n in range(1, m + 1):
        head = head - rotated(n) * Fraction(1, n**weight)
    return PeriodicSumResult(combo, head)
