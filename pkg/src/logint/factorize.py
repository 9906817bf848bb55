"""Denominator factorization and exact partial fractions.

Factors a monic denominator into rational-root linear factors (x + r) and
unit-circle quadratics (x^2 - 2ax + 1 with rational a, |a| < 1); anything
else lands in ``residual``.  Decomposition is restricted to simple poles
with residual 1, matching the closed-form machinery downstream.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    PoleInUnitInterval,
    UnsupportedFactor,
    UnsupportedMultiplicity,
)
from .ratfun import Polynomial, RationalFunction, poly_gcd

# angle/pi for the three quadratics with exact sine-sum reductions
_EXACT_ANGLES = {
    Fraction(0): Fraction(1, 2),
    Fraction(1, 2): Fraction(1, 3),
    Fraction(-1, 2): Fraction(2, 3),
}


@dataclass(frozen=True)
class LinearFactor:
    """Monic factor x + r with root -r."""

    r: Fraction
    multiplicity: int = 1

    def poly(self) -> Polynomial:
        return Polynomial((self.r, 1))


@dataclass(frozen=True)
class QuadraticFactor:
    """Factor x^2 - 2ax + 1, roots e^{+-it} with t = arccos(a), |a| < 1.

    ``angle`` is t/pi as an exact Fraction when a is 0 or +-1/2, else None.
    """

    a: Fraction
    multiplicity: int = 1
    angle: Fraction | None = None

    def __post_init__(self):
        if not abs(self.a) < 1:
            raise ValueError(f"quadratic parameter |a| must be < 1, got {self.a}")
        object.__setattr__(self, "angle", _EXACT_ANGLES.get(self.a))

    def poly(self) -> Polynomial:
        return Polynomial((1, -2 * self.a, 1))


@dataclass(frozen=True)
class DenominatorFactorization:
    constant: Fraction
    linears: tuple[LinearFactor, ...]
    quadratics: tuple[QuadraticFactor, ...]
    residual: Polynomial

    def product(self) -> Polynomial:
        """Exact recombination; equals the input denominator."""
        out = Polynomial.const(self.constant)
        for lf in self.linears:
            out = out * lf.poly() ** lf.multiplicity
        for qf in self.quadratics:
            out = out * qf.poly() ** qf.multiplicity
        return out * self.residual


@dataclass(frozen=True)
class PartialFractionForm:
    """polynomial_part + sum A/(x+r) + sum (Bx+C)/(x^2-2ax+1), all exact."""

    polynomial_part: Polynomial
    linear_terms: tuple[tuple[Fraction, LinearFactor], ...]
    quadratic_terms: tuple[tuple[Fraction, Fraction, QuadraticFactor], ...] = field(default=())


def _divisors(n: int) -> list[int]:
    """Positive divisors of |n|; trial division (coefficients stay small here)."""
    n = abs(n)
    if n == 0:
        return []
    small: list[int] = []
    large: list[int] = []
    d = 1
    while d * d <= n and d <= 10**7:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _rational_root_candidates(p: Polynomial) -> list[Fraction]:
    """Candidates +-num/den from the rational root theorem on the primitive
    integer form of p (constant term must be nonzero)."""
    c = p.content()
    ints = [coef / c for coef in p.coeffs]
    a0 = int(ints[0])
    an = int(ints[-1])
    cands: set[Fraction] = set()
    for pnum in _divisors(a0):
        for pden in _divisors(an):
            q = Fraction(pnum, pden)
            cands.add(q)
            cands.add(-q)
    return sorted(cands)


def _symbolic_quadratic_remainder(p: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Remainder r1(a)*x + r0(a) of p(x) divided by x^2 - 2ax + 1.

    The divisor's x-coefficient is symbolic, so the remainder coefficients
    are polynomials in a (returned as Polynomial over Q in the variable a).
    """
    two_a = Polynomial((0, 2))  # the polynomial 2a
    coeffs: list[Polynomial] = [Polynomial.const(c) for c in p.coeffs]
    for k in range(len(coeffs) - 1, 1, -1):
        lead = coeffs[k]
        if lead.is_zero:
            continue
        coeffs[k] = Polynomial()
        coeffs[k - 1] = coeffs[k - 1] + lead * two_a
        coeffs[k - 2] = coeffs[k - 2] - lead
    r0 = coeffs[0] if coeffs else Polynomial()
    r1 = coeffs[1] if len(coeffs) > 1 else Polynomial()
    return r0, r1


def _quadratic_parameters(p: Polynomial) -> list[Fraction]:
    """All rational a with |a| < 1 such that x^2 - 2ax + 1 divides p."""
    if p.degree < 2:
        return []
    r0, r1 = _symbolic_quadratic_remainder(p)
    if r0.is_zero and r1.is_zero:  # cannot happen for p != 0
        raise AssertionError("divisible by x^2-2ax+1 for every a")
    if r0.is_zero:
        g = r1
    elif r1.is_zero:
        g = r0
    else:
        g = poly_gcd(r0, r1)
    if g.degree < 1:
        return []
    out: set[Fraction] = set()
    if g[0] == 0:  # a = 0 root; strip it so the root theorem applies
        out.add(Fraction(0))
        while g.degree >= 1 and g[0] == 0:
            g = g // Polynomial((0, 1))
    if g.degree >= 1:
        for a in _rational_root_candidates(g):
            if abs(a) < 1 and g.eval(a) == 0:
                out.add(a)
    return sorted(out)


def factor_denominator(den: Polynomial) -> DenominatorFactorization:
    """Extract rational roots and x^2-2ax+1 divisors with exact multiplicities.

    Never fails: anything outside the admissible family is returned in
    ``residual`` (a monic polynomial, 1 when the factorization is complete).
    """
    if den.is_zero:
        raise ValueError("cannot factor the zero polynomial")
    if den.leading != 1:
        raise ValueError("denominator must be monic")
    work = den
    linears: list[LinearFactor] = []

    # roots at zero first (x | den), so the root theorem sees a0 != 0
    k = 0
    while work.degree >= 1 and work[0] == 0:
        work = work // Polynomial((0, 1))
        k += 1
    if k:
        linears.append(LinearFactor(Fraction(0), k))

    if work.degree >= 1:
        for root in _rational_root_candidates(work):
            m = 0
            factor = Polynomial((-root, 1))
            while work.degree >= 1 and work.eval(root) == 0:
                work = work // factor
                m += 1
            if m:
                linears.append(LinearFactor(-root, m))

    quads: dict[Fraction, int] = {}
    while work.degree >= 2:
        params = _quadratic_parameters(work)
        if not params:
            break
        for a in params:
            q = Polynomial((1, -2 * a, 1))
            while True:
                quot, rem = divmod(work, q)
                if not rem.is_zero:
                    break
                work = quot
                quads[a] = quads.get(a, 0) + 1

    linears.sort(key=lambda lf: lf.r)
    quadratics = tuple(QuadraticFactor(a, m) for a, m in sorted(quads.items()))
    return DenominatorFactorization(
        constant=Fraction(1),
        linears=tuple(linears),
        quadratics=quadratics,
        residual=work,
    )


def _poly_ext_inverse(u: Polynomial, m: Polynomial) -> Polynomial:
    """Inverse of u modulo m in Q[x] (extended Euclid); gcd(u, m) must be 1."""
    r0, r1 = m, u % m
    s0, s1 = Polynomial(), Polynomial.const(1)
    while not r1.is_zero:
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
    if r0.degree != 0:
        raise ValueError("not invertible: arguments share a factor")
    return s0.scaled(1 / r0.leading) % m


def partial_fractions(f: RationalFunction) -> PartialFractionForm:
    """Exact decomposition into polynomial part + simple-pole terms.

    Requires every denominator factor admissible with multiplicity 1 and no
    root in [0,1]; raises PoleInUnitInterval / UnsupportedMultiplicity /
    UnsupportedFactor otherwise.
    """
    fact = factor_denominator(f.den)

    for lf in fact.linears:
        root = -lf.r
        if 0 <= root <= 1:
            raise PoleInUnitInterval(f"pole at x = {root} inside [0, 1]")
    for lf in fact.linears:
        if lf.multiplicity > 1:
            raise UnsupportedMultiplicity(
                f"repeated linear factor (x + {lf.r})^{lf.multiplicity}")
    for qf in fact.quadratics:
        if qf.multiplicity > 1:
            raise UnsupportedMultiplicity(
                f"repeated quadratic factor, a = {qf.a}, multiplicity {qf.multiplicity}")
    if fact.residual.degree > 0:
        raise UnsupportedFactor(
            "denominator part outside the (x+r), (x^2-2ax+1) family: "
            f"{fact.residual!r}")

    scaled_num = f.num.scaled(f.scale)
    poly_part, rem = divmod(scaled_num, f.den)

    den_deriv = f.den.derivative()
    linear_terms = []
    for lf in fact.linears:
        root = -lf.r
        a_coef = rem.eval(root) / den_deriv.eval(root)
        linear_terms.append((a_coef, lf))

    quadratic_terms = []
    for qf in fact.quadratics:
        q = qf.poly()
        cof = f.den // q
        inv = _poly_ext_inverse(cof, q)
        bc = (rem * inv) % q
        quadratic_terms.append((bc[1], bc[0], qf))

    return PartialFractionForm(poly_part, tuple(linear_terms), tuple(quadratic_terms))


def recombine(p: PartialFractionForm) -> RationalFunction:
    """Exact sum of all terms over the common denominator, normalized."""
    acc = RationalFunction(p.polynomial_part, Polynomial.const(1))
    one = Polynomial.const(1)
    for a_coef, lf in p.linear_terms:
        acc = acc + RationalFunction(one.scaled(a_coef), lf.poly())
    for b, c, qf in p.quadratic_terms:
        acc = acc + RationalFunction(Polynomial((c, b)), qf.poly())
    return acc


def _sign_changes_on_unit_interval(p: Polynomial, samples: int = 512) -> bool:
    """Cheap float screen for a real root of p in [0,1] (used by callers
    that want an early divergence check; exact checks live elsewhere)."""
    prev = p.evalf(0.0)
    for i in range(1, samples + 1):
        cur = p.evalf(i / samples)
        if prev == 0.0 or cur == 0.0 or (prev < 0) != (cur < 0):
            return True
        prev = cur
    return False
