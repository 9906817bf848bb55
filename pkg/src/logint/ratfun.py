"""Exact rational-function arithmetic over Q.

Coefficients are ``fractions.Fraction`` end to end; floating point enters
only in ``eval_at``.  A ``RationalFunction`` is kept in the normal form

    scale * num / den

with ``den`` monic, ``num`` a primitive integer polynomial with positive
leading coefficient, and gcd(num, den) = 1.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import reduce
from typing import Iterable, Union

from .errors import DivisionByZeroPoly, PoleEvaluation

Rational = Fraction
Coeff = Union[int, Fraction]


def _frac(c: Coeff) -> Fraction:
    return c if isinstance(c, Fraction) else Fraction(c)


class Polynomial:
    """Univariate polynomial with exact rational coefficients.

    Coefficients are stored ascending (index = power of x) with no
    trailing zeros; the empty tuple is the zero polynomial, degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Coeff] = ()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def const(cls, c: Coeff) -> "Polynomial":
        return cls((c,))

    @classmethod
    def x_power(cls, k: int, c: Coeff = 1) -> "Polynomial":
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> Fraction:
        if self.is_zero:
            raise ValueError("zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def __getitem__(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __neg__(self) -> "Polynomial":
        return Polynomial(tuple(-c for c in self.coeffs))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(tuple(self[k] + other[k] for k in range(n)))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(tuple(self[k] - other[k] for k in range(n)))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        if self.is_zero or other.is_zero:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    def scaled(self, s: Coeff) -> "Polynomial":
        s = _frac(s)
        if s == 0:
            return Polynomial()
        return Polynomial(tuple(c * s for c in self.coeffs))

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.leading
        if len(rem) - 1 < dq:
            return Polynomial(), self
        quot = [Fraction(0)] * (len(rem) - dq)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            q = c / lead
            quot[k - dq] = q
            for j, b in enumerate(other.coeffs):
                rem[k - dq + j] -= q * b
        return Polynomial(quot), Polynomial(rem)

    def __floordiv__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other: "Polynomial") -> "Polynomial":
        return divmod(self, other)[1]

    def divides_exactly(self, other: "Polynomial") -> bool:
        """True iff self divides other with zero remainder."""
        return (other % self).is_zero

    def derivative(self) -> "Polynomial":
        return Polynomial(tuple(k * c for k, c in enumerate(self.coeffs) if k > 0))

    def monic(self) -> "Polynomial":
        if self.is_zero:
            return self
        return self.scaled(1 / self.leading)

    def content(self) -> Fraction:
        """Positive rational c with self/c a primitive integer polynomial."""
        if self.is_zero:
            return Fraction(1)
        num_gcd = reduce(math.gcd, (abs(c.numerator) for c in self.coeffs))
        den_lcm = reduce(math.lcm, (c.denominator for c in self.coeffs))
        return Fraction(num_gcd, den_lcm)

    def eval(self, x: Coeff) -> Fraction:
        """Exact Horner evaluation."""
        x = _frac(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def evalf(self, x: float) -> float:
        acc = 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + float(c)
        return acc

    def float_coeffs(self) -> tuple[float, ...]:
        return tuple(float(c) for c in self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({render_poly(self)!r})"


def poly_gcd(a: Polynomial, b: Polynomial) -> Polynomial:
    """Monic gcd by the Euclidean algorithm; divides both inputs exactly."""
    if a.is_zero and b.is_zero:
        raise ValueError("gcd of two zero polynomials")
    while not b.is_zero:
        a, b = b, a % b
    return a.monic()


_SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def render_poly(p: Polynomial, unicode_powers: bool = False) -> str:
    """Render in the grammar accepted by the expression parser."""
    if p.is_zero:
        return "0"
    parts: list[str] = []
    for k in range(p.degree, -1, -1):
        c = p[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        c = abs(c)
        if k == 0:
            body = str(c)
        else:
            if unicode_powers:
                xs = "x" if k == 1 else "x" + str(k).translate(_SUPERSCRIPTS)
            else:
                xs = "x" if k == 1 else f"x^{k}"
            body = xs if c == 1 else f"{c}*{xs}"
        if not parts:
            parts.append(body if sign == "+" else "-" + body)
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts)


class RationalFunction:
    """scale * num/den in normal form (see module docstring)."""

    __slots__ = ("num", "den", "scale")

    def __init__(self, num: Polynomial, den: Polynomial, scale: Coeff = 1):
        if den.is_zero:
            raise DivisionByZeroPoly("denominator is the zero polynomial")
        scale = _frac(scale)
        if num.is_zero or scale == 0:
            self.num = Polynomial()
            self.den = Polynomial.const(1)
            self.scale = Fraction(1)
            return
        g = poly_gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
        lc = den.leading
        if lc != 1:
            den = den.scaled(1 / lc)
            scale = scale / lc
        c = num.content()
        if num.leading < 0:
            c = -c
        if c != 1:
            num = num.scaled(1 / c)
            scale = scale * c
        self.num = num
        self.den = den
        self.scale = scale

    @property
    def is_zero(self) -> bool:
        return self.num.is_zero

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RationalFunction):
            return (self.num, self.den, self.scale) == (other.num, other.den, other.scale)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.num, self.den, self.scale))

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(self.num, self.den, -self.scale)

    def __add__(self, other: "RationalFunction") -> "RationalFunction":
        num = self.num.scaled(self.scale) * other.den + other.num.scaled(other.scale) * self.den
        return RationalFunction(num, self.den * other.den)

    def __sub__(self, other: "RationalFunction") -> "RationalFunction":
        return self + (-other)

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(self.num * other.num, self.den * other.den,
                                self.scale * other.scale)

    def __truediv__(self, other: "RationalFunction") -> "RationalFunction":
        if other.is_zero:
            raise DivisionByZeroPoly("division by the zero function")
        return RationalFunction(self.num * other.den, self.den * other.num,
                                self.scale / other.scale)

    def __pow__(self, n: int) -> "RationalFunction":
        if n < 0:
            raise ValueError("negative rational-function power")
        result = RationalFunction(Polynomial.const(1), Polynomial.const(1))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __repr__(self) -> str:
        return f"RationalFunction({render(self)!r})"


def from_const(c: Coeff) -> RationalFunction:
    return RationalFunction(Polynomial.const(1), Polynomial.const(1), c)


def normalize(f: RationalFunction) -> RationalFunction:
    """Return the normal form of f (idempotent; construction normalizes)."""
    return RationalFunction(f.num.scaled(f.scale), f.den)


def eval_at(f: RationalFunction, x: float) -> float:
    """Numeric value via Horner evaluation of both polynomials times scale."""
    dv = f.den.evalf(x)
    if abs(dv) < 1e-300:
        raise PoleEvaluation(f"denominator vanishes at x = {x!r}")
    return float(f.scale) * f.num.evalf(x) / dv


def render(f: RationalFunction) -> str:
    """Parseable text form: scale * (num)/(den)."""
    s = f.scale
    body = f"({render_poly(f.num)})/({render_poly(f.den)})"
    if s == 1:
        return body
    return f"({s})*{body}"
