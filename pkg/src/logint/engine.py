"""Closed forms for int_0^1 R(x) log^p(x) dx and their canonicalization.

Terms of the partial fraction decomposition integrate to exact linear
combinations of the constants 1, pi^k, zeta(m), zeta(m, q), Li_m at
rational arguments, and real/imaginary parts of Li_m on the unit circle.
Rewrite rules (reflection via a cot-derivative table, duplication, the
multiplication theorem) reduce everything from the exactly-reducible
angles to the basis the classical tables use: pi powers, zeta values and
psi'(1/3)-style Hurwitz symbols.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Union

from . import oracle, specfun
from .errors import UnsupportedPole, UnsupportedPower, UnsupportedQuadratic
from .factorize import partial_fractions
from .ratfun import Polynomial, RationalFunction
from .series import ALG_ONE, AlgebraicScalar, sine_profile, shifted_sine_sum

# ---------------------------------------------------------------------------
# Constant symbols


@dataclass(frozen=True)
class One:
    pass


@dataclass(frozen=True)
class PiPow:
    k: int


@dataclass(frozen=True)
class Zeta:
    m: int


@dataclass(frozen=True)
class HurwitzZeta:
    m: int
    q: Fraction


@dataclass(frozen=True)
class PolyLogRational:
    m: int
    arg: Fraction


@dataclass(frozen=True)
class UnitCircleLiRe:
    m: int
    a: Fraction


@dataclass(frozen=True)
class UnitCircleLiIm:
    m: int
    a: Fraction


ConstantSymbol = Union[One, PiPow, Zeta, HurwitzZeta, PolyLogRational,
                       UnitCircleLiRe, UnitCircleLiIm]

_KIND_RANK = {One: 0, PiPow: 1, Zeta: 2, HurwitzZeta: 3, PolyLogRational: 4,
              UnitCircleLiRe: 5, UnitCircleLiIm: 6}


def _sort_key(sym: ConstantSymbol) -> tuple:
    rank = _KIND_RANK[type(sym)]
    if isinstance(sym, One):
        return (rank, 0, Fraction(0))
    if isinstance(sym, PiPow):
        return (rank, sym.k, Fraction(0))
    if isinstance(sym, Zeta):
        return (rank, sym.m, Fraction(0))
    if isinstance(sym, HurwitzZeta):
        return (rank, sym.m, sym.q)
    if isinstance(sym, PolyLogRational):
        return (rank, sym.m, sym.arg)
    return (rank, sym.m, sym.a)


# ---------------------------------------------------------------------------
# Symbolic values: exact linear combinations coeff * symbol


class SymbolicValue:
    """Immutable sum of AlgebraicScalar coefficients times constant symbols.

    Coefficients mixing different radicals (q1 + q2*sqrt(3), from sums over
    different angle families) are kept as separate terms on the same symbol.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: dict[tuple[ConstantSymbol, int], Fraction] | None = None):
        self._terms = {k: v for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def zero(cls) -> "SymbolicValue":
        return cls()

    @classmethod
    def single(cls, coeff: AlgebraicScalar | Fraction | int,
               symbol: ConstantSymbol) -> "SymbolicValue":
        if not isinstance(coeff, AlgebraicScalar):
            coeff = AlgebraicScalar(Fraction(coeff))
        return cls({(symbol, coeff.d): coeff.q})

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def terms(self) -> tuple[tuple[AlgebraicScalar, ConstantSymbol], ...]:
        keys = sorted(self._terms, key=lambda k: (_sort_key(k[0]), k[1]))
        return tuple((AlgebraicScalar(self._terms[k], k[1]), k[0]) for k in keys)

    def __add__(self, other: "SymbolicValue") -> "SymbolicValue":
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, Fraction(0)) + v
        return SymbolicValue(out)

    def __sub__(self, other: "SymbolicValue") -> "SymbolicValue":
        return self + (-other)

    def __neg__(self) -> "SymbolicValue":
        return SymbolicValue({k: -v for k, v in self._terms.items()})

    def __mul__(self, c: AlgebraicScalar | Fraction | int) -> "SymbolicValue":
        if not isinstance(c, AlgebraicScalar):
            c = AlgebraicScalar(Fraction(c))
        if c.is_zero:
            return SymbolicValue()
        out: dict[tuple[ConstantSymbol, int], Fraction] = {}
        for (sym, d), q in self._terms.items():
            prod = AlgebraicScalar(q, d) * c
            key = (sym, prod.d)
            out[key] = out.get(key, Fraction(0)) + prod.q
        return SymbolicValue(out)

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SymbolicValue):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        return f"SymbolicValue({render(self)!r})"


# ---------------------------------------------------------------------------
# Exact cot derivatives at pi/6, pi/4, pi/3 (reflection-rule data)

_COT_VALUES = {
    Fraction(1, 6): AlgebraicScalar(Fraction(1), 3),     # cot(pi/6) = sqrt(3)
    Fraction(1, 4): AlgebraicScalar(Fraction(1), 1),     # cot(pi/4) = 1
    Fraction(1, 3): AlgebraicScalar(Fraction(1, 3), 3),  # cot(pi/3) = sqrt(3)/3
}


@lru_cache(maxsize=None)
def _cot_poly(n: int) -> Polynomial:
    """d^n/dz^n cot z as a polynomial in c = cot z: D_0 = c, D' = -(1+c^2)."""
    if n == 0:
        return Polynomial((0, 1))
    prev = _cot_poly(n - 1)
    return prev.derivative() * Polynomial((-1, 0, -1))


@lru_cache(maxsize=None)
def cot_derivative(n: int, q: Fraction) -> AlgebraicScalar:
    """Exact value of (d/dz)^n cot z at z = pi*q for q in {1/6, 1/4, 1/3}.

    The polynomial D_n has fixed parity, so the value is a single
    q0*sqrt(d) scalar.
    """
    c = _COT_VALUES[q]
    poly = _cot_poly(n)
    e = c.q * c.q * c.d  # c^2, rational
    even = Fraction(0)
    odd = Fraction(0)
    for k, coef in enumerate(poly.coeffs):
        if k % 2 == 0:
            even += coef * e ** (k // 2)
        else:
            odd += coef * e ** ((k - 1) // 2)
    if even != 0 and odd != 0:
        raise AssertionError("cot derivative polynomial lost its parity")
    if odd != 0:
        return AlgebraicScalar(odd, 1) * c
    return AlgebraicScalar(even, 1)


# ---------------------------------------------------------------------------
# Canonicalization

_REFLECT_PARTNERS = {Fraction(5, 6): Fraction(1, 6),
                     Fraction(2, 3): Fraction(1, 3),
                     Fraction(3, 4): Fraction(1, 4)}


def _zeta_value(m: int) -> SymbolicValue:
    return SymbolicValue.single(Fraction(1), Zeta(m))


def _reflection(m: int, q0: Fraction) -> SymbolicValue:
    """zeta(m, 1-q0) = (-1)^(m-1) zeta(m, q0) - pi^m D_{m-1}(cot pi q0)/(m-1)!."""
    sign = Fraction((-1) ** (m - 1))
    d = cot_derivative(m - 1, q0) * Fraction(1, math.factorial(m - 1))
    return (SymbolicValue.single(sign, HurwitzZeta(m, q0))
            + SymbolicValue.single(-d, PiPow(m)))


def _rewrite_symbol(sym: ConstantSymbol) -> SymbolicValue | None:
    """One canonicalization step for a single symbol, or None if canonical."""
    if isinstance(sym, Zeta) and sym.m % 2 == 0:
        # zeta(2n) = 2^(2n-1) |B_2n| / (2n)! * pi^(2n)
        coef = abs(specfun.bernoulli(sym.m)) * 2 ** (sym.m - 1) / math.factorial(sym.m)
        return SymbolicValue.single(coef, PiPow(sym.m))
    if isinstance(sym, HurwitzZeta):
        m, q = sym.m, sym.q
        if q == 1:
            return _zeta_value(m)
        if q == Fraction(1, 2):
            return (2**m - 1) * _zeta_value(m)
        if q in _REFLECT_PARTNERS:
            q0 = _REFLECT_PARTNERS[q]
            if q0 == Fraction(1, 4) and m % 2 == 0:
                return None  # even weight: keep the 1/4, 3/4 (Catalan-type) pair
            return _reflection(m, q0)
        if q == Fraction(1, 6):
            # duplication: zeta(m, 1/6) = 2^m zeta(m, 1/3) - zeta(m, 2/3)
            return (SymbolicValue.single(Fraction(2**m), HurwitzZeta(m, Fraction(1, 3)))
                    - SymbolicValue.single(Fraction(1), HurwitzZeta(m, Fraction(2, 3))))
        if q == Fraction(1, 3) and m % 2 == 1:
            # multiplication theorem + reflection close the odd weights
            d = cot_derivative(m - 1, q) * Fraction(1, 2 * math.factorial(m - 1))
            return (Fraction(3**m - 1, 2) * _zeta_value(m)
                    + SymbolicValue.single(d, PiPow(m)))
        if q == Fraction(1, 4) and m % 2 == 1:
            d = cot_derivative(m - 1, q) * Fraction(1, 2 * math.factorial(m - 1))
            return (Fraction(2 ** (m - 1) * (2**m - 1)) * _zeta_value(m)
                    + SymbolicValue.single(d, PiPow(m)))
        return None
    if isinstance(sym, PolyLogRational) and sym.arg == -1:
        # Li_m(-1) = -(1 - 2^(1-m)) zeta(m)
        return -(1 - Fraction(1, 2 ** (sym.m - 1))) * _zeta_value(sym.m)
    return None


def canonicalize(v: SymbolicValue) -> SymbolicValue:
    """Apply the rewrite rules to a fixpoint.

    Idempotent and numeric-value preserving; for the pi/3 angle family at
    most the single Hurwitz symbol zeta(m, 1/3) survives at each weight.
    """
    for _ in range(20):
        changed = False
        out = SymbolicValue()
        for coeff, sym in v.terms:
            repl = _rewrite_symbol(sym)
            if repl is None:
                out = out + SymbolicValue.single(coeff, sym)
            else:
                out = out + repl * coeff
                changed = True
        v = out
        if not changed:
            return v
    raise AssertionError("canonicalization did not reach a fixpoint")


# ---------------------------------------------------------------------------
# Term integrals


def monomial_term(m: int, p: int) -> SymbolicValue:
    """int_0^1 x^m log^p(x) dx = (-1)^p p! / (m+1)^(p+1)."""
    if m < 0 or p < 0:
        raise ValueError("monomial_term needs m >= 0, p >= 0")
    val = Fraction((-1) ** p * math.factorial(p), (m + 1) ** (p + 1))
    return SymbolicValue.single(val, One())


def linear_term(r: Fraction | int, p: int) -> SymbolicValue:
    """int_0^1 log^p(x)/(x+r) dx = (-1)^(p+1) p! Li_{p+1}(-1/r) for r >= 1.

    (Expand 1/(x+r) geometrically and differentiate int x^s dx p times;
    the p = 1, r = 1 case is the classical -pi^2/12.)
    """
    r = Fraction(r)
    if p == 0:
        raise UnsupportedPower("p = 0 has no closed form here; use the oracle")
    if p < 0:
        raise ValueError("log power must be >= 0")
    if r < 1:
        raise UnsupportedPole(
            f"pole at x = {-r} inside the unit disk; no polylog closed form")
    coeff = Fraction((-1) ** (p + 1) * math.factorial(p))
    return canonicalize(SymbolicValue.single(coeff, PolyLogRational(p + 1, -1 / r)))


def _sqrt_in_field(x: Fraction) -> AlgebraicScalar | None:
    """sqrt(x) as q*sqrt(d) with d in {1,2,3}, or None if not representable."""
    if x <= 0:
        return None
    for d in (1, 2, 3):
        y = x / d
        rn = math.isqrt(y.numerator)
        rd = math.isqrt(y.denominator)
        if rn * rn == y.numerator and rd * rd == y.denominator:
            return AlgebraicScalar(Fraction(rn, rd), d)
    return None


def _quadratic_numeric(a: Fraction, m: int, p: int) -> float:
    """Float value of int_0^1 x^m log^p x/(x^2-2ax+1) dx via Li_{p+1}(e^{it})."""
    s2 = 1 - a * a
    sint = math.sqrt(float(s2))
    z = complex(float(a), sint)
    li = specfun.polylog(p + 1, z)
    sign = (-1) ** p * math.factorial(p)
    if m == 0:
        return sign * li.imag / sint
    return sign * (float(a) * li.imag / sint - li.real)


def quadratic_term(a: Fraction | int, m: int, p: int) -> SymbolicValue:
    """int_0^1 x^m log^p(x) / (x^2 - 2ax + 1) dx, |a| < 1, m in {0, 1}, p >= 1.

    Equals (-1)^p p! sum_{k>=0} U_k(a)/(k+m+1)^(p+1).  For a in {0, +-1/2}
    the sum reduces exactly through Hurwitz zetas; otherwise the value is
    expressed through Li_{p+1} at e^{i arccos a}, with the 1/sin(t)
    prefactor kept exact when sqrt(1-a^2) lies in the q*sqrt(d) field.
    """
    a = Fraction(a)
    if not abs(a) < 1:
        raise ValueError(f"need |a| < 1, got {a}")
    if m not in (0, 1):
        raise ValueError("numerator degree over a quadratic factor is 0 or 1")
    if p == 0:
        raise UnsupportedPower("p = 0 has no closed form here; use the oracle")
    if p < 0:
        raise ValueError("log power must be >= 0")

    w = p + 1
    sign = Fraction((-1) ** p * math.factorial(p))

    angle = {Fraction(0): Fraction(1, 2), Fraction(1, 2): Fraction(1, 3),
             Fraction(-1, 2): Fraction(2, 3)}.get(a)
    if angle is not None:
        inv_sin = ALG_ONE if a == 0 else AlgebraicScalar(Fraction(2, 3), 3)
        res = shifted_sine_sum(sine_profile(angle), w, m)
        acc = SymbolicValue.single(sign * inv_sin * res.head_offset, One())
        for c, q in res.combo.terms:
            acc = acc + SymbolicValue.single(sign * inv_sin * c, HurwitzZeta(w, q))
        return canonicalize(acc)

    root = _sqrt_in_field(1 - a * a)
    if root is None:
        raise UnsupportedQuadratic(
            f"sin(arccos({a})) = sqrt({1 - a * a}) is outside the q*sqrt(d) "
            "coefficient field", numeric=_quadratic_numeric(a, m, p))
    inv_sin = AlgebraicScalar(1 / (root.q * root.d), root.d)
    if m == 0:
        acc = SymbolicValue.single(sign * inv_sin, UnitCircleLiIm(w, a))
    else:
        acc = (SymbolicValue.single(sign * a * inv_sin, UnitCircleLiIm(w, a))
               + SymbolicValue.single(-sign, UnitCircleLiRe(w, a)))
    return canonicalize(acc)


def integrate_closed_form(f: RationalFunction, p: int) -> SymbolicValue:
    """Exact closed form of int_0^1 f(x) log^p(x) dx, p >= 1.

    Splits by partial fractions and integrates term-wise; propagates the
    factorization errors plus UnsupportedPole/UnsupportedPower/
    UnsupportedQuadratic for integrable inputs outside closed-form scope.
    """
    if p < 1:
        raise UnsupportedPower("closed forms need p >= 1; p = 0 is oracle-only")
    if f.is_zero:
        return SymbolicValue.zero()
    pf = partial_fractions(f)
    acc = SymbolicValue.zero()
    for k, c in enumerate(pf.polynomial_part.coeffs):
        if c:
            acc = acc + c * monomial_term(k, p)
    for a_coef, lf in pf.linear_terms:
        if a_coef:
            acc = acc + a_coef * linear_term(lf.r, p)
    for b, c, qf in pf.quadratic_terms:
        if b:
            acc = acc + b * quadratic_term(qf.a, 1, p)
        if c:
            acc = acc + c * quadratic_term(qf.a, 0, p)
    return canonicalize(acc)


# ---------------------------------------------------------------------------
# Numeric evaluation


@lru_cache(maxsize=None)
def _symbol_value(sym: ConstantSymbol) -> float:
    if isinstance(sym, One):
        return 1.0
    if isinstance(sym, PiPow):
        return math.pi**sym.k
    if isinstance(sym, Zeta):
        return specfun.zeta(sym.m)
    if isinstance(sym, HurwitzZeta):
        return specfun.hurwitz_zeta(sym.m, sym.q)
    if isinstance(sym, PolyLogRational):
        return specfun.polylog(sym.m, complex(float(sym.arg))).real
    a = float(sym.a)
    z = complex(a, math.sqrt(1.0 - a * a))
    li = specfun.polylog(sym.m, z)
    return li.real if isinstance(sym, UnitCircleLiRe) else li.imag


def numeric_value(v: SymbolicValue) -> float:
    """Compensated sum of coeff * constant over all terms."""
    return math.fsum(float(c) * _symbol_value(sym) for c, sym in v.terms)


# ---------------------------------------------------------------------------
# Rendering

_STYLES = ("unicode", "ascii", "latex")


def _frac_str(q: Fraction) -> str:
    return str(q)


def _coeff_parts(q: Fraction, d: int) -> tuple[int, int, int]:
    return q.numerator, q.denominator, d


def _psi_name(order: int, style: str) -> str:
    if style == "unicode":
        primes = {1: "ψ′", 2: "ψ″", 3: "ψ‴"}
        return primes.get(order, f"ψ^({order})")
    if style == "latex":
        return "\\psi" + ("'" * order if order <= 3 else f"^{{({order})}}")
    return "psi" + ("'" * order if order <= 3 else f"^({order})")


def _symbol_text(sym: ConstantSymbol, style: str) -> str:
    if isinstance(sym, PiPow):
        pi = {"unicode": "π", "ascii": "pi", "latex": "\\pi"}[style]
        return pi if sym.k == 1 else f"{pi}^{sym.k}"
    if isinstance(sym, Zeta):
        z = {"unicode": "ζ", "ascii": "zeta", "latex": "\\zeta"}[style]
        return f"{z}({sym.m})"
    if isinstance(sym, PolyLogRational):
        name = "\\mathrm{Li}" if style == "latex" else "Li"
        return f"{name}_{sym.m}({sym.arg})"
    if isinstance(sym, (UnitCircleLiRe, UnitCircleLiIm)):
        part = "Re" if isinstance(sym, UnitCircleLiRe) else "Im"
        name = f"\\mathrm{{{part}Li}}" if style == "latex" else f"{part}Li"
        return f"{name}({sym.m}, {sym.a})"
    raise AssertionError(f"unexpected symbol {sym!r}")


def _sqrt_text(d: int, style: str) -> str:
    if style == "unicode":
        return f"√{d}"
    if style == "latex":
        return f"\\sqrt{{{d}}}"
    return f"sqrt({d})"


def _render_term(coeff: AlgebraicScalar, sym: ConstantSymbol, style: str) -> tuple[bool, str]:
    """(negative?, body) for one term."""
    q, d = coeff.q, coeff.d
    neg = q < 0
    q = abs(q)
    num, den = q.numerator, q.denominator

    if isinstance(sym, One):
        parts = [] if num == 1 and d != 1 else [str(num)]
        if d != 1:
            parts.append(_sqrt_text(d, style))
        body = "*".join(parts) if style != "latex" else " ".join(parts)
        if den != 1:
            body += f"/{den}"
        return neg, body

    if isinstance(sym, HurwitzZeta):
        # display zeta(m, q) in polygamma form: zeta(m,q) = (-1)^m psi^(m-1)(q)/(m-1)!
        order = sym.m - 1
        adj = q * Fraction((-1) ** sym.m, math.factorial(order)) * (-1 if neg else 1)
        neg = adj < 0
        adj = abs(adj)
        name = f"{_psi_name(order, style)}({sym.q})"
        parts = []
        if adj != 1:
            parts.append(f"({adj})")
        if d != 1:
            parts.append(_sqrt_text(d, style))
        parts.append(name)
        return neg, "*".join(parts) if style != "latex" else " ".join(parts)

    parts = []
    if num != 1:
        parts.append(str(num))
    if d != 1:
        parts.append(_sqrt_text(d, style))
    parts.append(_symbol_text(sym, style))
    body = "*".join(parts) if style != "latex" else " ".join(parts)
    if den != 1:
        body += f"/{den}"
    return neg, body


def render(v: SymbolicValue, style: str = "ascii") -> str:
    """Deterministic text form with stable term ordering.

    Ordering is by symbol kind, then weight, then argument; the ascii style
    round-trips through the reader used in the tests.
    """
    if style not in _STYLES:
        raise ValueError(f"style must be one of {_STYLES}")
    if v.is_zero:
        return "0"
    out = []
    for coeff, sym in v.terms:
        neg, body = _render_term(coeff, sym, style)
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


# ---------------------------------------------------------------------------
# Engine + oracle evaluation report


@dataclass(frozen=True)
class EvaluationReport:
    """Closed form next to the independent quadrature of the same integral."""

    input: RationalFunction
    power: int
    closed_form: SymbolicValue
    numeric: float
    oracle: float
    abs_disagreement: float


def evaluate(f: RationalFunction, p: int, rel_tol: float = 1e-11) -> EvaluationReport:
    """Run both routes and report the disagreement; raises if either fails."""
    closed = integrate_closed_form(f, p)
    num = numeric_value(closed)
    orc = oracle.integrate_log_power(f, p, rel_tol)
    return EvaluationReport(f, p, closed, num, orc.value, abs(num - orc.value))
