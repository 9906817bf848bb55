"""Recursive-descent parser for integrand expressions.

Grammar (whitespace insignificant):

    expr    := term (('+'|'-') term)*
    term    := factor (('*'|'/') factor)*
    factor  := base ('^' INTEGER)?
    base    := 'x' | NUMBER | '(' expr ')' | '-' factor
    NUMBER  := INTEGER | INTEGER '.' DIGITS

'^' binds tighter than unary minus and than '*'/'/'; exponents are
non-negative integers.  Implicit multiplication ("2x") is rejected.
Decimal literals are exact: 0.5 parses as the rational 1/2.
All arithmetic is exact; the result is a normalized RationalFunction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import ParseError
from .ratfun import Polynomial, RationalFunction, from_const

_X = RationalFunction(Polynomial((0, 1)), Polynomial.const(1))


@dataclass(frozen=True)
class _Token:
    kind: str  # 'x', 'num', 'int', '+', '-', '*', '/', '^', '(', ')', 'end'
    pos: int
    value: Fraction | None = None


def _tokenize(text: str) -> list[_Token]:
    toks: list[_Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+-*/^()":
            toks.append(_Token(ch, i))
            i += 1
            continue
        if ch == "x":
            toks.append(_Token("x", i))
            i += 1
            continue
        if ch.isdigit():
            start = i
            while i < n and text[i].isdigit():
                i += 1
            if i < n and text[i] == "." and i + 1 < n and text[i + 1].isdigit():
                i += 1
                while i < n and text[i].isdigit():
                    i += 1
                whole, frac = text[start:i].split(".")
                val = Fraction(int(whole)) + Fraction(int(frac), 10 ** len(frac))
                toks.append(_Token("num", start, val))
            else:
                toks.append(_Token("int", start, Fraction(int(text[start:i]))))
            continue
        raise ParseError(i, ("'x'", "a number", "an operator", "'('"), repr(ch))
    toks.append(_Token("end", n))
    return toks


class _Parser:
    def __init__(self, toks: list[_Token]):
        self.toks = toks
        self.i = 0

    def peek(self) -> _Token:
        return self.toks[self.i]

    def advance(self) -> _Token:
        t = self.toks[self.i]
        self.i += 1
        return t

    def fail(self, expected: tuple[str, ...]) -> ParseError:
        t = self.peek()
        found = "end of input" if t.kind == "end" else f"'{t.kind}'" if t.value is None else str(t.value)
        return ParseError(t.pos, expected, found)

    def expr(self) -> RationalFunction:
        acc = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.advance().kind
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> RationalFunction:
        acc = self.factor()
        while self.peek().kind in ("*", "/"):
            op = self.advance().kind
            rhs = self.factor()
            acc = acc * rhs if op == "*" else acc / rhs
        return acc

    def factor(self) -> RationalFunction:
        b = self.base()
        if self.peek().kind == "^":
            self.advance()
            t = self.peek()
            if t.kind != "int":
                raise self.fail(("a non-negative integer exponent",))
            self.advance()
            assert t.value is not None
            b = b ** int(t.value)
        return b

    def base(self) -> RationalFunction:
        t = self.peek()
        if t.kind == "x":
            self.advance()
            return _X
        if t.kind in ("int", "num"):
            self.advance()
            assert t.value is not None
            return from_const(t.value)
        if t.kind == "(":
            self.advance()
            inner = self.expr()
            if self.peek().kind != ")":
                raise self.fail(("')'",))
            self.advance()
            return inner
        if t.kind == "-":
            self.advance()
            return -self.factor()
        raise self.fail(("'x'", "a number", "'('", "'-'"))


def parse_expression(text: str) -> RationalFunction:
    """Parse an integrand expression into a normalized RationalFunction.

    Raises ParseError (with position and expected-token set) on malformed
    input and DivisionByZeroPoly if a denominator simplifies to zero.
    """
    p = _Parser(_tokenize(text))
    result = p.expr()
    if p.peek().kind != "end":
        raise p.fail(("an operator", "end of input"))
    return result
