"""Exception hierarchy shared across the package."""


class LogIntError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(LogIntError):
    """Malformed integrand expression.

    Carries the 0-based character offset of the failure and the set of
    token descriptions that would have been accepted there.
    """

    def __init__(self, pos: int, expected: tuple[str, ...], found: str):
        self.pos = pos
        self.expected = expected
        self.found = found
        want = " or ".join(expected)
        super().__init__(f"syntax error at offset {pos}: expected {want}, found {found}")


class DivisionByZeroPoly(LogIntError):
    """A denominator expression simplified to the zero polynomial."""


class PoleEvaluation(LogIntError):
    """Numeric evaluation requested at (or indistinguishably near) a pole."""


class UnsupportedMultiplicity(LogIntError):
    """Denominator has a repeated factor; only simple poles are decomposed."""


class UnsupportedFactor(LogIntError):
    """Denominator has a factor outside the linear / x^2-2ax+1 family."""


class PoleInUnitInterval(LogIntError):
    """A denominator root lies in [0,1]; the integral diverges."""


class UnsupportedPole(LogIntError):
    """Linear factor x+r with r < 1: pole inside the unit disk, no closed form here."""


class UnsupportedPower(LogIntError):
    """log power outside the closed-form machinery (p = 0 goes to the oracle)."""


class UnsupportedQuadratic(LogIntError):
    """sin(arccos a) leaves the supported q*sqrt(d) coefficient field.

    ``numeric`` still carries the value of the integral term, computed by
    direct series summation, so callers can report it.
    """

    def __init__(self, message: str, numeric: float):
        super().__init__(message)
        self.numeric = numeric


class UnsupportedAngle(LogIntError):
    """Angle is not one of the three with exact rational-cosine reductions."""


class DomainError(LogIntError):
    """Argument outside a special function's supported domain."""


class PoleError(LogIntError):
    """Special function evaluated at its pole (Li_1 at z = 1)."""


class PoleDetected(LogIntError):
    """Quadrature node hit a pole of the integrand (|den| < 1e-12)."""


class NoConvergence(LogIntError):
    """Quadrature reached its maximum refinement level above tolerance."""
