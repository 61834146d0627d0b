"""Rational scalars, the base field of every algebra in the package.

``gmpy2.mpq`` normalizes to lowest terms with a positive denominator on
construction, so structural equality is equality of rationals. It is used
directly as the scalar type; it is several times faster than
:class:`fractions.Fraction`, which matters once quaternion entries grow
during elimination. The functions below are the small named surface the
rest of the package calls into, plus the textual ``"p/q"`` encoding.
"""

from fractions import Fraction
import re

from gmpy2 import mpq

from .errors import DivisionByZero, ParseError

ExactRational = type(mpq(0))

ZERO = mpq(0)
ONE = mpq(1)

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?$")


def is_rational_like(value) -> bool:
    return isinstance(value, (int, Fraction, ExactRational, type(mpq(0).numerator))) \
        and not isinstance(value, bool)


def rat(value) -> ExactRational:
    """Coerce ints, Fractions and ``"p/q"`` strings to a rational.

    Floats are refused; they have no business in exact arithmetic.
    """
    if isinstance(value, ExactRational):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if is_rational_like(value):
        return mpq(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot convert {type(value).__name__} to an exact rational")


def rat_add(a: ExactRational, b: ExactRational) -> ExactRational:
    return a + b


def rat_mul(a: ExactRational, b: ExactRational) -> ExactRational:
    return a * b


def rat_neg(a: ExactRational) -> ExactRational:
    return -a


def rat_inv(a: ExactRational) -> ExactRational:
    if a == 0:
        raise DivisionByZero("inverse of zero rational")
    return 1 / a


def parse_rational(text: str) -> ExactRational:
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ParseError(f"not a rational: {text!r}")
    num, den = m.group(1), m.group(2)
    if den is not None and int(den) == 0:
        raise ParseError(f"zero denominator in {text!r}")
    return mpq(int(num), int(den) if den is not None else 1)


def format_rational(q: ExactRational) -> str:
    q = rat(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"
