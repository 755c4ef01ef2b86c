"""Parsing and formatting of exact rationals.

Rationals are plain :class:`fractions.Fraction` objects.  The text form is
``"num/den"`` in lowest terms, or ``"n"`` for integers; floats are refused so
that nothing inexact ever leaks in.
"""

import re
from decimal import Decimal, localcontext
from fractions import Fraction
from numbers import Rational

from .errors import MalformedInput

_RATIONAL_RE = re.compile(r"\s*([+-]?\d+)\s*(?:/\s*(\d+)\s*)?")


def parse_rational(value) -> Fraction:
    """Convert ``value`` to a Fraction.

    Accepts ints, exact rationals, and strings of the form ``"p/q"`` or ``"n"``.
    """
    if isinstance(value, bool):
        raise MalformedInput(f"not a rational: {value!r}")
    if isinstance(value, Rational):
        return Fraction(value)
    if isinstance(value, str):
        m = _RATIONAL_RE.fullmatch(value)
        if m is None:
            raise MalformedInput(f"not a rational: {value!r}")
        num, den = m.group(1), m.group(2)
        if den is None:
            return Fraction(int(num))
        if int(den) == 0:
            raise MalformedInput(f"zero denominator: {value!r}")
        return Fraction(int(num), int(den))
    raise MalformedInput(f"not a rational: {value!r}")


def parse_integer(value) -> int:
    if isinstance(value, bool):
        raise MalformedInput(f"not an integer: {value!r}")
    if isinstance(value, int):
        return value
    if isinstance(value, str) and re.fullmatch(r"\s*[+-]?\d+\s*", value):
        return int(value)
    raise MalformedInput(f"not an integer: {value!r}")


def format_rational(q) -> str:
    return str(Fraction(q))


def approx(q, digits: int = 12) -> str:
    """Decimal rendering for display only; never compare on it."""
    q = Fraction(q)
    with localcontext() as ctx:
        ctx.prec = digits
        d = Decimal(q.numerator) / Decimal(q.denominator)
        return format(d, f".{digits}g")


def power_of_two_bound(q) -> int:
    """Smallest integer k with 0 < q < 2**k."""
    q = Fraction(q)
    if q <= 0:
        raise ValueError("bound is defined for positive rationals only")
    k = q.numerator.bit_length() - q.denominator.bit_length()
    while q >= Fraction(2) ** k:
        k += 1
    while q < Fraction(2) ** (k - 1):
        k -= 1
    return k
