"""Exact rational numbers: the sole number type used in solver code.

``Rational`` is ``fractions.Fraction``: arbitrary precision, always in lowest
terms with a positive denominator, and totally ordered consistently with the
reals.  Division by zero surfaces as ``InputError`` when it comes from user
input parsing; arithmetic on values raises ``ZeroDivisionError`` as usual.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import InputError

Rational = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def rational(value) -> Fraction:
    """Coerce ints, strings ("3", "-4/7", "0.99") and Fractions to Rational.

    Decimal strings convert exactly: "0.99" becomes 99/100, never a float.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise InputError(f"cannot interpret {value!r} as a rational number")


def parse_rational(text: str) -> Fraction:
    """Parse an integer, a/b fraction, or decimal literal exactly."""
    token = text.strip()
    if not token:
        raise InputError("empty rational literal")
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"not a rational number: {token!r}") from exc


def format_rational(value: Fraction) -> str:
    """Render as "n" for integers, otherwise "n/d"."""
    return str(value)


def is_rational_token(text: str) -> bool:
    try:
        Fraction(text)
    except (ValueError, ZeroDivisionError):
        return False
    return True
