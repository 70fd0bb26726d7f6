"""Exact integer and rational arithmetic.

Rationals are :class:`fractions.Fraction` instances. ``Fraction`` already keeps
itself in lowest terms with a positive denominator, so every value handed out
by this module is canonical on construction. The wrappers below exist to pin
the operations the rest of the package relies on and to own the textual
grammar (``"p/q"``, ``"p"`` when ``q == 1``, sign on the numerator).
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC

__all__ = [
    "Fraction",
    "as_rational",
    "rat_add",
    "rat_mul",
    "rat_div",
    "rat_is_integer",
    "rat_to_integer",
    "binomial",
    "format_rational",
    "parse_rational",
]


def as_rational(value) -> Fraction:
    """Coerce an int or rational into a canonical Fraction.

    Floats are rejected: they would silently smuggle binary rounding into
    exact computations.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, _RationalABC)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def rat_add(a: Fraction, b: Fraction) -> Fraction:
    return as_rational(a) + as_rational(b)


def rat_mul(a: Fraction, b: Fraction) -> Fraction:
    return as_rational(a) * as_rational(b)


def rat_div(a: Fraction, b: Fraction) -> Fraction:
    """Exact quotient ``a / b``; raises ZeroDivisionError when ``b == 0``."""
    b = as_rational(b)
    if b == 0:
        raise ZeroDivisionError(f"division of {format_rational(a)} by zero")
    return as_rational(a) / b


def rat_is_integer(a: Fraction) -> bool:
    return as_rational(a).denominator == 1


def rat_to_integer(a: Fraction) -> int:
    """Return the integer value of ``a``, or raise ValueError if it has none."""
    a = as_rational(a)
    if a.denominator != 1:
        raise ValueError(f"{format_rational(a)} is not an integer")
    return a.numerator


def binomial(n: int, k: int) -> int:
    """Binomial coefficient C(n, k) for ``0 <= k <= n``.

    Built as a running product: after step i the accumulator holds
    C(n - k + i, i), so each floor division is exact.
    """
    if n < 0 or k < 0 or k > n:
        raise ValueError(f"binomial({n}, {k}) requires 0 <= k <= n")
    k = min(k, n - k)
    result = 1
    for i in range(1, k + 1):
        result = result * (n - k + i) // i
    return result


def format_rational(a: Fraction) -> str:
    a = as_rational(a)
    if a.denominator == 1:
        return str(a.numerator)
    return f"{a.numerator}/{a.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse the ``"p/q"`` / ``"p"`` grammar produced by :func:`format_rational`.

    Only canonical spellings are accepted, so parse and format are inverses.
    """
    num, sep, den = text.partition("/")
    try:
        p = int(num, 10)
        q = int(den, 10) if sep else 1
    except ValueError:
        raise ValueError(f"malformed rational {text!r}") from None
    if q == 0:
        raise ValueError(f"zero denominator in {text!r}")
    value = Fraction(p, q)
    if format_rational(value) != text:
        raise ValueError(f"non-canonical rational {text!r}")
    return value
