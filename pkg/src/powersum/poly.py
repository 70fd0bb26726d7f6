"""Dense univariate polynomials over the rationals in the formal variable N."""

from __future__ import annotations

from fractions import Fraction
from itertools import zip_longest
from typing import Iterable, Iterator, Tuple

from .rational import as_rational, format_rational

__all__ = [
    "Polynomial",
    "poly_add",
    "poly_scale",
    "poly_derivative",
    "poly_antiderivative",
    "poly_eval",
    "poly_equal",
    "format_text",
    "format_latex",
]

VARIABLE = "N"


class Polynomial:
    """Immutable polynomial ``sum(coeffs[i] * N**i)``.

    Coefficients are stored in ascending order with trailing zeros stripped,
    so the zero polynomial is the empty tuple and has degree -1.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        values = [as_rational(c) for c in coeffs]
        while values and values[-1] == 0:
            values.pop()
        object.__setattr__(self, "_coeffs", tuple(values))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def monomial(cls, coefficient, power: int) -> "Polynomial":
        if power < 0:
            raise ValueError("power must be non-negative")
        return cls([0] * power + [coefficient])

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple[int, Fraction]]) -> "Polynomial":
        """Build from ``(power, coefficient)`` pairs; repeated powers accumulate."""
        terms = [(int(k), as_rational(c)) for k, c in terms]
        if not terms:
            return cls()
        if any(k < 0 for k, _ in terms):
            raise ValueError("powers must be non-negative")
        coeffs = [Fraction(0)] * (max(k for k, _ in terms) + 1)
        for k, c in terms:
            coeffs[k] += c
        return cls(coeffs)

    @property
    def coeffs(self) -> Tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def coefficient(self, power: int) -> Fraction:
        if 0 <= power < len(self._coeffs):
            return self._coeffs[power]
        return Fraction(0)

    def terms(self) -> Iterator[Tuple[int, Fraction]]:
        """Nonzero ``(power, coefficient)`` pairs, highest power first."""
        for k in range(self.degree, -1, -1):
            c = self._coeffs[k]
            if c:
                yield k, c

    def is_zero(self) -> bool:
        return not self._coeffs

    def __call__(self, x) -> Fraction:
        return poly_eval(self, x)

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return poly_add(self, other)

    def __neg__(self):
        return poly_scale(-1, self)

    def __sub__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return poly_add(self, -other)

    def __mul__(self, other):
        try:
            c = as_rational(other)
        except TypeError:
            return NotImplemented
        return poly_scale(c, self)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return f"Polynomial({format_text(self)!r})"

    def __str__(self):
        return format_text(self)


def poly_add(p: Polynomial, q: Polynomial) -> Polynomial:
    return Polynomial(
        a + b for a, b in zip_longest(p.coeffs, q.coeffs, fillvalue=Fraction(0))
    )


def poly_scale(c, p: Polynomial) -> Polynomial:
    c = as_rational(c)
    if c == 0:
        return Polynomial()
    return Polynomial(c * a for a in p.coeffs)


def poly_derivative(p: Polynomial) -> Polynomial:
    return Polynomial(i * a for i, a in enumerate(p.coeffs) if i)


def poly_antiderivative(p: Polynomial) -> Polynomial:
    """Integral of ``p`` from 0 to N; the constant term is always zero."""
    if p.is_zero():
        return Polynomial()
    return Polynomial([Fraction(0)] + [a / (i + 1) for i, a in enumerate(p.coeffs)])


def poly_eval(p: Polynomial, x) -> Fraction:
    """Exact value of ``p`` at ``x`` by Horner's scheme."""
    x = as_rational(x)
    acc = Fraction(0)
    for a in reversed(p.coeffs):
        acc = acc * x + a
    return acc


def poly_equal(p: Polynomial, q: Polynomial) -> bool:
    return p.coeffs == q.coeffs


def format_text(p: Polynomial) -> str:
    """Render as ``"1/5*N^5 + 1/2*N^4 + 1/3*N^3 - 1/30*N"``."""
    parts = []
    for k, c in p.terms():
        mag = abs(c)
        if k == 0:
            body = format_rational(mag)
        else:
            power = VARIABLE if k == 1 else f"{VARIABLE}^{k}"
            body = power if mag == 1 else f"{format_rational(mag)}*{power}"
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(parts) if parts else "0"


def _latex_magnitude(c: Fraction) -> str:
    if c.denominator == 1:
        return str(c.numerator)
    return rf"\frac{{{c.numerator}}}{{{c.denominator}}}"


def format_latex(p: Polynomial) -> str:
    r"""Render as ``\frac{1}{3}N^{3} + \frac{1}{2}N^{2} + \frac{1}{6}N``."""
    parts = []
    for k, c in p.terms():
        mag = abs(c)
        if k == 0:
            body = _latex_magnitude(mag)
        else:
            power = VARIABLE if k == 1 else f"{VARIABLE}^{{{k}}}"
            body = power if mag == 1 else _latex_magnitude(mag) + power
        if not parts:
            parts.append(f"-{body}" if c < 0 else body)
        else:
            parts.append(f" - {body}" if c < 0 else f" + {body}")
    return "".join(parts) if parts else "0"
