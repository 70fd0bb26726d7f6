"""Closed forms for S(N; r) = 1**r + 2**r + ... + N**r.

Two independent routes produce the same polynomials:

* the recursion: scale S(N; r-1) by r, integrate from 0 to N, then add the
  linear term C*N with C chosen so that S(1; r) = 1;
* Faulhaber's formula, which needs the Bernoulli numbers (B_1 = -1/2).

The recursion never touches Bernoulli numbers; the identity
C_r = (-1)**r * B_r ties the two together and is exposed as
:func:`linear_constant_identity`.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Optional, Sequence, Tuple

from .poly import Polynomial, poly_add, poly_antiderivative, poly_eval, poly_scale
from .rational import binomial

__all__ = [
    "BernoulliSequence",
    "LinearConstant",
    "PowerSumTable",
    "IdentityCheck",
    "bernoulli",
    "bernoulli_numbers",
    "fix_linear_constant",
    "power_sum_recursive",
    "power_sum_direct",
    "linear_constant_identity",
    "build_table",
]

_ONE = Fraction(1)
_LINEAR = Polynomial([0, 1])


@dataclass(frozen=True)
class BernoulliSequence:
    """B_0 .. B_n in the B_1 = -1/2 convention.

    Construction checks the convention and that the odd-index values past
    B_1 vanish, so a sequence that got here is known-good in that respect.
    """

    values: Tuple[Fraction, ...]

    def __post_init__(self):
        vals = self.values
        if vals and vals[0] != 1:
            raise ValueError(f"B_0 must be 1, got {vals[0]}")
        if len(vals) > 1 and vals[1] != Fraction(-1, 2):
            raise ValueError(f"B_1 must be -1/2, got {vals[1]}")
        for j in range(3, len(vals), 2):
            if vals[j] != 0:
                raise ValueError(f"B_{j} must vanish, got {vals[j]}")

    @classmethod
    def build(cls, j_max: int) -> "BernoulliSequence":
        return cls(()).extend(j_max)

    def extend(self, j_max: int) -> "BernoulliSequence":
        """Return a sequence reaching at least B_{j_max}, reusing this prefix.

        Uses sum_{j=0}^{m} C(m+1, j) B_j = 0 for m >= 1, solved for B_m.
        """
        if j_max < 0:
            raise ValueError("j_max must be non-negative")
        vals = list(self.values) or [_ONE]
        for m in range(len(vals), j_max + 1):
            acc = sum(binomial(m + 1, j) * vals[j] for j in range(m))
            vals.append(-acc / (m + 1))
        return type(self)(tuple(vals))

    @property
    def j_max(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, j: int) -> Fraction:
        return self.values[j]

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class LinearConstant:
    r: int
    value: Fraction


@dataclass(frozen=True)
class PowerSumTable:
    """S(N; 0) .. S(N; built_up_to) plus the linear constants the recursion chose.

    ``constants[r - 1]`` holds C_r; r = 0 is the base case and has none.
    """

    entries: Tuple[Polynomial, ...]
    constants: Tuple[LinearConstant, ...] = ()

    @property
    def built_up_to(self) -> int:
        return len(self.entries) - 1

    def constant(self, r: int) -> Fraction:
        if r < 1:
            raise ValueError("the recursion adds no linear constant at r = 0")
        return self.constants[r - 1].value

    def extend(self, r_max: int) -> "PowerSumTable":
        if r_max < 0:
            raise ValueError("r_max must be non-negative")
        entries = list(self.entries) or [_LINEAR]
        constants = list(self.constants)
        for r in range(len(entries), r_max + 1):
            poly, c = _recursion_step(entries[r - 1], r)
            entries.append(poly)
            constants.append(LinearConstant(r, c))
        return type(self)(tuple(entries), tuple(constants))

    def __getitem__(self, r: int) -> Polynomial:
        return self.entries[r]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)


def fix_linear_constant(q: Polynomial) -> Fraction:
    """Constant C such that q + C*N equals 1 at N = 1."""
    return _ONE - poly_eval(q, 1)


def _integrated_part(lower: Polynomial, r: int) -> Polynomial:
    return poly_antiderivative(poly_scale(r, lower))


def _recursion_step(lower: Polynomial, r: int) -> Tuple[Polynomial, Fraction]:
    q = _integrated_part(lower, r)
    c = fix_linear_constant(q)
    return poly_add(q, poly_scale(c, _LINEAR)), c


# Process-wide memo tables. Growth is serialized; readers get immutable snapshots.
_lock = threading.Lock()
_table = PowerSumTable((_LINEAR,))
_bernoulli = BernoulliSequence.build(1)


def build_table(r_max: int) -> PowerSumTable:
    """Table of S(N; r) for r = 0..r_max, each level computed once."""
    global _table
    if r_max < 0:
        raise ValueError("r_max must be non-negative")
    with _lock:
        if _table.built_up_to < r_max:
            _table = _table.extend(r_max)
        table = _table
    if table.built_up_to == r_max:
        return table
    return PowerSumTable(table.entries[: r_max + 1], table.constants[:r_max])


def power_sum_recursive(r: int) -> Polynomial:
    if r < 0:
        raise ValueError("r must be non-negative")
    return build_table(r)[r]


def bernoulli_numbers(j_max: int) -> BernoulliSequence:
    global _bernoulli
    if j_max < 0:
        raise ValueError("j_max must be non-negative")
    with _lock:
        if _bernoulli.j_max < j_max:
            _bernoulli = _bernoulli.extend(j_max)
        return _bernoulli


def bernoulli(j: int) -> Fraction:
    return bernoulli_numbers(j)[j]


def power_sum_direct(
    r: int, bernoulli_values: Optional[Sequence[Fraction]] = None
) -> Polynomial:
    """S(N; r) from Faulhaber's formula.

    ``bernoulli_values`` overrides the computed B_j (used for fault injection);
    it must cover indices 0..r.
    """
    if r < 0:
        raise ValueError("r must be non-negative")
    b = bernoulli_numbers(r) if bernoulli_values is None else bernoulli_values
    terms = [
        ((r + 1 - j), (-1) ** j * binomial(r + 1, j) * b[j] / (r + 1))
        for j in range(r + 1)
    ]
    return Polynomial.from_terms(terms)


class IdentityCheck(NamedTuple):
    lhs: Fraction
    rhs: Fraction
    equal: bool


def linear_constant_identity(
    r: int,
    table: Optional[Sequence[Polynomial]] = None,
    bernoulli_values: Optional[Sequence[Fraction]] = None,
) -> IdentityCheck:
    """Compare the recursion's constant C_r with (-1)**r * B_r.

    ``lhs`` re-runs the recursion step from ``table[r - 1]`` (the shared table
    when omitted); ``rhs`` uses ``bernoulli_values`` when given.
    """
    if r < 1:
        raise ValueError("r must be at least 1")
    lower = power_sum_recursive(r - 1) if table is None else table[r - 1]
    lhs = fix_linear_constant(_integrated_part(lower, r))
    b_r = bernoulli(r) if bernoulli_values is None else bernoulli_values[r]
    rhs = (-1) ** r * b_r
    return IdentityCheck(lhs, rhs, lhs == rhs)
