"""Definition-level verifiers for power-sum tables.

Nothing here imports the engine at module level: :func:`brute_force_sum`
accumulates the defining sum directly, and the grid checks take the table
under test as an argument. Only when no table is supplied is the engine
asked for one.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Union

from .poly import Polynomial, poly_eval
from .rational import format_rational, rat_is_integer

__all__ = [
    "DEFAULT_R_MAX",
    "DEFAULT_N_MAX",
    "Witness",
    "VerificationReport",
    "brute_force_sum",
    "check_closed_form",
    "finite_difference_check",
    "integrality_check",
]

DEFAULT_R_MAX = 12
DEFAULT_N_MAX = 500


def brute_force_sum(N: int, r: int) -> int:
    """1**r + 2**r + ... + N**r by direct accumulation."""
    if N < 1:
        raise ValueError(f"N must be >= 1, got {N}")
    if r < 0:
        raise ValueError(f"r must be >= 0, got {r}")
    total = 0
    for n in range(1, N + 1):
        total += n**r
    return total


@dataclass(frozen=True)
class Witness:
    """One failed check.

    ``N`` is None for checks made on whole polynomials rather than at a
    point; ``expected``/``actual`` then carry rendered values.
    """

    r: int
    N: Optional[int]
    expected: Union[int, Fraction, str]
    actual: Union[Fraction, str]

    def to_json(self) -> dict:
        def render(v):
            return v if isinstance(v, str) else format_rational(v)

        return {
            "r": self.r,
            "N": "N" if self.N is None else str(self.N),
            "expected": render(self.expected),
            "actual": render(self.actual),
        }


@dataclass
class VerificationReport:
    name: str
    checks_run: int = 0
    failures: List[Witness] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, witness_factory) -> None:
        self.checks_run += 1
        if not ok:
            self.failures.append(witness_factory())

    def finalize(self) -> "VerificationReport":
        self.failures.sort(key=lambda w: (w.r, -1 if w.N is None else w.N))
        return self

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "checks_run": self.checks_run,
            "failures": [w.to_json() for w in self.failures],
        }


def _resolve_table(table, r_max: int) -> Sequence[Polynomial]:
    if r_max < 0:
        raise ValueError("r_max must be non-negative")
    if table is None:
        from .engine import build_table

        return build_table(r_max)
    if len(table) <= r_max:
        raise ValueError(f"table covers r <= {len(table) - 1}, need r <= {r_max}")
    return table


def _check_n_max(n_max: int) -> None:
    if n_max < 1:
        raise ValueError("n_max must be >= 1")


def check_closed_form(
    r_max: int = DEFAULT_R_MAX,
    n_max: int = DEFAULT_N_MAX,
    table: Optional[Sequence[Polynomial]] = None,
) -> VerificationReport:
    """Compare S(N; r) against brute-force summation on the whole grid."""
    _check_n_max(n_max)
    table = _resolve_table(table, r_max)
    report = VerificationReport("closed_form")
    for r in range(r_max + 1):
        p = table[r]
        for N in range(1, n_max + 1):
            expected = brute_force_sum(N, r)
            actual = poly_eval(p, N)
            report.record(
                actual == expected,
                lambda: Witness(r, N, expected, actual),
            )
    return report.finalize()


def finite_difference_check(
    r_max: int = DEFAULT_R_MAX,
    n_max: int = DEFAULT_N_MAX,
    table: Optional[Sequence[Polynomial]] = None,
) -> VerificationReport:
    """Check S(N) - S(N-1) == N**r for N = 1..n_max.

    At N = 1 the lower value is S(0), which for a correct table is the
    (zero) constant term, so the grid matches the other suites.
    """
    _check_n_max(n_max)
    table = _resolve_table(table, r_max)
    report = VerificationReport("finite_difference")
    for r in range(r_max + 1):
        p = table[r]
        prev = poly_eval(p, 0)
        for N in range(1, n_max + 1):
            cur = poly_eval(p, N)
            diff = cur - prev
            expected = N**r
            report.record(diff == expected, lambda: Witness(r, N, expected, diff))
            prev = cur
    return report.finalize()


def integrality_check(
    r_max: int = DEFAULT_R_MAX,
    n_max: int = DEFAULT_N_MAX,
    table: Optional[Sequence[Polynomial]] = None,
) -> VerificationReport:
    """Check that S(N; r) is an integer at every integer N on the grid.

    Witnesses report the brute-force sum as ``expected`` for context; it is
    only computed on failure.
    """
    _check_n_max(n_max)
    table = _resolve_table(table, r_max)
    report = VerificationReport("integrality")
    for r in range(r_max + 1):
        p = table[r]
        for N in range(1, n_max + 1):
            value = poly_eval(p, N)
            report.record(
                rat_is_integer(value),
                lambda: Witness(r, N, brute_force_sum(N, r), value),
            )
    return report.finalize()
