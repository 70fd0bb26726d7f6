"""Exact closed-form polynomials for sums of powers 1**r + 2**r + ... + N**r."""

from .engine import (
    BernoulliSequence,
    LinearConstant,
    PowerSumTable,
    bernoulli,
    bernoulli_numbers,
    build_table,
    fix_linear_constant,
    linear_constant_identity,
    power_sum_direct,
    power_sum_recursive,
)
from .oracle import (
    VerificationReport,
    brute_force_sum,
    check_closed_form,
    finite_difference_check,
    integrality_check,
)
from .poly import Polynomial

__version__ = "0.1.0"
