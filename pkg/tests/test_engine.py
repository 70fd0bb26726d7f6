from fractions import Fraction

import pytest
import sympy

from powersum.engine import (
    BernoulliSequence,
    PowerSumTable,
    bernoulli,
    bernoulli_numbers,
    build_table,
    fix_linear_constant,
    linear_constant_identity,
    power_sum_direct,
    power_sum_recursive,
)
from powersum.poly import Polynomial, poly_eval
from powersum.rational import binomial

F = Fraction
P = Polynomial

# Displayed closed forms for r = 0..4, ascending coefficients.
FIXTURES = {
    0: P([0, 1]),
    1: P([0, F(1, 2), F(1, 2)]),
    2: P([0, F(1, 6), F(1, 2), F(1, 3)]),
    3: P([0, 0, F(1, 4), F(1, 2), F(1, 4)]),
    4: P([0, F(-1, 30), 0, F(1, 3), F(1, 2), F(1, 5)]),
}
CONSTANTS = {1: F(1, 2), 2: F(1, 6), 3: F(0), 4: F(-1, 30)}


def interpolated_power_sum(r):
    """S(N; r) via exact interpolation through r + 2 brute-force points."""
    n = sympy.Symbol("N")
    pts = [(k, sum(i**r for i in range(1, k + 1))) for k in range(1, r + 3)]
    coeffs = sympy.Poly(sympy.interpolate(pts, n), n).all_coeffs()[::-1]
    return P(F(int(c.p), int(c.q)) for c in coeffs)


@pytest.mark.parametrize("r", sorted(FIXTURES))
def test_recursive_fixtures(r):
    assert power_sum_recursive(r) == FIXTURES[r]


@pytest.mark.parametrize("r", [1, 2, 4])
def test_direct_fixtures(r):
    assert power_sum_direct(r) == FIXTURES[r]


def test_direct_r0_literal():
    assert power_sum_direct(0) == P([0, 1])


@pytest.mark.parametrize("r", range(0, 16))
def test_matches_interpolation_oracle(r):
    assert power_sum_recursive(r) == interpolated_power_sum(r)


def test_fix_linear_constant_examples():
    assert fix_linear_constant(P([0, 0, F(1, 2)])) == F(1, 2)
    assert fix_linear_constant(P([0, 0, F(1, 2), F(1, 3)])) == F(1, 6)
    assert fix_linear_constant(P([0, 0, F(1, 4), F(1, 2), F(1, 4)])) == 0


def test_table_constants():
    table = build_table(4)
    for r, c in CONSTANTS.items():
        assert table.constant(r) == c
        assert table.constants[r - 1].r == r
    with pytest.raises(ValueError):
        table.constant(0)


def test_bernoulli_examples():
    assert bernoulli(0) == 1
    assert bernoulli(1) == F(-1, 2)
    assert bernoulli(4) == F(-1, 30)


def test_bernoulli_against_sympy():
    # sympy uses B_1 = +1/2; every other index agrees.
    for j in range(0, 61):
        if j != 1:
            assert bernoulli(j) == F(str(sympy.bernoulli(j)))


def test_bernoulli_recurrence_closure():
    b = bernoulli_numbers(40)
    for m in range(1, 41):
        assert sum(binomial(m + 1, j) * b[j] for j in range(m + 1)) == 0


def test_bernoulli_sequence_invariants():
    seq = BernoulliSequence.build(30)
    assert len(seq) == 31 and seq.j_max == 30
    assert all(seq[j] == 0 for j in range(3, 31, 2))
    assert seq.extend(10) is not None and seq.extend(40).values[:31] == seq.values
    with pytest.raises(ValueError):
        BernoulliSequence((F(1), F(1, 2)))
    with pytest.raises(ValueError):
        BernoulliSequence((F(1), F(-1, 2), F(1, 6), F(1)))


@pytest.mark.parametrize("r", range(0, 31))
def test_method_equivalence(r):
    assert power_sum_recursive(r) == power_sum_direct(r)


@pytest.mark.parametrize(
    "r, value", [(2, F(1, 6)), (3, F(0)), (4, F(-1, 30))]
)
def test_linear_constant_identity_examples(r, value):
    assert linear_constant_identity(r) == (value, value, True)


def test_linear_constant_identity_range():
    for r in range(1, 31):
        res = linear_constant_identity(r)
        assert res.equal
        assert res.lhs == build_table(r).constant(r)
        if r >= 3 and r % 2:
            assert res.lhs == 0


def test_identity_detects_bad_bernoulli():
    values = list(bernoulli_numbers(4).values)
    values[4] = F(1, 30)
    res = linear_constant_identity(4, bernoulli_values=values)
    assert not res.equal and res.lhs == F(-1, 30) and res.rhs == F(1, 30)


def test_structural_shape():
    table = build_table(40)
    for r, p in enumerate(table):
        assert p.degree == r + 1
        assert p.coefficient(0) == 0
        assert poly_eval(p, 1) == 1
        if r >= 1:
            assert p.coefficient(r + 1) == F(1, r + 1)
            assert p.coefficient(r) == F(1, 2)


def test_build_table_shapes():
    t0 = build_table(0)
    assert t0.built_up_to == 0 and list(t0) == [P([0, 1])]
    t2 = build_table(2)
    assert list(t2) == [FIXTURES[0], FIXTURES[1], FIXTURES[2]]
    assert build_table(10)[10] == power_sum_direct(10)


def test_table_extend_is_fresh_and_consistent():
    t = PowerSumTable(()).extend(6)
    assert t.entries == build_table(6).entries
    assert t.extend(3) == t


@pytest.mark.parametrize("fn", [power_sum_recursive, power_sum_direct, build_table, bernoulli])
def test_negative_index_rejected(fn):
    with pytest.raises(ValueError):
        fn(-1)
