from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from powersum.poly import (
    Polynomial,
    format_latex,
    format_text,
    poly_add,
    poly_antiderivative,
    poly_derivative,
    poly_equal,
    poly_eval,
    poly_scale,
)

F = Fraction
P = Polynomial

small = st.fractions(max_denominator=1000).filter(lambda x: abs(x) < 1000)
polys = st.lists(small, max_size=21).map(Polynomial)


def test_canonical_representation():
    assert P([1, 2, 0, 0]).coeffs == (1, 2)
    assert P([0, 0]).coeffs == ()
    assert P().degree == -1
    assert P([0, 1]).degree == 1
    assert all(isinstance(c, Fraction) for c in P([1, 2]).coeffs)


def test_immutable():
    p = P([1])
    with pytest.raises(AttributeError):
        p.foo = 1


def test_add():
    p = P([0, 1, 1])
    assert poly_add(p, P()) == p
    assert poly_add(P([0, 0, 1]), P([0, 0, -1])).is_zero()
    got = poly_add(P([0, 0, F(1, 2), F(1, 3)]), P([0, F(1, 6)]))
    assert got == P([0, F(1, 6), F(1, 2), F(1, 3)])


def test_scale():
    assert poly_scale(2, P([0, F(1, 2), F(1, 2)])) == P([0, 1, 1])
    p = P([3, F(1, 7)])
    assert poly_scale(1, p) == p
    assert poly_scale(0, P([0, 0, 0, 1])).is_zero()


def test_derivative():
    assert poly_derivative(P([0, 1, 1])) == P([1, 2])
    assert poly_derivative(P()).is_zero()
    assert poly_derivative(P([0, F(1, 6), F(1, 2), F(1, 3)])) == P([F(1, 6), 1, 1])


def test_antiderivative():
    assert poly_antiderivative(P([0, 1, 1])) == P([0, 0, F(1, 2), F(1, 3)])
    assert poly_antiderivative(P()).is_zero()
    assert poly_antiderivative(P([0, 0, 1, 2, 1])) == P(
        [0, 0, 0, F(1, 3), F(1, 2), F(1, 5)]
    )


def _eval_by_powers(p, x):
    return sum((c * x**i for i, c in enumerate(p.coeffs)), Fraction(0))


def test_eval():
    s2 = P([0, F(1, 6), F(1, 2), F(1, 3)])
    assert poly_eval(s2, 1) == 1
    assert poly_eval(P([F(5, 7), 3]), 0) == F(5, 7)
    assert poly_eval(s2, 10) == sum(n * n for n in range(1, 11)) == 385
    assert poly_eval(P(), 5) == 0


@given(polys, small)
def test_horner_matches_power_sum(p, x):
    assert poly_eval(p, x) == _eval_by_powers(p, x)


def test_equal():
    p = P([1, F(2, 3)])
    assert poly_equal(p, p)
    assert poly_equal(P([0, 0, 1]), P([0, 0, 1, 0]))
    assert not poly_equal(
        P([0, 0, F(1, 4), F(1, 2), F(1, 4)]), P([0, 0, 0, F(1, 2), F(1, 4)])
    )


def test_operators():
    p, q = P([1, 2]), P([0, 0, 3])
    assert p + q == P([1, 2, 3])
    assert p - p == P()
    assert 2 * p == p * 2 == P([2, 4])
    assert p(F(1, 2)) == 2
    assert hash(P([1, 2])) == hash(p)


def test_from_terms():
    assert P.from_terms([(2, 1), (0, 3), (2, F(1, 2))]) == P([3, 0, F(3, 2)])
    assert P.from_terms([]) == P()
    assert P.monomial(F(1, 2), 3) == P([0, 0, 0, F(1, 2)])


@given(polys)
def test_fundamental_theorem_round_trip(p):
    assert poly_derivative(poly_antiderivative(p)) == p


@given(polys)
def test_antiderivative_vanishes_at_zero(p):
    assert poly_eval(poly_antiderivative(p), 0) == 0


@given(polys, polys, small)
def test_linearity(p, q, c):
    assert poly_derivative(poly_add(p, q)) == poly_add(
        poly_derivative(p), poly_derivative(q)
    )
    assert poly_antiderivative(poly_add(p, q)) == poly_add(
        poly_antiderivative(p), poly_antiderivative(q)
    )
    assert poly_derivative(poly_scale(c, p)) == poly_scale(c, poly_derivative(p))
    assert poly_antiderivative(poly_scale(c, p)) == poly_scale(c, poly_antiderivative(p))


@given(polys, polys, small)
def test_eval_homomorphism(p, q, x):
    assert poly_eval(poly_add(p, q), x) == poly_eval(p, x) + poly_eval(q, x)


@pytest.mark.parametrize(
    "coeffs, text",
    [
        ([0, F(-1, 30), 0, F(1, 3), F(1, 2), F(1, 5)], "1/5*N^5 + 1/2*N^4 + 1/3*N^3 - 1/30*N"),
        ([0, 1], "N"),
        ([], "0"),
        ([1], "1"),
        ([-1, 0, -1], "-N^2 - 1"),
        ([F(-3, 2), 2], "2*N - 3/2"),
    ],
)
def test_format_text(coeffs, text):
    assert format_text(P(coeffs)) == text


def test_format_latex():
    p = P([0, F(-1, 30), 0, F(1, 3), F(1, 2), F(1, 5)])
    assert format_latex(p) == (
        r"\frac{1}{5}N^{5} + \frac{1}{2}N^{4} + \frac{1}{3}N^{3} - \frac{1}{30}N"
    )
    assert format_latex(P([F(-1, 2)])) == r"-\frac{1}{2}"
    assert format_latex(P([0, 0, 1])) == "N^{2}"
