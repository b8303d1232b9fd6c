from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vietacluster.laurent import (
    ExchangePoly,
    LaurentPoly,
    NotDivisible,
    RankMismatch,
    ep_eval,
    ep_reciprocal,
    lp_add,
    lp_eval,
    lp_exact_div,
    lp_mul,
    reference_divide,
)

x1, x2, x3 = LaurentPoly.gens(3)


def laurent_polys(rank: int = 3, max_terms: int = 4):
    exps = st.tuples(*[st.integers(-2, 2)] * rank)
    coeffs = st.integers(-3, 3).filter(bool)
    return st.dictionaries(exps, coeffs, max_size=max_terms).map(lambda d: LaurentPoly(d, rank))


nonzero = laurent_polys().filter(lambda p: not p.is_zero())


class TestAddition:
    def test_cancellation(self):
        assert (x1 + x2) + (-x2) == x1

    def test_zero_is_identity(self):
        p = x1 * x2 + 3
        assert lp_add(p, LaurentPoly.zero(3)) == p

    def test_markov_numerator(self):
        inv = LaurentPoly.monomial((-1, 0, 0))
        total = x2**2 * inv + x3**2 * inv
        assert total.terms() == {(-1, 2, 0): 1, (-1, 0, 2): 1}
        assert str(total) == "(x2^2 + x3^2)/x1"

    def test_rank_mismatch(self):
        with pytest.raises(RankMismatch):
            x1 + LaurentPoly.gens(2)[0]


class TestMultiplication:
    def test_one_is_identity(self):
        p = x1 - x3 * 4
        assert lp_mul(p, LaurentPoly.one(3)) == p

    def test_inverse_monomial(self):
        assert x1 * LaurentPoly.monomial((-1, 0, 0)) == LaurentPoly.one(3)

    def test_difference_of_squares(self):
        assert (x2 + x3) * (x2 - x3) == x2**2 - x3**2

    def test_negative_power_of_monomial(self):
        assert (x1 * x2) ** -2 == LaurentPoly.monomial((-2, -2, 0))


class TestDivision:
    def test_monomial_divisor(self):
        assert lp_exact_div(x2**2 + x3**2, x1).terms() == {(-1, 2, 0): 1, (-1, 0, 2): 1}

    def test_binomial_divisor(self):
        assert (x2**2 - x3**2) / (x2 + x3) == x2 - x3

    def test_remainder_raises(self):
        with pytest.raises(NotDivisible):
            lp_exact_div(x2**2 + x3**2, x2 + x3)

    def test_zero_divisor(self):
        with pytest.raises(ZeroDivisionError):
            x1.exact_div(LaurentPoly.zero(3))

    def test_reference_agrees_on_example(self):
        got = reference_divide((x2**2 - x3**2).terms(), (x2 + x3).terms())
        assert got == (x2 - x3).terms()
        with pytest.raises(NotDivisible):
            reference_divide((x2**2 + x3**2).terms(), (x2 + x3).terms())


class TestEvaluate:
    def test_all_ones(self):
        assert lp_eval((x2**2 + x3**2) / x1, (1, 1, 1)) == 2

    def test_constant(self):
        assert LaurentPoly.one(3).evaluate((Fraction(2, 7), 5, 9)) == 1

    def test_rational_point(self):
        assert (x1 / x2).evaluate((1, 3, 1)) == Fraction(1, 3)

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            x1.evaluate((0, 1, 1))


class TestExchangePoly:
    def test_markov_monomial(self):
        m = LaurentPoly.monomial((0, -2, 2))
        assert ep_eval(ExchangePoly.of(1, 1), m) == 1 + m

    def test_value_at_one(self):
        k1 = 5
        assert ep_eval(ExchangePoly.of(1, k1, 1), LaurentPoly.one(3)) == LaurentPoly.constant(2 + k1, 3)

    def test_value_at_zero(self):
        assert ep_eval(ExchangePoly.of(1, 1), LaurentPoly.zero(3)) == LaurentPoly.one(3)

    def test_palindromes_are_fixed(self):
        assert ep_reciprocal(ExchangePoly.of(1, 1)) == ExchangePoly.of(1, 1)
        assert ep_reciprocal(ExchangePoly.of(1, 4, 1)) == ExchangePoly.of(1, 4, 1)

    def test_reverse(self):
        assert ep_reciprocal(ExchangePoly.of(1, 3, 2, 1)) == ExchangePoly.of(1, 2, 3, 1)

    @pytest.mark.parametrize("coeffs", [(1,), (2, 1), (1, 1, 3), (1, -1, 1)])
    def test_invalid(self, coeffs):
        with pytest.raises(ValueError):
            ExchangePoly(coeffs)

    def test_homogenized_matches_substitution(self):
        z = ExchangePoly.of(1, 2, 0, 1)
        p, q = x1 * x2 + 1, x3**2
        expected = sum((q ** (3 - j) * p**j * c for j, c in enumerate(z.coeffs)), LaurentPoly.zero(3))
        assert z.homogenized(p, q) == expected
        assert z.homogenized(p, q) == z(p / q) * q**3


@settings(max_examples=60, deadline=None)
@given(laurent_polys(), laurent_polys(), laurent_polys())
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p * q == q * p
    assert p * (q + r) == p * q + p * r


@settings(max_examples=60, deadline=None)
@given(laurent_polys(), nonzero)
def test_division_inverts_multiplication(p, q):
    assert (p * q).exact_div(q) == p
    assert reference_divide((p * q).terms(), q.terms()) == p.terms()


@settings(max_examples=60, deadline=None)
@given(laurent_polys(max_terms=3), laurent_polys(max_terms=3))
def test_equality_is_structural(p, q):
    assert (p == q) == (p.terms() == q.terms())
    if p == q:
        assert hash(p) == hash(q)
