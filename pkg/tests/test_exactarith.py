from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from klschur.errors import DenominatorVanishes, NotDivisible
from klschur.exactarith import (BivariatePoly, CyclotomicNumber, CyclotomicTarget, LaurentPoly,
                                PrimeFieldElement, PrimeFieldTarget, RationalFunction,
                                cyclotomic_polynomial, cyclotomic_to_prime, exact_divide,
                                mixed_product, multiplicative_order, parse_laurent, parse_ratfunc,
                                specialize)

v = LaurentPoly.v()

laurents = st.dictionaries(st.integers(-4, 4), st.integers(-5, 5), max_size=4).map(LaurentPoly)
nonzero_laurents = laurents.filter(bool)


@given(laurents, laurents, laurents)
def test_laurent_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a - a == LaurentPoly()


@given(laurents, laurents)
def test_bar_is_a_ring_involution(a, b):
    assert (a * b).bar() == a.bar() * b.bar()
    assert a.bar().bar() == a


@given(laurents, nonzero_laurents)
def test_exact_divide_inverts_multiplication(a, b):
    assert exact_divide(a * b, b) == a


def test_exact_divide_rejects_remainder():
    with pytest.raises(NotDivisible):
        exact_divide(v + 1, v * v + 1)


@given(laurents, nonzero_laurents, laurents, nonzero_laurents)
def test_ratfunc_field_operations(a, b, c, d):
    x, y = RationalFunction(a, b), RationalFunction(c, d)
    assert (x + y) - y == x
    if y:
        assert (x / y) * y == x
    assert RationalFunction(a * d, b * d) == x


@given(laurents)
def test_polynomial_ratfunc_matches_laurent(a):
    x = RationalFunction.coerce(a)
    assert x.is_polynomial() and x.as_laurent() == a
    assert hash(x) == hash(a) and x == a


def test_parse_roundtrip():
    assert parse_laurent("v + v^-1") == v + v ** -1
    assert parse_ratfunc("(v^2-1)/(v-1)") == v + 1
    assert parse_ratfunc("2") == LaurentPoly(2)
    x = parse_ratfunc("v/(1+v^2)")
    assert parse_ratfunc(str(x)) == x


def test_degree_and_membership():
    p = 3 * v ** 2 - v ** -1
    assert p.degree == 2 and p.coefficient(-1) == -1
    assert p.is_in_A()
    assert not LaurentPoly({0: Fraction(1, 2)}).is_in_A()


def test_cyclotomic_polynomials():
    assert cyclotomic_polynomial(4) == [1, 0, 1]
    assert cyclotomic_polynomial(6) == [1, -1, 1]
    z = CyclotomicNumber.zeta(6)
    assert z ** 6 == CyclotomicNumber.scalar(6, 1)
    assert z ** 3 == CyclotomicNumber.scalar(6, -1)
    assert (z + 1) * (z + 1).inverse() == CyclotomicNumber.scalar(6, 1)


def test_prime_field():
    x = PrimeFieldElement(7, 3)
    assert x.inverse() * x == PrimeFieldElement(7, 1)
    assert multiplicative_order(3, 7) == 6
    assert x.order() == 6


@settings(max_examples=60)
@given(laurents, laurents, st.sampled_from([(5, 2), (7, 3), (13, 5), (13, 4)]))
def test_prime_specialization_is_a_ring_map(a, b, target):
    T = PrimeFieldTarget(*target)
    assert specialize(a * b, T) == specialize(a, T) * specialize(b, T)
    assert specialize(a + b, T) == specialize(a, T) + specialize(b, T)


@settings(max_examples=60)
@given(laurents, laurents, st.sampled_from([4, 6, 8]))
def test_cyclotomic_specialization_is_a_ring_map(a, b, m):
    T = CyclotomicTarget(m)
    assert specialize(a * b, T) == specialize(a, T) * specialize(b, T)


@settings(max_examples=40)
@given(laurents)
def test_specialization_factors_through_cyclotomic(a):
    # v -> 2 in F_5 has order 4, so it is a root of Phi_4 mod 5
    direct = specialize(a, PrimeFieldTarget(5, 2))
    assert cyclotomic_to_prime(specialize(a, CyclotomicTarget(4)), 5, 2) == direct


def test_denominator_vanishing_is_reported():
    with pytest.raises(DenominatorVanishes):
        specialize(RationalFunction(LaurentPoly(1), v + v ** -1), CyclotomicTarget(4))


def test_bivariate_mixed_product():
    p = mixed_product(v + 1, v)
    assert p == BivariatePoly.in_vprime(v + 1) * BivariatePoly.in_v(v)
