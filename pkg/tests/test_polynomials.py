"""Polynomial arithmetic, normal forms, substitution, and decompositions."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ringiso import (
    QQ,
    MismatchError,
    Monomial,
    MonomialIdeal,
    Polynomial,
    PrimeField,
    ValidationError,
    normal_form,
    substitute,
)
from ringiso.rng import SplitMix64

from helpers import GF101, random_polynomial, random_squarefree_ideal

X1, X2, X3 = (Monomial.variable(i) for i in range(3))


def poly(terms, nvars=3, field=QQ):
    return Polynomial.from_terms(
        field, nvars, [(m, field.ratio(*c) if isinstance(c, tuple) else field.from_int(c)) for m, c in terms]
    )


def test_monomial_basics():
    m = Monomial([(2, 1), (0, 2)])
    assert m.degree == 3
    assert m.exps == ((0, 2), (2, 1))
    assert m.support == {0, 2}
    assert not m.is_squarefree()
    assert Monomial.one().degree == 0
    assert (X1 * X2).divides(Monomial([(0, 2), (1, 1)]))
    assert not (X1 * X3).divides(X1 * X2)
    with pytest.raises(ValidationError):
        Monomial([(0, 1), (0, 2)])
    with pytest.raises(ValidationError):
        Monomial([(0, -1)])


def test_monomial_zero_exponents_dropped():
    assert Monomial([(0, 0), (1, 2)]) == Monomial([(1, 2)])


def test_ideal_minimalized_on_construction():
    ideal = MonomialIdeal(3, [X1 * X2, X1 * X2 * X3, X3])
    assert set(ideal.generators) == {X1 * X2, X3}


def test_ideal_rejects_non_squarefree():
    with pytest.raises(ValidationError):
        MonomialIdeal(2, [Monomial([(0, 2)])])
    with pytest.raises(ValidationError):
        MonomialIdeal(2, [Monomial.one()])
    with pytest.raises(MismatchError):
        MonomialIdeal(1, [X1 * X2])


def test_normal_form_examples():
    # x1^2*x2 mod (x1*x2) -> 0
    p = poly([(Monomial([(0, 2), (1, 1)]), 1)])
    assert normal_form(p, MonomialIdeal(3, [X1 * X2])).is_zero
    # x1 + x3 untouched by (x1*x2)
    q = poly([(X1, 1), (X3, 1)])
    assert normal_form(q, MonomialIdeal(3, [X1 * X2])) == q
    # both terms of x1*x3 + 2*x2*x3^2 divisible by a generator of (x1*x3, x2*x3)
    r = poly([(X1 * X3, 1), (X2 * Monomial([(2, 2)]), 2)])
    assert normal_form(r, MonomialIdeal(3, [X1 * X3, X2 * X3])).is_zero


def test_normal_form_variable_count_mismatch():
    with pytest.raises(MismatchError):
        normal_form(poly([(X1, 1)], nvars=2), MonomialIdeal(3, [X1 * X2]))


def test_substitute_examples():
    field = QQ
    # identity relabeling kills the generator
    p = poly([(X1 * X2, 1)], nvars=2)
    images = [Polynomial.variable(field, 2, 0), Polynomial.variable(field, 2, 1)]
    assert substitute(p, images, MonomialIdeal(2, [X1 * X2])).is_zero
    # x1 -> y1 + 5*y3 expands into the ideal (y1*y2, y2*y3)
    p = poly([(X1 * X2, 1)])
    images = [
        poly([(X1, 1), (X3, 5)]),
        Polynomial.variable(field, 3, 1),
        Polynomial.variable(field, 3, 2),
    ]
    assert substitute(p, images, MonomialIdeal(3, [X1 * X2, X2 * X3])).is_zero
    # swap with empty ideal
    p = poly([(X1, 1), (X2, 1)], nvars=2)
    images = [Polynomial.variable(field, 2, 1), Polynomial.variable(field, 2, 0)]
    assert substitute(p, images, MonomialIdeal.empty(2)) == p


def test_substitute_arity_mismatch():
    p = poly([(X1, 1)])
    with pytest.raises(MismatchError):
        substitute(p, [Polynomial.variable(QQ, 3, 0)], MonomialIdeal.empty(3))


def test_decomposition_example():
    # 3 + y1 - 2*y2*y3
    p = poly([(Monomial.one(), 3), (X1, 1), (X2 * X3, -2)])
    assert p.constant_term() == Fraction(3)
    assert p.linear_part() == [Fraction(1), Fraction(0), Fraction(0)]
    assert p.homogeneous_component(2) == poly([(X2 * X3, -2)])
    zero = Polynomial.zero(QQ, 3)
    assert zero.constant_term() == Fraction(0)
    assert zero.linear_part() == [Fraction(0)] * 3
    half = poly([(X2, (1, 2))])
    assert half.linear_part() == [Fraction(0), Fraction(1, 2), Fraction(0)]


def test_decomposition_reassembles():
    rng = SplitMix64(77)
    for _ in range(50):
        p = random_polynomial(rng, QQ, 3)
        total = Polynomial.zero(QQ, 3)
        for d in range(p.degree() + 1):
            total = total + p.homogeneous_component(d)
        assert total == p


@settings(max_examples=60)
@given(st.integers(0, 2**63), st.sampled_from(["q", "gf"]))
def test_normal_form_idempotent_and_multiplicative(seed, which):
    field = QQ if which == "q" else GF101
    rng = SplitMix64(seed)
    nvars = 1 + rng.below(4)
    ideal = random_squarefree_ideal(rng, nvars)
    p = random_polynomial(rng, field, nvars)
    q = random_polynomial(rng, field, nvars)
    nf = normal_form
    assert nf(nf(p, ideal), ideal) == nf(p, ideal)
    assert nf(p * q, ideal) == nf(nf(p, ideal) * nf(q, ideal), ideal)


@settings(max_examples=60)
@given(st.integers(0, 2**63), st.sampled_from(["q", "gf"]))
def test_substitute_is_ring_homomorphism(seed, which):
    field = QQ if which == "q" else GF101
    rng = SplitMix64(seed)
    nvars = 1 + rng.below(3)
    target_vars = 1 + rng.below(3)
    ideal = random_squarefree_ideal(rng, target_vars)
    images = [
        random_polynomial(rng, field, target_vars, max_terms=3, max_degree=2)
        for _ in range(nvars)
    ]
    p = random_polynomial(rng, field, nvars, max_terms=4, max_degree=2)
    q = random_polynomial(rng, field, nvars, max_terms=4, max_degree=2)
    sub = lambda poly_: substitute(poly_, images, ideal)
    assert sub(p + q) == sub(p) + sub(q)
    assert sub(p * q) == normal_form(sub(p) * sub(q), ideal)


def test_polynomial_rejects_foreign_coefficients():
    with pytest.raises(ValidationError):
        Polynomial(QQ, 2, {X1: GF101.one})
    with pytest.raises(MismatchError):
        Polynomial(QQ, 1, {X2: QQ.one})


def test_field_mismatch_in_arithmetic():
    p = Polynomial.variable(QQ, 2, 0)
    q = Polynomial.variable(GF101, 2, 0)
    with pytest.raises(MismatchError):
        p + q
