"""Field arithmetic: exactness, axioms, and error behaviour."""

from fractions import Fraction

import pytest

from ringiso import QQ, GFElement, MismatchError, PrimeField, ValidationError
from ringiso.fields import field_descriptor, field_from_descriptor, is_prime
from ringiso.rng import SplitMix64


def test_prime_validation():
    PrimeField(2)
    PrimeField(101)
    for bad in (0, 1, 4, 91, -7):
        with pytest.raises(ValidationError):
            PrimeField(bad)


def test_is_prime_small():
    primes = {2, 3, 5, 7, 11, 13, 101}
    assert {n for n in range(110) if is_prime(n)} >= primes
    assert not any(is_prime(n) for n in (0, 1, 4, 9, 100, 102))


def test_rational_addition_matches_cross_multiplication():
    # Exactness oracle: (a/b) + (c/d) == (a*d + c*b) / (b*d) over big integers.
    rng = SplitMix64(20240601)
    for _ in range(1000):
        a, c = rng.nonzero_int(10**6), rng.nonzero_int(10**6)
        b, d = 1 + rng.below(10**6), 1 + rng.below(10**6)
        got = Fraction(a, b) + Fraction(c, d)
        assert got.numerator * (b * d) == (a * d + c * b) * got.denominator


def test_rationals_lowest_terms_positive_denominator():
    x = QQ.ratio(4, -6)
    assert (x.numerator, x.denominator) == (-2, 3)
    with pytest.raises(ValidationError):
        QQ.ratio(1, 0)


def test_gf_arithmetic():
    gf = PrimeField(7)
    a, b = gf.from_int(3), gf.from_int(5)
    assert a + b == gf.from_int(1)
    assert a - b == gf.from_int(5)
    assert a * b == gf.from_int(1)
    assert (a / b).value == (3 * pow(5, 5, 7)) % 7
    assert -a == gf.from_int(4)
    assert gf.ratio(3, 2) == gf.from_int(3) / gf.from_int(2)


def test_gf_field_axioms_sampled():
    gf = PrimeField(11)
    elems = [gf.from_int(k) for k in range(11)]
    for a in elems:
        for b in elems:
            assert a + b == b + a
            assert a * b == b * a
            if b:
                assert (a / b) * b == a
    for a in elems[1:]:
        assert a * a.inverse() == gf.one


def test_gf_divide_by_zero():
    gf = PrimeField(5)
    with pytest.raises(ZeroDivisionError):
        gf.one / gf.zero
    with pytest.raises(ValidationError):
        gf.ratio(1, 10)  # denominator reduces to 0 mod 5


def test_mixed_prime_fields_rejected():
    with pytest.raises(MismatchError):
        GFElement(1, 5) + GFElement(1, 7)


def test_field_descriptors_round_trip():
    for field in (QQ, PrimeField(101)):
        assert field_from_descriptor(field_descriptor(field)) == field
    with pytest.raises(ValidationError):
        field_from_descriptor({"weird": 3})
