"""Ground-ring arithmetic: exact Laurent polynomials in nu**(1/2)."""

import json
import random
from fractions import Fraction

import pytest

from thetahecke.laurent import (
    LaurentPoly,
    QuadExtValue,
    as_half,
    divexact,
    format_half,
    half,
)


def rand_poly(rng, terms=4, espan=6, cmax=9):
    return LaurentPoly(
        {rng.randint(-espan, espan): rng.randint(-cmax, cmax) for _ in range(terms)}
    )


def test_half_coercion():
    assert half(3) == Fraction(3, 2)
    assert as_half("3/2") == Fraction(3, 2)
    assert as_half(-2) == Fraction(-2)
    assert format_half(Fraction(4, 2)) == "2"
    assert format_half(Fraction(-3, 2)) == "-3/2"
    with pytest.raises(ValueError):
        as_half("1/3")


def test_half_power_squares_to_nu():
    v = LaurentPoly.nu_power(half(1))
    assert v * v == LaurentPoly.nu_power(1)
    assert v * LaurentPoly.nu_power(half(-1)) == LaurentPoly.one()


def test_ring_axioms_on_random_elements():
    rng = random.Random(7)
    for _ in range(200):
        a, b, c = (rand_poly(rng) for _ in range(3))
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) * c == a * c + b * c
        assert (a * b) * c == a * (b * c)
        assert a - a == LaurentPoly.zero()
        assert a * LaurentPoly.one() == a


def test_specialize_nu1_is_coefficient_sum():
    p = LaurentPoly({-2: 2, 3: 1})  # 2*nu^-1 + nu^(3/2)
    assert p.specialize_nu1() == 3


@pytest.mark.parametrize("q", [2, 3, 4, 5, 9])
def test_specialization_is_ring_hom(q):
    rng = random.Random(q)
    for _ in range(60):
        a, b = rand_poly(rng), rand_poly(rng)
        assert (a * b).specialize_nu1() == a.specialize_nu1() * b.specialize_nu1()
        assert (a + b).specialize_nu1() == a.specialize_nu1() + b.specialize_nu1()
        pa, pb, pab = (x.specialize_prime_power(q) for x in (a, b, a * b))
        assert pab == pa * pb
        assert (a + b).specialize_prime_power(q) == pa + pb


def test_prime_power_value_shape():
    p = LaurentPoly({1: 1, 0: 2})  # nu^(1/2) + 2
    v = p.specialize_prime_power(2)
    assert isinstance(v, QuadExtValue)
    assert (v.rational, v.surd, v.radicand) == (Fraction(2), Fraction(1), 2)
    # perfect square collapses to a plain rational
    w = p.specialize_prime_power(9)
    assert w == Fraction(5)


def test_quadext_is_exact():
    a = QuadExtValue(Fraction(1, 2), Fraction(3), 2)
    b = QuadExtValue(Fraction(2), Fraction(-1, 3), 2)
    prod = a * b
    # (1/2 + 3 s)(2 - s/3) with s^2 = 2
    assert prod.rational == Fraction(1) - Fraction(2)  # 1 + 3*(-1/3)*2 = -1
    assert prod.surd == Fraction(-1, 6) + Fraction(6)


def test_json_round_trip_sorted_keys():
    p = LaurentPoly({3: 1, -2: 2})
    obj = p.to_json_obj()
    assert list(obj) == ["-2", "3"]
    assert LaurentPoly.from_json_obj(obj) == p
    assert LaurentPoly.loads(p.dumps()) == p
    assert json.loads(p.dumps()) == {"-2": 2, "3": 1}


def test_zero_terms_dropped():
    assert LaurentPoly({2: 0}) == LaurentPoly.zero()
    assert not LaurentPoly.zero()
    assert (LaurentPoly.one() - LaurentPoly.one()).is_zero()


def test_degree_span():
    assert LaurentPoly({-2: 1, 3: 4}).degree_span() == 5
    assert LaurentPoly.zero().degree_span() == 0


def test_divexact():
    rng = random.Random(1)
    for _ in range(40):
        a, b = rand_poly(rng), rand_poly(rng)
        if b.is_zero():
            continue
        assert divexact(a * b, b) == a
    with pytest.raises(ValueError):
        divexact(LaurentPoly.one(), LaurentPoly({0: 1, 1: 1}))
