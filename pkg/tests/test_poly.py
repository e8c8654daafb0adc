"""Monomial orders, polynomial arithmetic, and field axioms."""

import random
from fractions import Fraction

import pytest

from agrees.errors import RingMismatch
from agrees.fields import QQ, PrimeField
from agrees.poly import (
    BASE_RING,
    GREVLEX,
    LEX,
    BlockElimination,
    Polynomial,
    Ring,
    compare_monomials,
    rees_ring,
)

FP = PrimeField(2147483647)


def test_grevlex_tiebreak():
    assert compare_monomials((2, 0), (1, 1), BASE_RING, GREVLEX) == 1


def test_grevlex_degree_compatible():
    assert compare_monomials((1, 0), (0, 2), BASE_RING, GREVLEX) == -1


def test_lex_ignores_degree():
    assert compare_monomials((1, 0), (0, 3), BASE_RING, LEX) == 1


def test_compare_equal_iff_same_exponents():
    assert compare_monomials((2, 1), (2, 1), BASE_RING, GREVLEX) == 0
    with pytest.raises(RingMismatch):
        compare_monomials((2, 1, 0), (2, 1), BASE_RING, GREVLEX)


def _random_mono(rng, arity):
    return tuple(rng.randint(0, 6) for _ in range(arity))


@pytest.mark.parametrize("order", [GREVLEX, LEX, BlockElimination(front=("x",))])
def test_orders_multiplicative(order):
    rng = random.Random(7)
    key = order.key(BASE_RING)
    for _ in range(300):
        a, b, c = (_random_mono(rng, 2) for _ in range(3))
        if key(a) < key(b):
            ac = tuple(x + y for x, y in zip(a, c))
            bc = tuple(x + y for x, y in zip(b, c))
            assert key(ac) < key(bc)


def test_grevlex_degree_dominates_random():
    rng = random.Random(8)
    key = GREVLEX.key(BASE_RING)
    for _ in range(200):
        a, b = _random_mono(rng, 2), _random_mono(rng, 2)
        if sum(a) < sum(b):
            assert key(a) < key(b)


def test_block_order_eliminates():
    ring = rees_ring(2)  # x, y, t, T1, T2
    order = BlockElimination(front=("t",))
    key = order.key(ring)
    with_t = (0, 0, 1, 0, 0)
    without = (5, 5, 0, 3, 3)
    assert key(with_t) > key(without)


@pytest.mark.parametrize("field", [QQ, FP])
def test_field_axioms_random(field):
    rng = random.Random(11)
    samples = [field.from_int(rng.randint(-40, 40)) for _ in range(30)]
    for a in samples[:10]:
        for b in samples[10:20]:
            for c in samples[20:]:
                assert field.add(field.add(a, b), c) == field.add(a, field.add(b, c))
                assert field.mul(field.mul(a, b), c) == field.mul(a, field.mul(b, c))
                assert field.mul(a, field.add(b, c)) == field.add(
                    field.mul(a, b), field.mul(a, c))
    for a in samples:
        if a != field.zero:
            assert field.mul(a, field.inv(a)) == field.one
        assert field.add(a, field.neg(a)) == field.zero


def test_rationals_lowest_terms():
    assert QQ.fraction(4, 6) == Fraction(2, 3)
    assert QQ.fraction(1, -2) == Fraction(-1, 2)
    assert Fraction(-1, 2).denominator == 2  # positive denominator normal form


def test_prime_field_range_and_modulus():
    from agrees.errors import BadParameters

    assert FP.from_int(-1) == FP.p - 1
    assert 0 <= FP.mul(FP.from_int(12345), FP.from_int(-9876)) < FP.p
    with pytest.raises(BadParameters):
        PrimeField(1048573)  # prime but below the 2^20 floor
    with pytest.raises(BadParameters):
        PrimeField(1 << 22)  # composite


def test_polynomial_arithmetic():
    x = Polynomial.variable(BASE_RING, QQ, "x")
    y = Polynomial.variable(BASE_RING, QQ, "y")
    p = (x + y) * (x - y)
    assert p == x * x - y * y
    assert (x + y) ** 2 == x * x + 2 * x * y + y * y
    assert (p - p).is_zero
    assert p.min_degree() == 2 and p.total_degree() == 2


def test_polynomial_zero_is_empty():
    x = Polynomial.variable(BASE_RING, QQ, "x")
    z = x - x
    assert z.terms == {} and z.is_zero and str(z) == "0"


def test_no_zero_coefficients_stored():
    x = Polynomial.variable(BASE_RING, QQ, "x")
    p = x + x.scale(QQ.from_int(-1)) + x
    assert list(p.terms.values()) == [Fraction(1)]


def test_ring_mismatch_raises():
    x = Polynomial.variable(BASE_RING, QQ, "x")
    other = Polynomial.variable(Ring(("x", "y", "t")), QQ, "x")
    with pytest.raises(RingMismatch):
        _ = x + other
    with pytest.raises(RingMismatch):
        _ = x + Polynomial.variable(BASE_RING, FP, "x")


def test_leading_term_respects_order():
    x = Polynomial.variable(BASE_RING, QQ, "x")
    y = Polynomial.variable(BASE_RING, QQ, "y")
    p = x + y ** 3
    assert p.leading(GREVLEX)[0] == (0, 3)
    assert p.leading(LEX)[0] == (1, 0)


def test_substitute():
    ring3 = Ring(("x", "y", "t"))
    x3 = Polynomial.variable(ring3, QQ, "x")
    y3 = Polynomial.variable(ring3, QQ, "y")
    t3 = Polynomial.variable(ring3, QQ, "t")
    p = Polynomial.monomial(BASE_RING, QQ, (2, 1))
    image = p.substitute(ring3, {"x": x3 * t3, "y": y3})
    assert image == x3 * x3 * t3 * t3 * y3


def test_str_canonical_forms():
    x = Polynomial.variable(BASE_RING, QQ, "x")
    y = Polynomial.variable(BASE_RING, QQ, "y")
    assert str(x * x - y * y) == "x^2 - y^2"
    assert str(2 * (x ** 2) * (y ** 3)) == "2*x^2*y^3"
    assert str(-x + y) == "-x + y"
    assert str(x.scale(Fraction(1, 2))) == "1/2*x"
    one = Polynomial.one(BASE_RING, QQ)
    assert str(one) == "1"


def test_str_symmetric_representatives_over_fp():
    x = Polynomial.variable(BASE_RING, FP, "x")
    p = x.scale(FP.from_int(-1))
    assert str(p) == "-x"
