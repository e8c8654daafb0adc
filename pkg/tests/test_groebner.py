"""Groebner kernel: bases, membership, arithmetic, and local invariants.

Derived expected values are frozen from the independent oracles in
``oracles.py`` (S-pair saturation for bases, lattice predicates for monomial
arithmetic); the frozen numbers are cross-checked against the oracles here.
"""

import random

import pytest

from agrees.errors import (
    NotZeroDimensional,
    RingMismatch,
    ZeroDivisorIdeal,
    ZeroIdeal,
)
from agrees.fields import QQ, PrimeField
from agrees.groebner import (
    Ideal,
    colength,
    ideal_colon,
    ideal_contains,
    ideal_equal,
    ideal_intersection,
    ideal_order,
    ideal_product,
    maximal_ideal,
    min_gens,
    normal_form,
)
from agrees.parse import parse_ideal_spec, parse_polynomial
from agrees.poly import BASE_RING, Polynomial

from oracles import (
    lattice_colength,
    lattice_intersection,
    lattice_member,
    lattice_minimal,
    saturation_groebner,
)


def ideal(text, field=QQ):
    return Ideal(parse_ideal_spec(text, BASE_RING, field))


def poly(text, field=QQ):
    return parse_polynomial(text, BASE_RING, field)


def mono_ideal(exps, field=QQ):
    return Ideal([Polynomial.monomial(BASE_RING, field, e) for e in exps])


# -- reduced bases -------------------------------------------------------------

def test_gb_monomial_input_is_its_own_basis():
    gb = ideal("x^3, y^6").groebner_basis()
    assert sorted(str(g) for g in gb) == ["x^3", "y^6"]


def test_gb_maximal_ideal():
    gb = ideal("x, y").groebner_basis()
    assert sorted(str(g) for g in gb) == ["x", "y"]


def test_gb_mixed_input_matches_saturation_oracle():
    gens = parse_ideal_spec("x^2 - y^2, x^3", BASE_RING, QQ)
    gb = Ideal(gens).groebner_basis()
    # frozen from the saturation oracle: {x^2 - y^2, x*y^2, y^4}
    assert sorted(str(g) for g in gb) == ["x*y^2", "x^2 - y^2", "y^4"]
    oracle = saturation_groebner(gens)
    assert sorted(str(g) for g in oracle) == sorted(str(g) for g in gb)


def test_gb_reducedness_invariants():
    gb = ideal("x^2 - y^2, x^3, x y^3 - y^4").groebner_basis()
    leads = [g.leading()[0] for g in gb]
    for i, li in enumerate(leads):
        for j, lj in enumerate(leads):
            if i != j:
                assert not all(a <= b for a, b in zip(li, lj))
        for g in gb.elements:
            for e in g.terms:
                if g.leading()[0] != e:
                    for lj in leads:
                        assert not all(a <= b for a, b in zip(lj, e))


def test_gb_deterministic_and_cached():
    I1 = ideal("x^2 - y^2, x^3")
    I2 = ideal("x^2 - y^2, x^3")
    assert [str(g) for g in I1.groebner_basis()] == [str(g) for g in I2.groebner_basis()]
    assert I1.groebner_basis() is I1.groebner_basis()


def test_random_bases_match_saturation_oracle():
    rng = random.Random(31)
    for _ in range(15):
        gens = []
        for _ in range(rng.randint(2, 3)):
            terms = {
                (rng.randint(0, 4), rng.randint(0, 4)): QQ.from_int(rng.choice([-2, -1, 1, 2]))
                for _ in range(rng.randint(1, 3))
            }
            p = Polynomial(BASE_RING, QQ, terms)
            if not p.is_zero:
                gens.append(p)
        if not gens:
            continue
        got = [str(g) for g in Ideal(gens).groebner_basis()]
        want = [str(g) for g in saturation_groebner(gens)]
        assert sorted(got) == sorted(want)


# -- normal forms and membership ------------------------------------------------

def test_normal_form_of_generator_is_zero():
    I = ideal("x^3, x^2 y^3, x y^5, y^6")
    gb = I.groebner_basis()
    for g in I.generators:
        assert normal_form(g, gb).is_zero


def test_normal_form_of_one_survives():
    gb = ideal("x^2, y^3").groebner_basis()
    one = Polynomial.one(BASE_RING, QQ)
    assert normal_form(one, gb) == one


def test_normal_form_divisible_monomial():
    gb = ideal("x^3, y^6").groebner_basis()
    assert normal_form(poly("x^2 y^6"), gb).is_zero


def test_normal_form_idempotent():
    gb = ideal("x^2 - y^2, x^3").groebner_basis()
    p = poly("x^4 + x y - y^3")
    r = normal_form(p, gb)
    assert normal_form(r, gb) == r


def test_contains_examples():
    # staircase membership oracle: (1,3) under gens {(2,0),(1,4),(0,5)}
    assert not lattice_member((1, 3), [(2, 0), (1, 4), (0, 5)])
    assert not ideal_contains(ideal("x^2, x y^4, y^5"), poly("x y^3"))
    assert ideal_contains(ideal("x^3, x^2 y^3"), poly("x^2 y^6"))
    # y^2 survives reduction
    assert not ideal_contains(ideal("x^2, x y, y^3"), poly("x^2 - y^2"))


def test_contains_ring_mismatch():
    I = ideal("x, y")
    with pytest.raises(RingMismatch):
        ideal_contains(I, poly("x", PrimeField(2147483647)))


def test_equal_examples():
    assert ideal_equal(ideal("x, y"), ideal("y, x + y"))
    assert not ideal_equal(ideal("x^2"), ideal("x"))
    assert ideal_equal(ideal("x^2, x y, y^2"), ideal("x^2, x y, y^2, x^2 + y^2"))


def test_boundary_product_identity():
    # IJ = I(x^2 - y^{n-alpha}) + x^3 J at (n, alpha, beta) = (5, 3, 4)
    I = ideal("x^3, x^2 y^3, x y^4, y^5")
    J = ideal("x^2, x y, y^2")
    IJ = ideal_product(I, J)
    h = poly("x^2 - y^2")
    rhs = Ideal([g * h for g in I.generators]
                + [poly("x^3") * w for w in J.generators])
    assert ideal_equal(IJ, rhs)


# -- products, intersections, colons -------------------------------------------

def test_product_generator_counts():
    I = ideal("x^3, x^2 y^3, x y^5, y^6")
    J = ideal("x^2, x y, y^3")
    assert min_gens(ideal_product(I, J)) == 6
    m = maximal_ideal(BASE_RING, QQ)
    assert min_gens(ideal_product(m, J)) == 4


def test_product_with_unit():
    I = ideal("x^3, x^2 y^3")
    one = Ideal([Polynomial.one(BASE_RING, QQ)])
    assert ideal_equal(ideal_product(I, one), I)


def test_intersection_examples():
    # lattice oracle: (x^2, y) meet (x, y^2) -> (x^2, xy, y^2)
    assert lattice_intersection([(2, 0), (0, 1)], [(1, 0), (0, 2)]) == \
        lattice_minimal([(2, 0), (1, 1), (0, 2)])
    got = ideal_intersection(ideal("x^2, y"), ideal("x, y^2"))
    assert sorted(str(g) for g in got.groebner_basis()) == ["x*y", "x^2", "y^2"]

    # the literal example pair, frozen from the lattice oracle
    assert lattice_intersection([(1, 0), (0, 3)], [(2, 0), (0, 1)]) == \
        lattice_minimal([(2, 0), (1, 1), (0, 3)])
    got = ideal_intersection(ideal("x, y^3"), ideal("x^2, y"))
    assert sorted(str(g) for g in got.groebner_basis()) == ["x*y", "x^2", "y^3"]

    # the m = 3 slice: (x^2, y) meet (x, y^2) is the square of the maximal ideal
    slice_meet = ideal_intersection(ideal("x^2, y"), ideal("x, y^2"))
    assert ideal_equal(slice_meet, ideal("x^2, x y, y^2"))

    I = ideal("x^2 - y^2, x^3")
    assert ideal_equal(ideal_intersection(I, I), I)


def test_colon_examples():
    got = ideal_colon(ideal("x^3, y^6"), ideal("x^3, x^2 y^3, x y^5, y^6"))
    assert ideal_equal(got, ideal("x^2, x y, y^3"))
    got = ideal_colon(ideal("x^3, y^4"), ideal("x^3, x^2 y^2, y^4"))
    assert ideal_equal(got, ideal("x, y^2"))
    I = ideal("x^2, x y^4, y^5")
    one = Ideal([Polynomial.one(BASE_RING, QQ)])
    assert ideal_equal(ideal_colon(I, one), I)


def test_colon_by_zero_rejected():
    I = ideal("x, y")
    zero = Ideal([Polynomial.zero(BASE_RING, QQ)])
    with pytest.raises(ZeroDivisorIdeal):
        ideal_colon(I, zero)


# -- colength, min_gens, order ---------------------------------------------------

def test_colength_examples():
    assert colength(ideal("x^3, y^6")) == 18
    assert colength(ideal("x^3, x^2 y^3, x y^5, y^6")) == 14
    assert lattice_colength([(3, 0), (2, 3), (1, 5), (0, 6)]) == 14
    assert colength(ideal("x^2, x y, y^2")) == 3


def test_colength_rejects_positive_dimension():
    with pytest.raises(NotZeroDimensional):
        colength(ideal("x^2"))
    with pytest.raises(NotZeroDimensional):
        colength(ideal("x, x y"))


def test_min_gens_examples():
    assert min_gens(ideal("x^3, x^2 y^3, x y^5, y^6")) == 4
    assert min_gens(ideal("x^2, y^2, x^2 + y^2")) == 2
    assert min_gens(ideal("x^2, x y, y^2")) == 3


def test_ideal_order_examples():
    assert ideal_order(ideal("x^3, x^2 y^3, x y^5, y^6")) == 3
    assert ideal_order(ideal("x, y")) == 1
    assert ideal_order(ideal("x^2 + y^5, y^3")) == 2
    with pytest.raises(ZeroIdeal):
        ideal_order(Ideal([Polynomial.zero(BASE_RING, QQ)]))


# -- property suites --------------------------------------------------------------

def _random_mono_ideal(rng, max_exp=5):
    a = rng.randint(1, max_exp)
    b = rng.randint(1, max_exp)
    exps = [(a, 0), (0, b)]
    if a > 1 and b > 1:
        for _ in range(rng.randint(0, 2)):
            exps.append((rng.randint(1, a - 1), rng.randint(1, b - 1)))
    return lattice_minimal(exps)


def test_linkage_and_colength_additivity():
    rng = random.Random(41)
    for _ in range(20):
        exps = _random_mono_ideal(rng)
        I = mono_ideal(exps)
        a = max(e[0] for e in exps)
        b = max(e[1] for e in exps)
        Q = mono_ideal([(a, 0), (0, b)])
        J = ideal_colon(Q, I)
        assert ideal_equal(ideal_colon(Q, J), I)
        assert colength(Q) == colength(I) + colength(J)


def test_linkage_concrete_instance():
    I = ideal("x^3, x^2 y^3, x y^5, y^6")
    Q = ideal("x^3, y^6")
    J = ideal_colon(Q, I)
    assert colength(Q) == 18 and colength(I) == 14 and colength(J) == 4
    assert ideal_equal(ideal_colon(Q, J), I)


def test_order_is_a_valuation_on_products():
    rng = random.Random(43)
    for _ in range(20):
        I = mono_ideal(_random_mono_ideal(rng))
        J = mono_ideal(_random_mono_ideal(rng))
        assert ideal_order(ideal_product(I, J)) == ideal_order(I) + ideal_order(J)
    A = ideal("x^2 - y^3, y^4")
    B = ideal("x + y, y^2")
    assert ideal_order(ideal_product(A, B)) == ideal_order(A) + ideal_order(B)


def test_m_full_iff_generator_count():
    rng = random.Random(47)
    m = maximal_ideal(BASE_RING, QQ)
    x = Polynomial.variable(BASE_RING, QQ, "x")
    y = Polynomial.variable(BASE_RING, QQ, "y")
    for _ in range(25):
        exps = _random_mono_ideal(rng)
        I = mono_ideal(exps)
        contracted = min_gens(I) == ideal_order(I) + 1
        combo = x + y.scale(QQ.from_int(rng.randint(1, 30)))
        full = ideal_equal(ideal_colon(ideal_product(m, I), Ideal([combo])), I)
        assert full == contracted


def test_monomial_path_agreement_sample():
    from agrees.staircase import (
        mono_colength,
        staircase_colon,
        staircase_normalize,
        staircase_product,
    )

    rng = random.Random(53)
    for _ in range(40):
        A = staircase_normalize(_random_mono_ideal(rng))
        B = staircase_normalize(_random_mono_ideal(rng))
        IA, IB = mono_ideal(A.gens), mono_ideal(B.gens)
        assert sorted(g.monomial_exponent() for g in
                      ideal_product(IA, IB).groebner_basis()) == \
            sorted(staircase_product(A, B).gens)
        assert sorted(g.monomial_exponent() for g in
                      ideal_colon(IA, IB).groebner_basis()) == \
            sorted(staircase_colon(A, B).gens)
        assert colength(IA) == mono_colength(A)


def test_prime_field_kernel_agrees_on_monomial_data():
    fp = PrimeField(2147483647)
    I = ideal("x^3, x^2 y^3, x y^5, y^6", fp)
    assert colength(I) == 14 and min_gens(I) == 4
    J = ideal_colon(ideal("x^3, y^6", fp), I)
    assert sorted(str(g) for g in J.groebner_basis()) == ["x*y", "x^2", "y^3"]
