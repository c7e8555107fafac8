from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nakajima.errors import DegreeOutOfRange, DivisionByZero, EvenCharacteristic, NonPrime
from nakajima.field_core import INF, Place, RatFunc, fq_make, is_prime, partial_fractions, place_valuation
from nakajima.field_core import poly as P

FIELDS = [(3, 1), (5, 1), (7, 1), (3, 2), (5, 2), (3, 3)]


def test_is_prime_small():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_fq_make_rejects_bad_input():
    with pytest.raises(NonPrime):
        fq_make(9)
    with pytest.raises(EvenCharacteristic):
        fq_make(2)
    with pytest.raises(DegreeOutOfRange):
        fq_make(3, 0)


def test_fq_make_is_cached_and_sized():
    assert fq_make(3, 2) is fq_make(3, 2)
    assert fq_make(3, 2).q == 9
    assert len(list(fq_make(5, 2).elements())) == 25


def test_modulus_is_least_irreducible():
    # T^2 + 1 is the first monic irreducible quadratic over F_3 in lexicographic order
    assert fq_make(3, 2).modulus == (1, 0, 1)
    assert P.is_irreducible(fq_make(3), fq_make(3, 3).modulus)


@pytest.mark.parametrize("p,k", FIELDS)
def test_multiplicative_group_is_cyclic_of_order_q_minus_1(p, k):
    F = fq_make(p, k)
    q = F.q
    orders = set()
    for a in range(1, q):
        assert F.pow(a, q - 1) == 1
        assert F.mul(a, F.inv(a)) == 1
        e = next(e for e in range(1, q) if F.pow(a, e) == 1)
        orders.add(e)
    assert max(orders) == q - 1


@pytest.mark.parametrize("p,k", FIELDS)
def test_frobenius_and_pth_root_are_inverse(p, k):
    F = fq_make(p, k)
    for a in range(F.q):
        assert F.pth_root(F.frobenius(a)) == a
        assert F.frobenius(a) == F.pow(a, p)


def test_element_wrapper_arithmetic():
    F = fq_make(5, 2)
    a, b = F(7), F(13)
    assert (a + b) - b == a
    assert (a * b) / b == a
    assert a ** 24 == F(1)
    with pytest.raises(DivisionByZero):
        a / F(0)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(FIELDS), st.data())
def test_field_axioms(pk, data):
    F = fq_make(*pk)
    a, b, c = (data.draw(st.integers(0, F.q - 1)) for _ in range(3))
    assert F.add(a, b) == F.add(b, a)
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.add(a, F.neg(a)) == 0
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))


# -- polynomials ---------------------------------------------------------------------
polys = st.lists(st.integers(0, 4), max_size=7).map(tuple)


@settings(max_examples=80, deadline=None)
@given(polys, polys.filter(lambda b: any(b)))
def test_divmod_reconstructs(a, b):
    F = fq_make(5)
    a, b = P.strip(a), P.strip(b)
    q, r = P.divmod_(F, a, b)
    assert P.deg(r) < P.deg(b)
    assert P.add(F, P.mul(F, q, b), r) == a


@settings(max_examples=60, deadline=None)
@given(polys.filter(lambda a: any(a)), polys.filter(lambda b: any(b)))
def test_gcd_divides_both_and_is_bezout(a, b):
    F = fq_make(5)
    a, b = P.strip(a), P.strip(b)
    g, s, t = P.xgcd(F, a, b)
    assert P.mod(F, a, g) == () and P.mod(F, b, g) == ()
    assert P.add(F, P.mul(F, s, a), P.mul(F, t, b)) == g
    assert g == P.gcd(F, a, b)


def test_factor_x_p_minus_x():
    F = fq_make(5)
    f = P.sub(F, P.monomial(F, 1, 5), P.monomial(F, 1, 1))
    fs = P.factor(F, f)
    assert sorted(fs) == sorted(((c, 1), 1) for c in range(5))


def test_factor_with_multiplicity_and_irreducible_parts():
    F = fq_make(3)
    x2p1 = (1, 0, 1)  # irreducible over F_3
    f = P.mul(F, P.pow_(F, (1, 1), 3), x2p1)
    assert sorted(P.factor(F, f)) == sorted([((1, 1), 3), (x2p1, 1)])


# -- rational functions ------------------------------------------------------------------
def test_ratfunc_is_reduced_and_monic():
    F = fq_make(3)
    # (2x^2 - 2) / (2x - 2) = x + 1
    f = RatFunc(F, (1, 0, 2), (1, 2))
    assert f.den == (1,) and f.num == (1, 1)
    with pytest.raises(DivisionByZero):
        RatFunc(F, (1,), ())


def test_ratfunc_field_operations():
    F = fq_make(5)
    x = RatFunc.x(F)
    f = (x**2 + 1) / (x**3 - x)
    g = 1 / (x - 2)
    assert (f + g) - g == f
    assert (f * g) / g == f
    assert f * f.inv() == RatFunc.const(F, 1)


def test_valuations():
    F = fq_make(3)
    x = RatFunc.x(F)
    f = 1 / (x**3 - x)
    assert place_valuation(f, Place.finite(F, (0, 1))) == -1
    assert place_valuation(f, Place.infinity()) == 3
    assert place_valuation(x**2 * (x + 1), Place.finite(F, (1, 1))) == 1
    assert place_valuation(RatFunc.const(F, 0), Place.infinity()) is INF
    with pytest.raises(ValueError):
        Place.finite(F, (1, 0, 1, 1))  # x^3 + x^2 + 1 has the root 1 over F_3


def test_partial_fractions_of_artin_mumford_rhs():
    F = fq_make(3)
    x = RatFunc.x(F)
    f = 1 / (x**3 - x)
    pf = partial_fractions(f)
    assert pf.poly_part == ()
    assert len(pf.parts) == 3
    assert pf.recombine() == f


@settings(max_examples=40, deadline=None)
@given(polys, polys.filter(lambda b: P.deg(P.strip(b)) >= 1))
def test_partial_fractions_recombine(num, den):
    F = fq_make(5)
    f = RatFunc(F, num, den)
    assert partial_fractions(f).recombine() == f
