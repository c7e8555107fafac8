from __future__ import annotations

import pytest

from nakajima.as_tower import (
    FieldAuto, as_reduce, as_step_genus, elem_inv, identity_check, map_verify, parse_in_tower,
    ramification_data, tower_make, wp_image_solve, wp_image_test,
)
from nakajima.errors import (
    EverywhereUnramifiedInput, ExpressionError, NonTriangularRelation, SearchSpaceTooLarge, TowerMismatch,
    ZeroInput, ZeroRelation,
)
from nakajima.field_core import Place, RatFunc, fq_make


def am_tower(p=3, c=1):
    return tower_make(fq_make(p), [f"{c}/(x^{p}-x)"], names=["y"])


def xc_tower(p=3):
    return tower_make(fq_make(p), [f"1/(x^{p}-x)", f"x*y^{p}-x^{p}*y"], names=["y", "z"])


def one_var(p, text, k=1):
    return parse_in_tower(tower_make(fq_make(p, k), [], names=[]), text).base_value()


# -- towers ------------------------------------------------------------------------------
def test_normal_form_uses_the_relation():
    T = am_tower()
    x, y = T.x(), T.gen(0)
    assert y**3 == y + 1 / (x**3 - x)
    assert (y**3 - y) * (x**3 - x) == T.one()
    assert T.degree == 3


def test_generators_by_name_and_alias():
    T = xc_tower()
    assert parse_in_tower(T, "t1 + t2") == parse_in_tower(T, "y + z")


def test_relation_errors():
    F = fq_make(3)
    with pytest.raises(ZeroRelation):
        tower_make(F, ["x - x"])
    with pytest.raises(NonTriangularRelation):
        tower_make(F, ["t2", "x"])
    with pytest.raises(ExpressionError):
        tower_make(F, ["x +* 1"])
    with pytest.raises(ValueError):
        tower_make(F, ["x"], names=["y", "z"])


def test_params_resolve_named_constants():
    T = tower_make(fq_make(5), ["c/(x^5-x)"], names=["y"], params={"c": 2})
    x = T.x()
    assert T.phis[0] == 2 / (x**5 - x)


def test_inverse_in_two_step_tower():
    T = xc_tower()
    x, y, z = T.x(), T.gen(0), T.gen(1)
    for a in (y, z, y + z, x * z + y**2 + 1, z**2 - x * y):
        inv = elem_inv(a)
        assert a * inv == T.one()
        assert a / a == T.one()


def test_elements_of_different_towers_do_not_mix():
    with pytest.raises(TowerMismatch):
        map_verify(FieldAuto(am_tower(), am_tower().x(), [xc_tower().gen(0)]))


# -- one-step genus ------------------------------------------------------------------------
@pytest.mark.parametrize("p", [3, 5, 7])
def test_genus_of_x_plus_one_over_x(p):
    assert as_step_genus(one_var(p, "x + 1/x"), p) == p - 1


@pytest.mark.parametrize("p", [3, 5])
def test_genus_of_artin_mumford_step(p):
    assert as_step_genus(one_var(p, f"1/(x^{p}-x)"), p) == (p - 1) ** 2
    assert as_step_genus(one_var(p, f"2/(x^{p}-x)"), p) == (p - 1) ** 2


def test_genus_of_polynomial_steps():
    # y^p - y = f(x) with deg f = m prime to p has genus (p-1)(m-1)/2
    assert as_step_genus(one_var(3, "x^2")) == 1
    assert as_step_genus(one_var(5, "x^3")) == 4
    assert as_step_genus(one_var(3, "x^4")) == 3
    # x^3 = x + (x^3 - x): the pole at infinity reduces to order 1
    assert as_step_genus(one_var(3, "x^3")) == 0


def test_genus_is_unchanged_by_constant_field_extension():
    assert as_step_genus(one_var(3, "1/(x^3-x)", k=2)) == 4
    assert as_step_genus(one_var(3, "x + 1/(x^2+1)")) == as_step_genus(one_var(3, "x + 1/(x^2+1)", k=2))


def test_genus_with_a_degree_two_place():
    # poles at infinity (order 1) and at x^2 + 1 (order 1, degree 2): 2g - 2 = -6 + 4 + 8
    assert as_step_genus(one_var(3, "x + 1/(x^2+1)")) == 4


def test_genus_errors():
    F = fq_make(3)
    with pytest.raises(ZeroInput):
        as_step_genus(RatFunc.const(F, 0))
    with pytest.raises(EverywhereUnramifiedInput):
        as_step_genus(RatFunc.const(F, 1))
    with pytest.raises(EverywhereUnramifiedInput):
        as_step_genus(one_var(3, "x^3 - x"))
    with pytest.raises(ValueError):
        as_step_genus(one_var(3, "x"), 5)


def test_as_reduce_removes_pth_power_poles():
    F = fq_make(3)
    phi = one_var(3, "x^6 + x^2")
    m, w = as_reduce(phi, Place.infinity())
    assert m == 2
    assert w == RatFunc.x(F) ** 2
    phi = one_var(3, "1/x^3 + 1/x")
    m, w = as_reduce(phi, Place.finite(F, (0, 1)))
    # 1/x^3 = (1/x)^3 - 1/x + 1/x, so only a simple pole remains
    assert m == 1
    assert dict((pl.kind, mm) for pl, mm in ramification_data(phi)) == {"finite": 1}


# -- maps ----------------------------------------------------------------------------------
def test_map_verify_accepts_translations_and_rejects_bad_maps():
    T = am_tower()
    assert map_verify(FieldAuto.from_strings(T, "x+1", ["y"])).order == 3
    assert map_verify(FieldAuto.from_strings(T, "x", ["y+2"])).ok
    bad = map_verify(FieldAuto.from_strings(T, "x+1", ["y+x"]))
    assert not bad and "relation for y" in bad.reason
    assert not map_verify(FieldAuto.from_strings(T, "1", ["y"]))


def test_product_applies_left_factor_first_on_points():
    T = xc_tower()
    g = FieldAuto.from_strings(T, "x+1", ["y", "z+y"])
    r = FieldAuto.from_strings(T, "y", ["x", "-z"])
    a = parse_in_tower(T, "x*z + y^2")
    # the product acts on functions by a -> r(g(a))
    assert (g * r)(a) == r(g(a))
    assert g * r != r * g


def test_inverse_and_powers():
    T = xc_tower()
    h = FieldAuto.from_strings(T, "x", ["y-1", "z+x"])
    assert map_verify(h)
    assert h * h.inverse() == FieldAuto.identity(T)
    assert h**3 == FieldAuto.identity(T)
    assert h**-1 == h**2


def test_identity_check():
    T = am_tower()
    x, y = T.x(), T.gen(0)
    assert identity_check((x + y) ** 3, x**3 + y**3)
    assert not identity_check((x + y) ** 2, x**2 + y**2)


# -- wp image ------------------------------------------------------------------------------
def test_wp_image_finds_a_genuine_image():
    T = am_tower()
    x, y = T.x(), T.gen(0)
    w = x * y + 2 * y
    u = w**3 - w
    basis = [T.one(), x, y, x * y]
    assert wp_image_test(u, basis, 1)
    sol = wp_image_solve(u, basis, 1)
    assert sol is not None
    cand = sum((c * b for c, b in zip(sol, basis)), T.zero())
    assert cand**3 - cand == u


def test_wp_image_rejects_xy3_minus_x3y():
    T = am_tower()
    x, y = T.x(), T.gen(0)
    u = x * y**3 - x**3 * y
    assert not wp_image_test(u, [T.one(), x, y, x * y], 1)
    assert wp_image_solve(u, [T.one(), x, y, x * y], 3) is None


def test_wp_search_limit():
    T = am_tower()
    basis = [T.x() ** i for i in range(12)]
    with pytest.raises(SearchSpaceTooLarge):
        wp_image_test(T.gen(0), basis, 3)
