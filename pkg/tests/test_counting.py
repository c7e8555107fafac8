from __future__ import annotations

import pytest

from nakajima.counting import (
    GroupProfile, aut_order_bruteforce, bh_bound, family_cover, family_genus, frbound_count, gl2_zmod_order,
    gl_order, gl_order_bruteforce, not_div_p_check, sylow_bh_bound,
)
from nakajima.errors import NonIntegralCount, OrderTooLarge
from nakajima.pgroup import reference_group
from nakajima.pgroup.reference import abelian, cyclic, ut3
from nakajima.ramify import ds_prank, hurwitz_genus

# |Aut(G)| from independent closed forms: GL(d, p) for elementary abelian groups,
# (p-1)p^(k-1) for cyclic groups, |GL(2, Z/p^2)| for C9 x C9, and the
# automorphism group of the Heisenberg group, of order p^2 |GL(2, p)|.
KNOWN_AUT = {
    "C3xC3": 48, "UT(3,3)": 432, "C9": 6, "C27": 18, "C3xC3xC3": 11232, "C9xC9": 3888, "C3^4": 24261120,
}
# from the search itself, each divisible into the bound
SEARCHED_AUT = {"C9xC3": 108, "C9:C3": 54, "S(81,7)": 324, "S(81,8)": 324, "S(81,9)": 972, "S(81,10)": 486}


def test_closed_forms_agree_with_enumeration():
    assert gl_order(2, 3) == gl_order_bruteforce(2, 3) == 48
    assert gl_order(2, 5) == 480
    assert gl_order(4, 3) == 24261120
    assert gl2_zmod_order(3, 2) == 3888
    assert KNOWN_AUT["UT(3,3)"] == 9 * gl_order(2, 3)


@pytest.mark.parametrize("name", sorted(KNOWN_AUT))
def test_aut_order_matches_closed_forms(name):
    assert aut_order_bruteforce(reference_group(name)) == KNOWN_AUT[name]


@pytest.mark.parametrize("name", sorted(SEARCHED_AUT))
def test_aut_order_divides_bound(name):
    G = reference_group(name)
    a = aut_order_bruteforce(G)
    assert a == SEARCHED_AUT[name]
    prof = GroupProfile.of(G, brute_force=False)
    assert bh_bound(prof.p, prof.n, prof.d) % a == 0


def test_aut_order_limit():
    with pytest.raises(OrderTooLarge):
        aut_order_bruteforce(reference_group("(C9xC9):C3"))


def test_bounds_and_p_parts():
    assert bh_bound(3, 4, 4) == 24261120
    assert bh_bound(3, 3, 2) == 432
    assert bh_bound(3, 2, 1) == 6
    assert sylow_bh_bound(3, 4, 4) == 3**6
    with pytest.raises(ValueError):
        bh_bound(3, 2, 3)
    with pytest.raises(ValueError):
        sylow_bh_bound(3, 1, 0)


def test_profile_of_group():
    prof = GroupProfile.of(ut3(3), "UT(3,3)")
    assert (prof.p, prof.n, prof.d, prof.alpha) == (3, 3, 2, 432)
    with pytest.raises(ValueError):
        GroupProfile(3, 2, 3)


def test_frobenius_counts():
    assert frbound_count(GroupProfile.of(abelian(3, 3)), 2) == 1
    assert frbound_count(GroupProfile.of(ut3(3)), 2) == 1
    assert frbound_count(GroupProfile.of(cyclic(3)), 2) == 4
    # more generators than the p-rank allows
    assert frbound_count(GroupProfile(3, 3, 3, 11232), 2) == 0
    with pytest.raises(ValueError):
        frbound_count(GroupProfile(3, 2, 2), 2)
    with pytest.raises(NonIntegralCount):
        frbound_count(GroupProfile(3, 2, 2, 7), 2)


def test_not_divisible_by_p():
    assert not_div_p_check(4, 3)
    assert not not_div_p_check(9, 3)
    with pytest.raises(ValueError):
        not_div_p_check(0, 3)


@pytest.mark.parametrize("p,N,family,g", [
    (3, 1, "base-curve", 10), (3, 2, "base-curve", 82), (3, 1, "artin-mumford", 244),
    (5, 1, "base-curve", 1876), (3, 2, "artin-mumford", 19684),
])
def test_family_genera(p, N, family, g):
    assert family_genus(p, N, family) == g
    c = family_cover(p, N, family)
    assert hurwitz_genus(c) == ds_prank(c) == g


def test_family_errors():
    with pytest.raises(ValueError):
        family_genus(3, 0, "base-curve")
    with pytest.raises(ValueError):
        family_genus(3, 1, "elliptic")
