from __future__ import annotations

import json
from fractions import Fraction

import pytest

from nakajima.errors import GenusTooSmall, NonIntegralGenus, NonsensePRank
from nakajima.ramify import (
    CoverData, OrbitDatum, bounds, classify_princ, cover_consistency, different_exponent, ds_prank,
    extremal_check, fmt, hurwitz_genus,
)


def two_orbit_cover(p, order):
    o = {"length": order // p, "chain": [p, p, 1]}
    return CoverData(p, order, 0, 0, [o, dict(o)])


def test_orbit_datum_validation():
    assert different_exponent(OrbitDatum(3, (3, 3, 1))) == 4
    with pytest.raises(ValueError):
        OrbitDatum(3, (3, 3))
    with pytest.raises(ValueError):
        OrbitDatum(3, (3, 9, 1))
    with pytest.raises(ValueError):
        OrbitDatum(0, (1,))


def test_cover_data_validation():
    with pytest.raises(ValueError):
        CoverData(3, 12, 0, 0, [])
    with pytest.raises(ValueError):
        CoverData(3, 9, 0, 1, [])
    with pytest.raises(ValueError):
        CoverData(3, 9, 0, 0, [{"length": 2, "chain": [3, 3, 1]}])
    with pytest.raises(ValueError):
        # inertia group and first ramification group differ
        CoverData(3, 9, 0, 0, [{"length": 3, "chain": [3, 1]}])
    with pytest.raises(ValueError):
        CoverData.from_dict({"p": 3, "order": 9})


def test_cover_data_round_trip(tmp_path):
    c = two_orbit_cover(3, 27)
    f = tmp_path / "c.json"
    f.write_text(json.dumps(c.to_dict()))
    assert CoverData.load(f) == c


@pytest.mark.parametrize("p,order,g", [(3, 9, 4), (5, 25, 16), (3, 27, 10), (5, 125, 76), (3, 81, 28)])
def test_two_short_orbits_give_ordinary_curves(p, order, g):
    c = two_orbit_cover(p, order)
    assert hurwitz_genus(c) == g
    assert ds_prank(c) == g


def test_unramified_cover():
    # an unramified C3 cover of a genus 2 curve of p-rank 1
    c = CoverData(3, 3, 2, 1, [])
    assert hurwitz_genus(c) == 4
    assert ds_prank(c) == 1


def test_formula_errors():
    # with odd p every |S_i| - 1 is even, so only non-p-group data can give an odd 2g - 2
    with pytest.raises(NonIntegralGenus):
        hurwitz_genus(CoverData(3, 2, 0, 0, [OrbitDatum(1, (2, 1))], pgroup=False))
    with pytest.raises(NonsensePRank):
        ds_prank(CoverData(3, 9, 0, 0, []))


def test_bounds_values():
    b = bounds(3, 10, 10)
    assert (b.stichtenoth, b.nakajima, b.hyp_threshold) == (15, 27, Fraction(81, 5))
    assert b.as_dict()["hyp_threshold"] == "81/5"
    assert bounds(3, 10, 0).nakajima is None
    assert bounds(3, 5, 1).nakajima == 4
    b = bounds(3, 10, 5)
    assert (b.nakajima, b.nakajima_genus_form) == (12, 27)
    with pytest.raises(GenusTooSmall):
        bounds(3, 1, 1)
    with pytest.raises(ValueError):
        bounds(3, 4, 5)
    assert fmt(Fraction(6, 3)) == 2 and fmt(Fraction(1, 2)) == "1/2"


def test_extremality():
    assert extremal_check(3, 9, 4)
    assert extremal_check(5, 125, 76)
    assert not extremal_check(3, 9, 5)
    with pytest.raises(ValueError):
        extremal_check(3, 3, 2)
    with pytest.raises(ValueError):
        extremal_check(3, 18, 7)


def test_classification_cases():
    assert classify_princ(3, 9, 4, 4, False) == "iii"
    assert classify_princ(3, 3, 2, 2, True) == "ii"
    assert classify_princ(3, 27, 10, 0, False) == "i"
    assert classify_princ(3, 27, 30, 30, False) == "hypothesis-fails"
    assert classify_princ(3, 27, 11, 11, False) == "contradiction"
    with pytest.raises(GenusTooSmall):
        classify_princ(3, 9, 1, 1, False)


def test_consistency_of_quotients():
    c = two_orbit_cover(3, 27)
    rep = cover_consistency(c, 10, 10, [
        {"name": "M1", "order": 9, "contains": [0], "expected": (0, 0)},
        {"name": "M3", "order": 9, "semiregular": True, "expected": (2, 2)},
    ])
    assert rep.ok, rep.mismatches
    assert [q["gbar"] for q in rep.quotients] == [0, 2]


def test_consistency_reports_mismatches():
    c = two_orbit_cover(3, 27)
    rep = cover_consistency(c, 11, 10, [{"name": "M", "order": 9, "semiregular": True, "expected": (1, 1)}])
    assert not rep.ok
    assert len(rep.mismatches) == 2
    rep = cover_consistency(c, subgroups=[{"name": "bad", "order": 27, "contains": [0]}])
    assert any("not an integer" in m for m in rep.mismatches)
