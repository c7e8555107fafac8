from __future__ import annotations

import json

import jsonschema
import pytest

from nakajima.catalog import (
    CURVE_NAMES, REPORT_SCHEMA, SCENARIOS, Report, Step, extremality_grid, get_curve, least_primitive_root,
    run_scenario,
)
from nakajima.catalog.report import jsonable
from nakajima.errors import BadParameter, UnknownCurve, UnknownScenario
from fractions import Fraction


@pytest.fixture(scope="module")
def reports():
    return {name: run_scenario(name) for name in SCENARIOS}


def test_least_primitive_root():
    assert [least_primitive_root(p) for p in (3, 5, 7, 11, 13)] == [2, 2, 3, 2, 2]


@pytest.mark.parametrize("name", CURVE_NAMES)
def test_every_catalog_map_is_an_automorphism(name):
    spec = get_curve(name)
    autos = spec.automorphisms(verify=True)
    assert set(autos) == set(spec.maps)
    assert spec.expected["genus"] >= 2


def test_curve_parameters_are_validated():
    with pytest.raises(UnknownCurve):
        get_curve("fermat")
    with pytest.raises(BadParameter):
        get_curve("x-c", {"p": 9})
    with pytest.raises(BadParameter):
        get_curve("artin-mumford", {"c": 3})
    with pytest.raises(BadParameter):
        get_curve("artin-mumford", {"p": 7, "omega": 2})  # 2 has order 3 mod 7
    with pytest.raises(BadParameter):
        get_curve("genus28", {"p": 5})
    with pytest.raises(BadParameter):
        get_curve("base-a", {"a": "x"})


def test_curve_override(tmp_path, monkeypatch):
    spec = get_curve("base-a", {"p": 5}).as_dict()
    spec["expected"]["genus"] = 99
    (tmp_path / "base-a.json").write_text(json.dumps(spec))
    monkeypatch.setenv("NAKAJIMA_CATALOG", str(tmp_path))
    over = get_curve("base-a")
    assert over.source == "override" and over.p == 5 and over.expected["genus"] == 99
    assert "sigma" in over.automorphisms()


def test_report_json_is_exact():
    assert jsonable(Fraction(81, 5)) == "81/5"
    assert jsonable({1: (2, 3)}) == {"1": [2, 3]}
    with pytest.raises(TypeError):
        jsonable(0.5)
    with pytest.raises(ValueError):
        Step("a", "b", 1, 1, "folklore", "pass")
    rep = Report("demo")
    assert rep.check("ok", "x", 1, 1) and not rep.check("bad", "x", 1, 2)
    assert not rep.compare("printed", "x", 3, 4)
    rep.run("boom", "x", 1, lambda: 1 // 0)
    assert [s.status for s in rep.steps] == ["pass", "fail", "discrepancy", "fail"]
    assert "ZeroDivisionError" in rep.steps[-1].actual
    assert rep.failed


def test_unknown_scenario():
    with pytest.raises(UnknownScenario):
        run_scenario("S9")


def test_extremality_grid_shape():
    grid = extremality_grid()
    assert len(grid) == len(set(grid)) == 200


@pytest.mark.parametrize("name", list(SCENARIOS))
def test_scenario_has_no_failures_and_valid_json(reports, name):
    rep = reports[name]
    assert not rep.failed, [s.as_dict() for s in rep.steps if s.status == "fail"]
    d = json.loads(rep.to_json())
    jsonschema.validate(d, REPORT_SCHEMA)
    assert d["scenario"] == name


def _step(rep, prefix):
    return next(s for s in rep.steps if s.name.startswith(prefix))


def test_recorded_discrepancies(reports):
    s2 = reports["S2-xc-p3"]
    assert _step(s2, "i=1: u - (t^p - t) = x^p(i-y) - x(i-y)^p with t = i x").status == "discrepancy"
    assert _step(s2, "i=1: u - (t^p - t) = x^p(i-y) - x(i-y)^p with t = -i x").status == "pass"
    s3 = reports["S3-genus28"]
    assert any(s.status == "discrepancy" for s in s3.steps)
    s4 = reports["S4-families"]
    st = _step(s4, "printed |Aut(Phi(S))|")
    assert (st.expected, st.actual, st.status) == (6842880, 24261120, "discrepancy")
    s6 = reports["S6-groups"]
    st = _step(s6, "quotient by the center")
    assert (st.expected, st.actual, st.status) == ("S(81,10)", "S(81,9)", "discrepancy")


def test_scenarios_are_deterministic():
    assert run_scenario("S5-bounds").to_json() == run_scenario("S5-bounds").to_json()
