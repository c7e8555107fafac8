"""Acceptance suite: twelve exact criteria plus the runtime budget of `verify all`.

Each criterion prints one line ``criterion N: PASS|FAIL - detail``; the lines
are also collected and repeated in the pytest terminal summary.  Run as a
script (``python3 tests/test_acceptance.py``) to get only those lines.
"""

from __future__ import annotations

import subprocess
import sys
import time
import timeit

import pytest

from nakajima.as_tower import as_step_genus, identity_check, map_verify, parse_in_tower, tower_make, wp_image_test
from nakajima.catalog import extremality_grid, get_curve, run_scenario
from nakajima.counting import GroupProfile, aut_order_bruteforce, bh_bound, frbound_count, not_div_p_check
from nakajima.field_core import fq_make
from nakajima.pgroup import (
    census, closure, derived_subgroup, fingerprint, frattini_subgroup, is_isomorphic, maximal_subgroup_sets,
    reference_group,
)
from nakajima.pgroup.reference import abelian, cyclic, ut3
from nakajima.ramify import CoverData, ds_prank, extremal_check, hurwitz_genus

RESULTS: list[str] = []
VERIFY_ALL_BUDGET = 300.0


def one_var(p, text):
    return parse_in_tower(tower_make(fq_make(p), [], names=[]), text).base_value()


# -- criteria: each returns (ok, detail) ---------------------------------------------------
def c01_artin_mumford_cover():
    c = CoverData.from_dict({"p": 3, "order": 9, "gbar": 0, "gammabar": 0,
                             "orbits": [{"length": 3, "chain": [3, 3, 1]}] * 2})
    g, gamma = hurwitz_genus(c), ds_prank(c)
    best = min(timeit.repeat(lambda: (hurwitz_genus(c), ds_prank(c)), number=100, repeat=5)) / 100
    return g == gamma == 4 and best < 1e-3, f"g={g}, gamma={gamma}, {best * 1e6:.1f} us per call"


def c02_xc_group():
    t0 = time.perf_counter()
    spec = get_curve("x-c", {"p": 3})
    autos = spec.automorphisms(verify=False)
    verdicts = {k: bool(map_verify(s)) for k, s in autos.items()}
    S = closure([autos["g"], autos["h"]])
    iso = is_isomorphic(S, ut3(3))
    dt = time.perf_counter() - t0
    ok = all(verdicts.values()) and S.n == 27 and iso and fingerprint(S).exponent == 3 and dt < 10
    return ok, f"maps {verdicts}, |<g,h>|={S.n}, iso UT(3,3)={iso}, {dt:.2f} s"


def c03_xc_relations():
    bad = []
    for p in (3, 5):
        spec = get_curve("x-c", {"p": p})
        g, h, r, t = (spec.automorphisms()[k] for k in "ghrt")
        w = spec.params["omega"]
        ti = t.inverse()
        rels = {"rgr=h^-1": r * g * r == h.inverse(), "rhr=g^-1": r * h * r == g.inverse(),
                "t^-1gt=g^(w^-1)": ti * g * t == g ** pow(w, -1, p), "t^-1ht=h^w": ti * h * t == h**w}
        bad += [f"p={p}: {k}" for k, v in rels.items() if not v]
    return not bad, "all four relations hold for p=3, 5" if not bad else f"failing: {bad}"


def c04_unramifiedness_identities():
    bad, printed = [], []
    for p in (3, 5):
        T = get_curve("artin-mumford", {"p": p}).tower()
        x, y = T.x(), T.gen(0)
        u = x * y**p - x**p * y
        for i in range(1, p):
            target = x**p * (i - y) - x * (i - y) ** p
            prod = x * (i - y)
            for a in range(1, p):
                prod = prod * (x - a * (i - y))
            if not (identity_check(u - ((-i * x) ** p + i * x), target) and identity_check(target, prod)):
                bad.append((p, i))
            if not identity_check(u - ((i * x) ** p - i * x), target):
                printed.append((p, i))
    detail = "identity with t_i = -i x and its factorization hold for all i"
    if printed:
        detail += f"; the printed t_i = i x fails for (p, i) in {printed} (reported as a discrepancy)"
    return not bad, detail if not bad else f"failing (p, i): {bad}"


def c05_wp_exclusion():
    T = get_curve("artin-mumford", {"p": 3}).tower()
    x, y = T.x(), T.gen(0)
    u = x * y**3 - x**3 * y
    basis = [T.one(), x, y, x * y]
    small = wp_image_test(u, basis, 1)
    full = wp_image_test(u, basis, 3)
    return (small, full) == (False, False), f"F_3 search: {small}, exhaustive F_27 search (27^4): {full}"


def c06_extremality_grid():
    grid = extremality_grid()
    hits = [t for t in grid if extremal_check(*t)]
    want = [(3, 9, 4), (3, 27, 10), (3, 81, 28), (3, 243, 82), (3, 729, 244), (5, 125, 76)]
    return len(grid) == 200 and hits == want, f"{len(grid)} triples, extremal: {hits}"


def c07_counting():
    got = {}
    for name, G, gamma in (("C3xC3", abelian(3, 3), 2), ("UT(3,3)", ut3(3), 2), ("C3", cyclic(3), 2)):
        got[name] = frbound_count(GroupProfile.of(G, name), gamma)
    ok = got == {"C3xC3": 1, "UT(3,3)": 1, "C3": 4} and all(not_div_p_check(n, 3) for n in got.values())
    return ok, f"counts {got}, none divisible by 3"


def c08_burnside_hall():
    alphas = {"C3xC3": aut_order_bruteforce(abelian(3, 3)), "UT(3,3)": aut_order_bruteforce(ut3(3)),
              "C9": aut_order_bruteforce(cyclic(9))}
    divides = (bh_bound(3, 2, 2) % alphas["C3xC3"] == 0 and bh_bound(3, 3, 2) % alphas["UT(3,3)"] == 0
               and bh_bound(3, 2, 1) % alphas["C9"] == 0)
    printed = 2**9 * 3**5 * 5 * 11
    step = next(s for s in run_scenario("S4-families").steps if s.name.startswith("printed |Aut(Phi(S))|"))
    ok = (alphas == {"C3xC3": 48, "UT(3,3)": 432, "C9": 6} and divides and bh_bound(3, 4, 4) == 24261120
          and printed == 6842880 and step.status == "discrepancy")
    return ok, f"alpha {alphas}, bh(3,4,4)={bh_bound(3, 4, 4)}, printed {printed} reported as {step.status}"


def c09_group_structure():
    out = []
    ok = True
    xc = get_curve("x-c", {"p": 3}).automorphisms()
    g28 = get_curve("genus28").automorphisms()
    groups = {"<g,h> (order 27)": closure([xc["g"], xc["h"]]),
              "<g1..g5> (order 81)": closure([g28[k] for k in ("g1", "g2", "g3", "g4", "g5")])}
    for label, G in groups.items():
        fp = fingerprint(G)
        phi = set(frattini_subgroup(G).tolist())
        rules = {
            "Phi=G'": phi == set(derived_subgroup(G).tolist()),
            "[G:Phi]=9": G.n // len(phi) == 9,
            "4 maximal": len(maximal_subgroup_sets(G)) == 4,
            "d=2": fp.d == 2,
            "exponent": fp.exponent == 3 if G.n <= 27 else fp.exponent in (3, 9),
        }
        ok &= all(rules.values())
        out.append(f"{label}: " + ", ".join(k for k, v in rules.items() if v)
                   + ("" if all(rules.values()) else f" FAILED {[k for k, v in rules.items() if not v]}"))
    return ok, "; ".join(out)


def c10_census():
    c9 = census(reference_group("S(81,9)"))
    cw = census(reference_group("C3wrC3"))
    return c9.get(3) == 62 and cw == {1: 1, 3: 44, 9: 36}, f"S(81,9): {c9}, C3 wr C3: {cw}"


def c11_genus28():
    rep = run_scenario("S3-genus28")
    built = next(s for s in rep.steps if s.name.startswith("tower builds"))
    maps = [s for s in rep.steps if s.name.startswith("map ") and "as printed" in s.name]
    order = next(s for s in rep.steps if s.name == "order of <g1, ..., g5>")
    maps_ok = all(s.status == "pass" or s.note for s in maps)
    ok = built.status == "pass" and maps_ok and order.status in ("pass", "discrepancy") and not rep.failed
    return ok, (f"tower built, {sum(s.status == 'pass' for s in maps)}/{len(maps)} maps verified, "
                f"closure order {order.actual} vs printed {order.expected} ({order.status})")


def c12_one_step_genus():
    got = {f"x+1/x, p={p}": as_step_genus(one_var(p, "x + 1/x"), p) for p in (3, 5, 7)}
    got.update({f"1/(x^p-x), p={p}": as_step_genus(one_var(p, f"1/(x^{p}-x)"), p) for p in (3, 5)})
    want = {"x+1/x, p=3": 2, "x+1/x, p=5": 4, "x+1/x, p=7": 6, "1/(x^p-x), p=3": 4, "1/(x^p-x), p=5": 16}
    return got == want, f"{got}"


def c13_verify_all_runtime():
    t0 = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "nakajima.cli", "verify", "all"], capture_output=True, text=True,
                          timeout=VERIFY_ALL_BUDGET + 60)
    dt = time.perf_counter() - t0
    return proc.returncode == 0 and dt < VERIFY_ALL_BUDGET, f"exit {proc.returncode} in {dt:.1f} s"


CRITERIA = [
    ("1", "Artin-Mumford genus and p-rank from cover data", c01_artin_mumford_cover),
    ("2", "X_c maps and <g, h> = UT(3,3)", c02_xc_group),
    ("3", "X_c relation suite, p = 3, 5", c03_xc_relations),
    ("4", "unramifiedness identities", c04_unramifiedness_identities),
    ("5", "wp-image exclusion", c05_wp_exclusion),
    ("6", "extremality grid", c06_extremality_grid),
    ("7", "unramified extension counts", c07_counting),
    ("8", "automorphism orders and the Burnside-Hall bound", c08_burnside_hall),
    ("9", "structure of the groups of order 27 and 81", c09_group_structure),
    ("10", "element-order censuses", c10_census),
    ("11", "genus-28 scenario", c11_genus28),
    ("12", "one-step Artin-Schreier genus", c12_one_step_genus),
    ("13", "verify all within 5 minutes", c13_verify_all_runtime),
]


def _evaluate(num, title, fn):
    try:
        ok, detail = fn()
    except Exception as e:  # noqa: BLE001 - a crash is a failed criterion
        ok, detail = False, f"{type(e).__name__}: {e}"
    label = f"criterion {num}" if num != "13" else "runtime"
    line = f"{label}: {'PASS' if ok else 'FAIL'} - {title}: {detail}"
    print(line)
    RESULTS.append(line)
    return ok, detail


@pytest.mark.parametrize("num,title,fn", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(num, title, fn):
    ok, detail = _evaluate(num, title, fn)
    assert ok, detail


if __name__ == "__main__":
    results = [_evaluate(*c)[0] for c in CRITERIA]
    sys.exit(0 if all(results) else 1)
