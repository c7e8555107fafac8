"""Built-in curves: tower relations, automorphism maps and expected invariants.

Every entry is a plain dict so it can be overridden by a JSON file of the same
shape in the directory named by ``NAKAJIMA_CATALOG`` (``<name>.json``).
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

from ..as_tower import FieldAuto, TowerField, map_verify, tower_make
from ..errors import BadParameter, UnknownCurve
from ..field_core.gf import fq_make, is_prime, prime_factors
from ..ramify import CoverData

CURVE_NAMES = ("artin-mumford", "x-c", "base-a", "eqago1", "genus28", "s27-tower")


def least_primitive_root(p: int) -> int:
    if p == 2:
        return 1
    fs = prime_factors(p - 1)
    for w in range(2, p):
        if all(pow(w, (p - 1) // r, p) != 1 for r in fs):
            return w
    raise ValueError(f"no primitive root mod {p}")


@dataclass
class CurveSpec:
    name: str
    p: int
    k: int
    params: dict
    names: list[str]
    relations: list[str]
    maps: dict = field(default_factory=dict)      # name -> (image_x, [image_t...])
    expected: dict = field(default_factory=dict)
    var: str = "x"
    source: str = "built-in"

    def tower(self) -> TowerField:
        return _build_tower(self.p, self.k, tuple(self.relations), tuple(self.names),
                            tuple(sorted(self.params.items())), self.var)

    def automorphisms(self, verify: bool = True) -> dict[str, FieldAuto]:
        T = self.tower()
        out = {}
        for name, (ix, its) in self.maps.items():
            sigma = FieldAuto.from_strings(T, ix, list(its), params=self.params, name=name)
            if verify:
                map_verify(sigma)
            out[name] = sigma
        return out

    def cover_data(self) -> CoverData | None:
        cd = self.expected.get("cover")
        return CoverData.from_dict(cd) if cd else None

    def as_dict(self) -> dict:
        return {"name": self.name, "p": self.p, "k": self.k, "params": self.params,
                "names": self.names, "var": self.var, "relations": self.relations,
                "maps": [{"name": n, "image_x": ix, "image_t": list(its)} for n, (ix, its) in self.maps.items()],
                "expected": self.expected}


@lru_cache(maxsize=32)
def _build_tower(p, k, relations, names, params, var):
    return tower_make(fq_make(p, k), list(relations), names=list(names), params=dict(params), var=var)


def _nakajima_cover(p: int, order: int) -> dict:
    # two short orbits of length |S|/p, stabilizers of order p, second
    # ramification groups trivial
    orbit = {"length": order // p, "chain": [p, p, 1]}
    return {"p": p, "order": order, "gbar": 0, "gammabar": 0, "orbits": [orbit, dict(orbit)]}


# -- definitions -----------------------------------------------------------------------
def _artin_mumford(p: int, c: int, omega: int) -> dict:
    g = (p - 1) ** 2
    return {
        "p": p, "params": {"c": c, "omega": omega}, "names": ["y"],
        "relations": [f"c/(x^{p}-x)"],
        "maps": {"alpha": ("x+1", ["y"]), "beta": ("x", ["y+1"]),
                 "r": ("y", ["x"]), "t": ("omega*x", ["omega^-1*y"])},
        "expected": {"genus": g, "prank": g, "group_order": p * p, "group_label": f"C{p}xC{p}",
                     "group_generators": ["alpha", "beta"], "fixes_point": False,
                     "full_group_order": 2 * (p - 1) * p * p, "cover": _nakajima_cover(p, p * p)},
    }


def _x_c(p: int, c: int, omega: int) -> dict:
    g = (p - 2) * p * p + 1
    return {
        "p": p, "params": {"c": c, "omega": omega}, "names": ["y", "z"],
        "relations": [f"c/(x^{p}-x)", f"x*y^{p}-x^{p}*y"],
        "maps": {"g": ("x+1", ["y", "z+y"]), "h": ("x", ["y-1", "z+x"]),
                 "r": ("y", ["x", "-z"]), "t": ("omega*x", ["omega^-1*y", "z"])},
        "expected": {"genus": g, "prank": g, "group_order": p**3, "group_label": f"UT(3,{p})",
                     "group_generators": ["g", "h"], "fixes_point": False,
                     "full_group_order": 2 * (p - 1) * p**3, "cover": _nakajima_cover(p, p**3),
                     "semiregular_subgroups": p - 1},
    }


def _base_a(p: int, a: int) -> dict:
    return {
        "p": p, "params": {"a": a}, "names": ["y"],
        "relations": ["a*x + 1/x"],
        "maps": {"sigma": ("x", ["y+1"])},
        "expected": {"genus": p - 1, "prank": p - 1, "group_order": p, "group_label": f"C{p}",
                     "group_generators": ["sigma"], "fixes_point": True,
                     # totally ramified at x = 0 and x = oo, first jump 1
                     "cover": {"p": p, "order": p, "gbar": 0, "gammabar": 0,
                               "orbits": [{"length": 1, "chain": [p, p, 1]}] * 2}},
    }


def _eqago1() -> dict:
    d = _base_a(3, -1)
    d["params"] = {}
    d["relations"] = ["-x + 1/x"]
    d["expected"]["group_label"] = "C3"
    return d


def _genus28() -> dict:
    return {
        "p": 3, "params": {}, "names": ["y", "u", "w", "s"],
        "relations": ["x + 1/x", "x", "1/(u-y)", "1/(u-y-1)"],
        # g2 is printed identically to g1
        "maps": {"g1": ("x", ["y+1", "u", "s", "u-w-s"]), "g2": ("x", ["y+1", "u", "s", "u-w-s"]),
                 "g3": ("x", ["y+1", "u+1", "w", "s"]), "g4": ("x", ["y", "u", "w+1", "s"]),
                 "g5": ("x", ["y", "u", "w", "s+1"])},
        "expected": {"genus": 28, "prank": 28, "group_order": 81, "group_label": "S(81,7)",
                     "group_generators": ["g1", "g2", "g3", "g4", "g5"], "fixes_point": False,
                     "cover": _nakajima_cover(3, 81)},
    }


def _s27_tower(c: int) -> dict:
    return {
        "p": 3, "params": {"c": c}, "names": ["v", "y", "z"], "var": "u",
        "relations": ["c/u - u", "u", "(u + v^2 - v^3)/(v^3 + 1)"],
        "maps": {},
        "expected": {"genus": 10, "prank": 10, "group_order": 27, "group_label": "UT(3,3)",
                     "fixes_point": False, "cover": _nakajima_cover(3, 27),
                     # K(u, v) has genus 2; the two further steps are unramified
                     "base_genus": 2},
    }


def _param(params: dict, key: str, default) -> int:
    v = params.get(key, default)
    try:
        v = int(v)
    except (TypeError, ValueError):
        raise BadParameter(f"parameter {key} must be an integer, got {v!r}") from None
    return v


def get_curve(name: str, params: dict | None = None) -> CurveSpec:
    """Instantiate a catalog curve; parameters default to p=3, c=1, a=1, omega = least primitive root."""
    params = dict(params or {})
    override = _override(name)
    if override is not None:
        return _from_dict(name, override, params, source="override")
    if name not in CURVE_NAMES:
        raise UnknownCurve(f"unknown curve {name!r}; known: {', '.join(CURVE_NAMES)}")
    p = _param(params, "p", 3)
    if name in ("eqago1", "genus28", "s27-tower") and p != 3:
        raise BadParameter(f"{name} is defined in characteristic 3 only")
    if not is_prime(p) or p == 2:
        raise BadParameter(f"p must be an odd prime, got {p}")
    c = _param(params, "c", 1) % p
    a = _param(params, "a", 1) % p
    omega = _param(params, "omega", least_primitive_root(p)) % p
    if "c" in params and c == 0:
        raise BadParameter("c must be non-zero")
    if "a" in params and a == 0:
        raise BadParameter("a must be non-zero")
    if omega == 0 or any(pow(omega, (p - 1) // r, p) == 1 for r in prime_factors(p - 1)):
        raise BadParameter(f"omega = {omega} is not a primitive root mod {p}")
    builders = {
        "artin-mumford": lambda: _artin_mumford(p, c, omega),
        "x-c": lambda: _x_c(p, c, omega),
        "base-a": lambda: _base_a(p, a),
        "eqago1": _eqago1,
        "genus28": _genus28,
        "s27-tower": lambda: _s27_tower(c),
    }
    return _from_dict(name, builders[name](), {})


def _from_dict(name: str, d: dict, params: dict, source: str = "built-in") -> CurveSpec:
    maps = d.get("maps", {})
    if isinstance(maps, list):
        maps = {m["name"]: (m["image_x"], list(m["image_t"])) for m in maps}
    merged = dict(d.get("params", {}))
    merged.update({k: v for k, v in params.items() if k != "p"})
    return CurveSpec(name=name, p=int(d["p"]), k=int(d.get("k", 1)), params=merged,
                     names=list(d.get("names") or [f"t{i + 1}" for i in range(len(d["relations"]))]),
                     relations=list(d["relations"]), maps=dict(maps), expected=dict(d.get("expected", {})),
                     var=d.get("var", "x"), source=source)


def _override(name: str) -> dict | None:
    root = os.environ.get("NAKAJIMA_CATALOG")
    if not root:
        return None
    path = Path(root) / f"{name}.json"
    if not path.is_file():
        return None
    return json.loads(path.read_text())


__all__ = ["CURVE_NAMES", "CurveSpec", "get_curve", "least_primitive_root"]
