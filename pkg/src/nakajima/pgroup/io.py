"""Group definition files.

``{"type": "permutations", "degree": 9, "generators": ["(0 1 2)", ...]}``
``{"type": "matrices", "p": 3, "generators": [[[1,1,0],[0,1,0],[0,0,1]], ...]}``
``{"type": "maps", "tower": {"p", "k", "relations", "names", "params", "var"},
   "maps": [{"name", "image_x", "image_t"}], "generators": [names]}``
``{"type": "presentation", "relators": [...], "reference": "S(81,9)"}`` - the
  relators are checked against the named construction, which is returned.
``{"type": "reference", "name": "C3wrC3"}``

``cap`` may be given at top level for closures.
"""

from __future__ import annotations

import json
from pathlib import Path

from ..as_tower import FieldAuto, map_verify, tower_make
from ..errors import NakajimaError, UnknownGroup
from ..field_core.gf import fq_make
from .group import DEFAULT_CAP, FiniteGroup, closure
from .reference import matrix_group, parse_cycles, reference_group
from .structure import presentation_check


class GroupFileError(NakajimaError, ValueError):
    """A group definition that cannot be turned into a group."""


def load_group(source) -> FiniteGroup:
    if isinstance(source, (str, Path)):
        try:
            d = json.loads(Path(source).read_text())
        except json.JSONDecodeError as e:
            raise GroupFileError(f"{source}: not valid JSON ({e})") from None
    else:
        d = source
    kind = d.get("type")
    cap = int(d.get("cap", DEFAULT_CAP))
    try:
        if kind == "permutations":
            deg = int(d["degree"])
            gens = [parse_cycles(g, deg) if isinstance(g, str) else tuple(g) for g in d["generators"]]
            return closure(gens, cap=cap, origin="from-permutations")
        if kind == "matrices":
            return matrix_group(d["generators"], int(d["p"]), cap=cap)
        if kind == "maps":
            t = d["tower"]
            T = tower_make(fq_make(int(t["p"]), int(t.get("k", 1))), t["relations"],
                           names=t.get("names"), params=t.get("params", {}), var=t.get("var", "x"))
            autos = {}
            for m in d["maps"]:
                s = FieldAuto.from_strings(T, m["image_x"], m["image_t"], params=t.get("params", {}),
                                           name=m["name"])
                map_verify(s)
                autos[m["name"]] = s
            names = d.get("generators") or list(autos)
            return closure([autos[n] for n in names], cap=cap, origin="from-maps")
        if kind == "presentation":
            G = reference_group(d["reference"])
            images = d.get("images") or G.gens
            if not presentation_check(d["relators"], G, images):
                raise GroupFileError(f"relators do not present {d['reference']}")
            return G
        if kind == "reference":
            return reference_group(d["name"])
    except UnknownGroup:
        raise
    except KeyError as e:
        raise GroupFileError(f"group definition is missing {e}") from None
    raise GroupFileError(f"unknown group type {kind!r}")
