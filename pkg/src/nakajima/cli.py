"""Command-line front end.

    nakajima verify <scenario|all> [--extended] [--jobs N] [--json PATH]
    nakajima genus --tower FILE [--param c=2 ...]
    nakajima prank --cover FILE
    nakajima bounds --p P --g G --gamma C
    nakajima group --file FILE --op fingerprint|maximals|isom [--other FILE]
    nakajima count --frbound (--group FILE | --p P --n N --d D --alpha A) --gamma C
    nakajima count --bh --p P --n N --d D

Every command builds a report.  Exit status: 0 when no step failed, 1 when a
check failed, 2 on a usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from .as_tower import FieldAuto, as_step_genus, map_verify, tower_make
from .catalog.report import Report, jsonable
from .catalog.scenarios import SCENARIOS, run_scenario
from .counting import GroupProfile, bh_bound, frbound_count, sylow_bh_bound
from .errors import NakajimaError
from .field_core.gf import fq_make
from .pgroup import fingerprint, identify, is_isomorphic, maximal_subgroups
from .pgroup.io import load_group
from .ramify import CoverData, bounds, ds_prank, hurwitz_genus

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class InputError(Exception):
    """Bad command-line input detected after argument parsing."""


@dataclass
class CliConfig:
    command: str
    params: dict = field(default_factory=dict)
    output: str = "text"          # text | json
    json_path: str | None = None  # "-" writes JSON to stdout


# -- commands ----------------------------------------------------------------------------
def _verify(args) -> list[Report]:
    names = list(SCENARIOS) if args.scenario == "all" else [args.scenario]
    for n in names:
        if n not in SCENARIOS:
            raise InputError(f"unknown scenario {n!r}; known: all, {', '.join(SCENARIOS)}")
    if args.jobs > 1 and len(names) > 1:
        # map() keeps submission order, so output does not depend on scheduling
        with ProcessPoolExecutor(max_workers=args.jobs) as ex:
            return list(ex.map(run_scenario, names, [args.extended] * len(names)))
    return [run_scenario(n, args.extended) for n in names]


def _read_json(path: str) -> dict:
    p = Path(path)
    if not p.is_file():
        raise InputError(f"{path}: no such file")
    try:
        return json.loads(p.read_text())
    except json.JSONDecodeError as e:
        raise InputError(f"{path}: not valid JSON ({e})") from None


def _parse_params(items) -> dict:
    out = {}
    for it in items or []:
        key, sep, val = it.partition("=")
        if not sep or not key:
            raise InputError(f"--param expects NAME=VALUE, got {it!r}")
        try:
            out[key] = int(val)
        except ValueError:
            raise InputError(f"--param {key}: {val!r} is not an integer") from None
    return out


def _genus(args) -> list[Report]:
    d = _read_json(args.tower)
    params = dict(d.get("params", {}))
    params.update(_parse_params(args.param))
    try:
        T = tower_make(fq_make(int(d["p"]), int(d.get("k", 1))), d["relations"], names=d.get("names"),
                       params=params, var=d.get("var", "x"))
    except KeyError as e:
        raise InputError(f"{args.tower}: tower definition is missing {e}") from None
    expected = d.get("expected", {})
    rep = Report(f"genus:{Path(args.tower).name}")
    for name, phi in zip(T.names, T.phis):
        step = f"genus[{name}]"
        if not phi.is_base():
            rep.context(step, "one-step formula", "not computed: the right-hand side involves earlier generators",
                        "derived")
            continue
        g = as_step_genus(phi.base_value())
        if name in expected.get("step_genera", {}):
            rep.check(step, "one-step formula", expected["step_genera"][name], g)
        else:
            rep.context(step, "one-step formula", g, "derived")
    if len(T.names) == 1 and "genus" in expected and T.phis[0].is_base():
        rep.check("genus", "expected genus", expected["genus"], as_step_genus(T.phis[0].base_value()))
    for m in d.get("maps", []):
        try:
            sigma = FieldAuto.from_strings(T, m["image_x"], m["image_t"], params=params, name=m["name"])
        except KeyError as e:
            raise InputError(f"{args.tower}: map definition is missing {e}") from None
        v = map_verify(sigma)
        rep.check(f"map {m['name']} is an automorphism", "relations preserved", True, v.ok, note=v.reason)
        if v.ok:
            rep.context(f"order[{m['name']}]", "order of the map", v.order, "derived")
    return [rep]


def _prank(args) -> list[Report]:
    d = _read_json(args.cover)
    c = CoverData.from_dict(d)
    rep = Report(f"prank:{Path(args.cover).name}")
    g, gamma = hurwitz_genus(c), ds_prank(c)
    expected = d.get("expected", {})
    for key, val, anchor in (("genus", g, "Hurwitz formula"), ("prank", gamma, "Deuring-Shafarevich formula")):
        if key in expected:
            rep.check(key, anchor, expected[key], val)
        else:
            rep.context(key, anchor, val, "derived")
    return [rep]


def _bounds(args) -> list[Report]:
    b = bounds(args.p, args.g, args.gamma)
    rep = Report(f"bounds:p={args.p},g={args.g},gamma={args.gamma}")
    rep.context("stichtenoth", "p/(p-1) g", b.stichtenoth, "elementary")
    rep.context("nakajima", "bound in terms of the p-rank", b.nakajima, "elementary")
    rep.context("nakajima_genus_form", "same bound with g for the p-rank", b.nakajima_genus_form, "elementary")
    rep.context("threshold", "p^2/(p^2-p-1) (g-1)", b.hyp_threshold, "elementary")
    return [rep]


def _group(args) -> list[Report]:
    G = _load_group(args.file)
    rep = Report(f"group:{Path(args.file).name}:{args.op}")
    if args.op == "fingerprint":
        for k, v in fingerprint(G).as_dict().items():
            rep.context(k, "fingerprint", v, "derived")
        rep.context("identified_as", "reference constructions", identify(G), "derived")
    elif args.op == "maximals":
        ms = maximal_subgroups(G)
        rep.context("count", "maximal subgroups", len(ms), "derived")
        rep.context("types", "maximal subgroups", [identify(M) or f"order {M.n}" for M in ms], "derived")
    else:
        if not args.other:
            raise InputError("--op isom needs --other FILE")
        H = _load_group(args.other)
        iso = is_isomorphic(G, H)
        if args.expect is None:
            rep.context("isomorphic", "isomorphism search", iso, "derived")
        else:
            rep.check("isomorphic", "isomorphism search", args.expect == "yes", iso)
    return [rep]


def _load_group(path: str):
    if not Path(path).is_file():
        raise InputError(f"{path}: no such file")
    return load_group(path)


def _count(args) -> list[Report]:
    if args.bh:
        for k in ("p", "n", "d"):
            if getattr(args, k) is None:
                raise InputError(f"--bh needs --{k}")
        rep = Report(f"count:bh:p={args.p},n={args.n},d={args.d}")
        rep.context("bh_bound", "|Aut(G)| divides", bh_bound(args.p, args.n, args.d), "elementary")
        rep.context("sylow_bh_bound", "p-part", sylow_bh_bound(args.p, args.n, args.d), "elementary")
        return [rep]
    if args.gamma is None:
        raise InputError("--frbound needs --gamma")
    if args.group:
        prof = GroupProfile.of(_load_group(args.group))
    else:
        for k in ("p", "n", "d", "alpha"):
            if getattr(args, k) is None:
                raise InputError(f"--frbound needs --group FILE or --{k}")
        prof = GroupProfile(args.p, args.n, args.d, args.alpha)
    rep = Report(f"count:frbound:p={prof.p},n={prof.n},d={prof.d},gamma={args.gamma}")
    rep.context("alpha", "|Aut(G)|", prof.alpha, "derived")
    n = frbound_count(prof, args.gamma)
    rep.context("count", "unramified extensions with this group", n, "derived")
    if n:
        rep.context("not_divisible_by_p", "count mod p", n % prof.p != 0, "elementary")
    return [rep]


COMMANDS = {"verify": _verify, "genus": _genus, "prank": _prank, "bounds": _bounds,
            "group": _group, "count": _count}


# -- parsing and output ---------------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="nakajima", description="Exact checks for Artin-Schreier curves "
                                 "and their automorphism p-groups.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", metavar="PATH", help="also write the JSON report ('-' for stdout only)")
        return sp

    v = common(sub.add_parser("verify", help="run a named scenario or all of them"))
    v.add_argument("scenario", help=f"one of: all, {', '.join(SCENARIOS)}")
    v.add_argument("--extended", action="store_true", help="include the slow exhaustive searches")
    v.add_argument("--jobs", type=int, default=1, help="scenarios run in parallel (default 1)")

    g = common(sub.add_parser("genus", help="genera of the steps of a tower and checks of its maps"))
    g.add_argument("--tower", required=True, metavar="FILE")
    g.add_argument("--param", action="append", metavar="NAME=VALUE", help="override a named constant")

    pr = common(sub.add_parser("prank", help="genus and p-rank of a cover"))
    pr.add_argument("--cover", required=True, metavar="FILE")

    b = common(sub.add_parser("bounds", help="bounds on |S| for given p, g and p-rank"))
    b.add_argument("--p", type=int, required=True)
    b.add_argument("--g", type=int, required=True)
    b.add_argument("--gamma", type=int, required=True)

    gr = common(sub.add_parser("group", help="invariants of a group given by a file"))
    gr.add_argument("--file", required=True, metavar="FILE")
    gr.add_argument("--op", required=True, choices=("fingerprint", "maximals", "isom"))
    gr.add_argument("--other", metavar="FILE", help="second group for --op isom")
    gr.add_argument("--expect", choices=("yes", "no"), help="turn the isomorphism answer into a check")

    c = common(sub.add_parser("count", help="unramified-extension counts and automorphism bounds"))
    mode = c.add_mutually_exclusive_group(required=True)
    mode.add_argument("--frbound", action="store_true")
    mode.add_argument("--bh", action="store_true")
    c.add_argument("--group", metavar="FILE")
    for k in ("p", "n", "d", "alpha", "gamma"):
        c.add_argument(f"--{k}", type=int)
    return ap


def _text(rep: Report) -> str:
    # formula commands have only context steps: print them as name=value
    if all(s.status == "context" for s in rep.steps):
        return "\n".join(f"{s.name}={_scalar(s.actual)}" for s in rep.steps)
    return rep.to_text()


def _scalar(v) -> str:
    v = jsonable(v)
    return v if isinstance(v, str) else json.dumps(v)


def _emit(reports: list[Report], json_path: str | None, out) -> None:
    if json_path != "-":
        print("\n".join(_text(r) for r in reports), file=out)
    if json_path:
        payload = reports[0].as_dict() if len(reports) == 1 else [r.as_dict() for r in reports]
        text = json.dumps(payload, indent=2)
        if json_path == "-":
            print(text, file=out)
        else:
            Path(json_path).write_text(text + "\n")


def run_cli(argv=None, out=None) -> int:
    out = out or sys.stdout
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as e:  # argparse has already printed usage
        return EXIT_OK if e.code == 0 else EXIT_USAGE
    cfg = CliConfig(args.command, {k: v for k, v in vars(args).items() if k not in ("command", "json")},
                    "json" if args.json == "-" else "text", args.json)
    try:
        if args.command == "verify" and args.jobs < 1:
            raise InputError("--jobs must be at least 1")
        reports = COMMANDS[cfg.command](args)
    except (InputError, NakajimaError, ValueError, OSError) as e:
        print(f"nakajima {cfg.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    try:
        _emit(reports, cfg.json_path, out)
    except OSError as e:
        print(f"nakajima: cannot write {cfg.json_path}: {e}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_FAIL if any(r.failed for r in reports) else EXIT_OK


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
