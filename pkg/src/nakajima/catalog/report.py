"""Scenario reports: ordered steps with expected/actual values and a status."""

from __future__ import annotations

import json
import time
import traceback
from dataclasses import dataclass, field
from fractions import Fraction

STATUSES = ("pass", "fail", "discrepancy", "context", "unverified")
PROVENANCE = ("literature", "derived", "elementary")


def jsonable(v):
    """Exact values only: Fractions become "n/d", tuples become lists, sets are sorted."""
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, bool) or v is None or isinstance(v, (int, str)):
        return v
    if isinstance(v, dict):
        return {str(k): jsonable(x) for k, x in v.items()}
    if isinstance(v, (list, tuple)):
        return [jsonable(x) for x in v]
    if isinstance(v, (set, frozenset)):
        return sorted(jsonable(x) for x in v)
    if hasattr(v, "item"):  # numpy scalars
        return jsonable(v.item())
    if isinstance(v, float):
        raise TypeError("floating point values are not allowed in reports")
    return str(v)


@dataclass
class Step:
    name: str
    anchor: str
    expected: object
    actual: object
    provenance: str
    status: str
    note: str = ""

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")
        if self.provenance not in PROVENANCE:
            raise ValueError(f"bad provenance {self.provenance!r}")

    def as_dict(self) -> dict:
        d = {"name": self.name, "anchor": self.anchor, "expected": jsonable(self.expected),
             "actual": jsonable(self.actual), "provenance": self.provenance, "status": self.status}
        if self.note:
            d["note"] = self.note
        return d


@dataclass
class Report:
    scenario: str
    steps: list[Step] = field(default_factory=list)
    seconds: float = 0.0  # wall time; kept out of the JSON so reports are reproducible

    # -- recording helpers ----------------------------------------------------------------
    def check(self, name, anchor, expected, actual, provenance="derived", note="") -> bool:
        ok = jsonable(expected) == jsonable(actual)
        self.steps.append(Step(name, anchor, expected, actual, provenance, "pass" if ok else "fail", note))
        return ok

    def compare(self, name, anchor, printed, computed, provenance="literature", note="") -> bool:
        """A printed value that may legitimately disagree: mismatch is a discrepancy, not a failure."""
        ok = jsonable(printed) == jsonable(computed)
        self.steps.append(Step(name, anchor, printed, computed, provenance,
                               "pass" if ok else "discrepancy", note))
        return ok

    def context(self, name, anchor, value, provenance="literature", note=""):
        self.steps.append(Step(name, anchor, None, value, provenance, "context", note))

    def unverified(self, name, anchor, expected, note, provenance="literature"):
        self.steps.append(Step(name, anchor, expected, None, provenance, "unverified", note))

    def error(self, name, anchor, expected, exc: BaseException, provenance="derived"):
        msg = f"{type(exc).__name__}: {exc}"
        self.steps.append(Step(name, anchor, expected, f"error: {msg}", provenance, "fail",
                               traceback.format_exception_only(type(exc), exc)[-1].strip()))

    def run(self, name, anchor, expected, fn, provenance="derived", note=""):
        """check() with the actual value computed by fn; an exception is a failure."""
        try:
            actual = fn()
        except Exception as e:  # noqa: BLE001 - any error is a failed step
            self.error(name, anchor, expected, e, provenance)
            return None
        self.check(name, anchor, expected, actual, provenance, note)
        return actual

    # -- summaries -----------------------------------------------------------------------
    @property
    def failed(self) -> bool:
        return any(s.status == "fail" for s in self.steps)

    def counts(self) -> dict:
        out = {s: 0 for s in STATUSES}
        for st in self.steps:
            out[st.status] += 1
        return out

    def as_dict(self) -> dict:
        return {"scenario": self.scenario, "steps": [s.as_dict() for s in self.steps]}

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2, sort_keys=False)

    def to_text(self) -> str:
        lines = [f"== {self.scenario}"]
        for s in self.steps:
            exp = "" if s.status == "context" else f" expected={json.dumps(jsonable(s.expected))}"
            lines.append(f"  [{s.status:>11}] {s.name}:{exp} actual={json.dumps(jsonable(s.actual))}")
            if s.note:
                lines.append(f"{'':16}note: {s.note}")
        c = self.counts()
        lines.append("  summary: " + ", ".join(f"{k}={v}" for k, v in c.items() if v))
        return "\n".join(lines)


class Timer:
    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.seconds = time.perf_counter() - self.t0
        return False


REPORT_SCHEMA = {
    "type": "object",
    "required": ["scenario", "steps"],
    "properties": {
        "scenario": {"type": "string"},
        "steps": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["name", "anchor", "expected", "actual", "provenance", "status"],
                "properties": {
                    "name": {"type": "string"},
                    "anchor": {"type": "string"},
                    "provenance": {"enum": list(PROVENANCE)},
                    "status": {"enum": list(STATUSES)},
                    "note": {"type": "string"},
                },
            },
        },
    },
}
