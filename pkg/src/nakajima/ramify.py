"""Ramification calculus for p-group covers of curves.

Different exponents, the Hurwitz genus formula, the Deuring-Shafarevich
p-rank formula, the classical bounds on |S| in terms of g and gamma, the
extremality test and the case classifier.  Everything is exact: integers or
:class:`fractions.Fraction`.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .errors import GenusTooSmall, NakajimaError, NonIntegralGenus, NonsensePRank


def _is_power_of(n: int, p: int) -> bool:
    while n > 1 and n % p == 0:
        n //= p
    return n == 1


@dataclass(frozen=True)
class OrbitDatum:
    """A short orbit: its length and the ramification chain at one of its points."""

    length: int
    chain: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "chain", tuple(int(c) for c in self.chain))
        if self.length < 1:
            raise ValueError("orbit length must be positive")
        ch = self.chain
        if not ch or ch[-1] != 1:
            raise ValueError(f"chain must end at 1: {list(ch)}")
        if any(a < b for a, b in zip(ch, ch[1:])):
            raise ValueError(f"chain must be non-increasing: {list(ch)}")

    def short(self, order: int) -> bool:
        return self.length < order


@dataclass
class CoverData:
    p: int
    order: int
    gbar: int
    gammabar: int
    orbits: list[OrbitDatum] = field(default_factory=list)
    pgroup: bool = True

    def __post_init__(self):
        self.orbits = [o if isinstance(o, OrbitDatum) else OrbitDatum(o["length"], o["chain"])
                       for o in self.orbits]
        if not 0 <= self.gammabar <= self.gbar:
            raise ValueError(f"need 0 <= gammabar <= gbar, got {self.gammabar}, {self.gbar}")
        if self.pgroup and not _is_power_of(self.order, self.p):
            raise ValueError(f"|S| = {self.order} is not a power of {self.p}")
        for o in self.orbits:
            if o.chain[0] * o.length != self.order:
                raise ValueError(f"stabilizer {o.chain[0]} times orbit length {o.length} != {self.order}")
            if self.pgroup and o.chain[0] > 1 and (len(o.chain) < 2 or o.chain[1] != o.chain[0]):
                raise ValueError("for p-groups the inertia group equals the first ramification group")

    @classmethod
    def from_dict(cls, d: dict) -> CoverData:
        try:
            return cls(int(d["p"]), int(d["order"]), int(d["gbar"]), int(d["gammabar"]),
                       [OrbitDatum(int(o["length"]), o["chain"]) for o in d.get("orbits", [])])
        except (KeyError, TypeError) as e:
            raise ValueError(f"malformed cover data: {e}") from None

    @classmethod
    def load(cls, path) -> CoverData:
        return cls.from_dict(json.loads(Path(path).read_text()))

    def to_dict(self) -> dict:
        return {"p": self.p, "order": self.order, "gbar": self.gbar, "gammabar": self.gammabar,
                "orbits": [{"length": o.length, "chain": list(o.chain)} for o in self.orbits]}


def different_exponent(o: OrbitDatum) -> int:
    return sum(c - 1 for c in o.chain)


def hurwitz_genus(c: CoverData) -> int:
    """g with 2g - 2 = |S|(2 gbar - 2) + sum over short orbits of length * d_P."""
    two_g_minus_2 = c.order * (2 * c.gbar - 2) + sum(o.length * different_exponent(o) for o in c.orbits)
    if two_g_minus_2 % 2 or two_g_minus_2 < -2:
        raise NonIntegralGenus(f"2g-2 = {two_g_minus_2} gives no genus")
    return two_g_minus_2 // 2 + 1


def ds_prank(c: CoverData) -> int:
    """gamma with gamma - 1 = |S|(gammabar - 1) + sum (|S| - l_i)."""
    gamma = c.order * (c.gammabar - 1) + sum(c.order - o.length for o in c.orbits) + 1
    if gamma < 0:
        raise NonsensePRank(f"p-rank would be {gamma}")
    return gamma


@dataclass(frozen=True)
class Bounds:
    """Upper bounds for |S|; ``nakajima`` is None when gamma = 0.

    ``nakajima_genus_form`` is the same bound with g in place of gamma in the
    gamma >= 2 branch; for ordinary curves the two coincide.
    """

    p: int
    g: int
    gamma: int
    stichtenoth: Fraction
    nakajima: Fraction | None
    nakajima_genus_form: Fraction | None
    hyp_threshold: Fraction

    def as_dict(self) -> dict:
        return {k: fmt(v) for k, v in self.__dict__.items()}


def fmt(v):
    """Exact numbers as report strings: ints stay ints, fractions become "n/d"."""
    if isinstance(v, Fraction):
        return v.numerator if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return v


def bounds(p: int, g: int, gamma: int) -> Bounds:
    if g < 2:
        raise GenusTooSmall(f"bounds need g >= 2, got {g}")
    if not 0 <= gamma <= g:
        raise ValueError(f"need 0 <= gamma <= g, got gamma={gamma}, g={g}")
    stich = Fraction(p, p - 1) * g
    if gamma == 0:
        nak = nak_g = None
    elif gamma == 1:
        nak = nak_g = Fraction(g - 1)
    else:
        nak = Fraction(p, p - 2) * (gamma - 1)
        nak_g = Fraction(p, p - 2) * (g - 1)
    hyp = Fraction(p * p, p * p - p - 1) * (g - 1)
    return Bounds(p, g, gamma, stich, nak, nak_g, hyp)


def extremal_check(p: int, order: int, g: int) -> bool:
    """Nakajima extremality: p(g - 1) = (p - 2)|S|."""
    if order < p * p or not _is_power_of(order, p):
        raise ValueError(f"|S| must be a power of {p} at least {p * p}")
    return p * (g - 1) == (p - 2) * order


def classify_princ(p: int, order: int, g: int, gamma: int, fixes_point: bool) -> str:
    """Which case of the large-p-subgroup classification a triple falls into.

    Returns one of ``i``, ``ii``, ``iii``, ``hypothesis-fails`` or
    ``contradiction`` (the triple violates the classification).
    """
    if g < 2:
        raise GenusTooSmall(f"classification needs g >= 2, got {g}")
    if order <= Fraction(p * p, p * p - p - 1) * (g - 1):
        return "hypothesis-fails"
    if gamma == 0:
        return "i"
    if order == p and g == gamma == p - 1 and fixes_point:
        return "ii"
    if order >= p * p and _is_power_of(order, p) and gamma == g and extremal_check(p, order, g):
        return "iii"
    return "contradiction"


# -- consistency of cover data with expectations and quotients ----------------------
@dataclass
class ConsistencyReport:
    genus: int
    prank: int
    mismatches: list[str]
    quotients: list[dict]

    @property
    def ok(self) -> bool:
        return not self.mismatches


def cover_consistency(c: CoverData, expected_g=None, expected_gamma=None,
                      subgroups: list[dict] | None = None) -> ConsistencyReport:
    """Recompute g and gamma and derive the data of quotient covers X -> X/M.

    ``subgroups`` describes normal subgroups M as ``{"name", "order",
    "contains": [orbit indices], "expected": (gbar, gammabar)}``: M contains
    the point stabilizers of the listed short orbits and meets the others
    trivially.  An empty ``contains`` (or ``"semiregular": true``) is a
    semiregular M, for which gbar - 1 = (g - 1)/|M|.
    """
    mism = []
    try:
        g = hurwitz_genus(c)
        gamma = ds_prank(c)
    except NakajimaError as e:
        return ConsistencyReport(-1, -1, [str(e)], [])
    if expected_g is not None and g != expected_g:
        mism.append(f"genus {g} != expected {expected_g}")
    if expected_gamma is not None and gamma != expected_gamma:
        mism.append(f"p-rank {gamma} != expected {expected_gamma}")
    quots = []
    for sub in subgroups or []:
        m = int(sub["order"])
        name = sub.get("name", f"M({m})")
        inside = [] if sub.get("semiregular") else [c.orbits[i] for i in sub.get("contains", [])]
        # Hurwitz and Deuring-Shafarevich for M acting on X: the points of an
        # orbit whose stabilizer lies in M keep their ramification chain.
        ram = sum(o.length * different_exponent(o) for o in inside)
        short = sum(o.length * (o.chain[0] - 1) for o in inside)
        num_g = 2 * g - 2 - ram
        num_gam = gamma - 1 - short
        if num_g % (2 * m) or num_gam % m:
            mism.append(f"{name}: quotient genus or p-rank is not an integer")
            continue
        qg, qgam = num_g // (2 * m) + 1, num_gam // m + 1
        quots.append({"name": name, "order": m, "gbar": qg, "gammabar": qgam})
        exp = sub.get("expected")
        if exp is not None and (qg, qgam) != tuple(exp):
            mism.append(f"{name}: quotient (gbar, gammabar) = {(qg, qgam)} != expected {tuple(exp)}")
    return ConsistencyReport(g, gamma, mism, quots)


__all__ = [
    "Bounds", "ConsistencyReport", "CoverData", "OrbitDatum", "bounds", "classify_princ",
    "cover_consistency", "different_exponent", "ds_prank", "extremal_check", "fmt", "hurwitz_genus",
]
