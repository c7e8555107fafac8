"""Artin-Schreier towers over F_q(x) and their elements.

A tower has generators t_1..t_m with t_i^p - t_i = phi_i, where phi_i lies in
the subtower generated by t_1..t_{i-1}.  An element is stored as a dict from
exponent tuples (each entry < p) to nonzero rational-function coefficients;
this is its unique normal form.
"""

from __future__ import annotations

from math import comb
from typing import Iterable

from ..errors import (
    DivisionByZero,
    NotInvertible,
    TowerMismatch,
    ZeroRelation,
)
from ..field_core import poly as P
from ..field_core.gf import FieldDesc, FqElem
from ..field_core.ratfunc import RatFunc

MAX_GENERATORS = 6


class TowerField:
    """F_q(x)(t_1, ..., t_m) presented by triangular Artin-Schreier relations."""

    def __init__(self, base: FieldDesc, names: Iterable[str], var: str = "x"):
        self.F = base
        self.p = base.p
        self.names = tuple(names)
        self.var = var
        self.m = len(self.names)
        self.phis: list[TowerElem] = []
        self._zero_exp = (0,) * self.m

    # -- construction -------------------------------------------------------
    def _set_relation(self, phi: TowerElem) -> None:
        i = len(self.phis)
        if phi.is_zero():
            raise ZeroRelation(f"relation for {self.names[i]} is zero")
        self.phis.append(phi)

    @property
    def complete(self) -> bool:
        return len(self.phis) == self.m

    @property
    def degree(self) -> int:
        """Degree over F_q(x)."""
        return self.p**self.m

    def subtower(self, level: int) -> TowerField:
        """The tower on the first ``level`` generators (a new object)."""
        sub = TowerField(self.F, self.names[:level], self.var)
        for phi in self.phis[:level]:
            sub.phis.append(TowerElem(sub, {e[:level]: c for e, c in phi.terms.items()}))
        return sub

    def same_as(self, other: TowerField) -> bool:
        if self is other:
            return True
        return (
            isinstance(other, TowerField)
            and self.F == other.F
            and self.names == other.names
            and [ph.key() for ph in self.phis] == [ph.key() for ph in other.phis]
        )

    def __repr__(self) -> str:
        rels = ", ".join(f"{n}^{self.p}-{n} = {phi!r}" for n, phi in zip(self.names, self.phis))
        return f"TowerField({self.F!r}; {rels})"

    # -- element constructors -----------------------------------------------
    def zero(self) -> TowerElem:
        return TowerElem(self, {})

    def one(self) -> TowerElem:
        return self.const(1)

    def const(self, c) -> TowerElem:
        if isinstance(c, FqElem):
            c = c.value
        elif isinstance(c, int):
            c = self.F.from_int(c)
        return self.from_ratfunc(RatFunc.const(self.F, c))

    def x(self) -> TowerElem:
        return self.from_ratfunc(RatFunc.x(self.F))

    def gen(self, i: int) -> TowerElem:
        e = [0] * self.m
        e[i] = 1
        return TowerElem(self, {tuple(e): RatFunc.const(self.F, 1)})

    def gens(self) -> list[TowerElem]:
        return [self.gen(i) for i in range(self.m)]

    def from_ratfunc(self, f: RatFunc) -> TowerElem:
        return TowerElem(self, {self._zero_exp: f} if f else {})

    def monomial(self, exp: tuple, coeff: RatFunc | None = None) -> TowerElem:
        coeff = RatFunc.const(self.F, 1) if coeff is None else coeff
        return self._normalize_raw({tuple(exp): {coeff.den: coeff.num}})

    # -- normal form ---------------------------------------------------------
    def _normalize_raw(self, raw: dict) -> TowerElem:
        """Reduce ``{exp: {den: num}}`` with the rewriting t_i^p -> t_i + phi_i."""
        F, p = self.F, self.p
        for i in range(self.m - 1, -1, -1):
            while True:
                big = [e for e in raw if e[i] >= p]
                if not big:
                    break
                big.sort(key=lambda e: -e[i])
                phi_terms = self.phis[i].terms
                for e in big:
                    slot = raw.pop(e, None)
                    if not slot:
                        continue
                    # t^e = t^(e-p+1) + phi * t^(e-p)
                    e1 = e[:i] + (e[i] - p + 1,) + e[i + 1:]
                    _merge(F, raw, e1, slot)
                    base = e[:i] + (e[i] - p,) + e[i + 1:]
                    for ephi, cphi in phi_terms.items():
                        e3 = tuple(a + b for a, b in zip(base, ephi))
                        tgt = raw.setdefault(e3, {})
                        for den, num in slot.items():
                            d2 = den if cphi.den == P.ONE else P.mul(F, den, cphi.den)
                            n2 = P.mul(F, num, cphi.num)
                            old = tgt.get(d2)
                            tgt[d2] = n2 if old is None else P.add(F, old, n2)
        terms = {}
        for e, slot in raw.items():
            total = None
            for den, num in slot.items():
                if not num:
                    continue
                rf = RatFunc(F, num, den) if den != P.ONE else RatFunc(F, num, P.ONE, normalized=True)
                total = rf if total is None else total + rf
            if total is not None and total:
                terms[e] = total
        return TowerElem(self, terms)


def _merge(F, raw: dict, e: tuple, slot: dict) -> None:
    tgt = raw.get(e)
    if tgt is None:
        raw[e] = dict(slot)
        return
    for den, num in slot.items():
        old = tgt.get(den)
        tgt[den] = num if old is None else P.add(F, old, num)


class TowerElem:
    """An element of a :class:`TowerField` in normal form."""

    __slots__ = ("tower", "terms", "_key")

    def __init__(self, tower: TowerField, terms: dict):
        self.tower = tower
        self.terms = terms
        self._key = None

    # -- inspection ----------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def level(self) -> int:
        """1 + index of the highest generator that occurs (0 for base elements)."""
        lvl = 0
        for e in self.terms:
            for i in range(len(e) - 1, lvl - 1, -1):
                if e[i]:
                    lvl = i + 1
                    break
        return lvl

    def is_base(self) -> bool:
        return self.level() == 0

    def base_value(self) -> RatFunc:
        if not self.is_base():
            raise ValueError("element is not in F_q(x)")
        return self.terms.get(self.tower._zero_exp, RatFunc.const(self.tower.F, 0))

    def coefficient(self, exp: tuple) -> RatFunc:
        return self.terms.get(tuple(exp), RatFunc.const(self.tower.F, 0))

    def key(self) -> tuple:
        if self._key is None:
            self._key = tuple(sorted((e, c.num, c.den) for e, c in self.terms.items()))
        return self._key

    def __eq__(self, other) -> bool:
        if not isinstance(other, TowerElem):
            try:
                other = self._coerce(other)
            except TypeError:
                return NotImplemented
        return self.tower.same_as(other.tower) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    # -- arithmetic ------------------------------------------------------------
    def _coerce(self, other) -> TowerElem:
        if isinstance(other, TowerElem):
            if not self.tower.same_as(other.tower):
                raise TowerMismatch("elements of different towers")
            return other
        if isinstance(other, (int, FqElem)):
            return self.tower.const(other)
        if isinstance(other, RatFunc):
            return self.tower.from_ratfunc(other)
        raise TypeError(f"cannot combine TowerElem with {type(other).__name__}")

    def __add__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        terms = dict(self.terms)
        for e, c in o.terms.items():
            old = terms.get(e)
            if old is None:
                terms[e] = c
            else:
                s = old + c
                if s:
                    terms[e] = s
                else:
                    del terms[e]
        return TowerElem(self.tower, terms)

    __radd__ = __add__

    def __neg__(self):
        return TowerElem(self.tower, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        if not self.terms or not o.terms:
            return self.tower.zero()
        T = self.tower
        F = T.F
        if o.is_base() and len(o.terms) == 1:
            return self.scale(o.base_value())
        if self.is_base() and len(self.terms) == 1:
            return o.scale(self.base_value())
        raw: dict = {}
        den_cache: dict = {}
        for ea, ca in self.terms.items():
            for eb, cb in o.terms.items():
                e = tuple(a + b for a, b in zip(ea, eb))
                if ca.den == P.ONE:
                    den = cb.den
                elif cb.den == P.ONE:
                    den = ca.den
                else:
                    dk = (ca.den, cb.den)
                    den = den_cache.get(dk)
                    if den is None:
                        den = den_cache[dk] = P.mul(F, ca.den, cb.den)
                num = P.mul(F, ca.num, cb.num)
                slot = raw.setdefault(e, {})
                old = slot.get(den)
                slot[den] = num if old is None else P.add(F, old, num)
        return T._normalize_raw(raw)

    __rmul__ = __mul__

    def scale(self, f: RatFunc) -> TowerElem:
        if not f:
            return self.tower.zero()
        return TowerElem(self.tower, {e: c * f for e, c in self.terms.items()})

    def scale_const(self, c: int) -> TowerElem:
        """Multiply by an encoded constant of F_q."""
        return self.scale(RatFunc.const(self.tower.F, c))

    def scale_int(self, n: int) -> TowerElem:
        return self.scale_const(self.tower.F.from_int(n))

    def __pow__(self, n: int) -> TowerElem:
        if n < 0:
            return self.inv() ** (-n)
        result = self.tower.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def inv(self) -> TowerElem:
        return elem_inv(self)

    def __truediv__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self * elem_inv(o)

    def __rtruediv__(self, other):
        try:
            o = self._coerce(other)
        except TypeError:
            return NotImplemented
        return o * elem_inv(self)

    def normalize(self) -> TowerElem:
        """Re-run the rewriting on the stored terms (a no-op on normal forms)."""
        raw = {e: {c.den: c.num} for e, c in self.terms.items()}
        return self.tower._normalize_raw(raw)

    def shift_gen(self, i: int, k: int) -> TowerElem:
        """Substitute t_i -> t_i + k (an automorphism of the subtower up to t_i)."""
        F = self.tower.F
        out: dict = {}
        for e, c in self.terms.items():
            j = e[i]
            for l in range(j + 1):
                s = F.from_int(comb(j, l) * pow(k, j - l))
                if not s:
                    continue
                e2 = e[:i] + (l,) + e[i + 1:]
                term = c.scale(s)
                old = out.get(e2)
                out[e2] = term if old is None else old + term
        return TowerElem(self.tower, {e: c for e, c in out.items() if c})

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        T = self.tower
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                n if k == 1 else f"{n}^{k}" for n, k in zip(T.names, e) if k
            )
            cs = repr(c)
            if not mono:
                parts.append(cs)
            elif c == 1:
                parts.append(mono)
            else:
                if " + " in cs and not cs.startswith("("):
                    cs = f"({cs})"
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts)


def elem_inv(a: TowerElem, check: bool = True) -> TowerElem:
    """Inverse in the tower.

    With i the highest generator of ``a``, the product of the conjugates
    a(t_i + k), k = 1..p-1, times ``a`` is the norm of ``a`` down to the
    subtower, i.e. the determinant of multiplication-by-a on the basis
    1, t_i, ..., t_i^(p-1).  Dividing the conjugate product by the norm
    (recursively inverted) gives 1/a.
    """
    if a.is_zero():
        raise DivisionByZero("inverse of zero in a tower")
    T = a.tower
    lvl = a.level()
    if lvl == 0:
        return T.from_ratfunc(a.base_value().inv())
    i = lvl - 1
    conj = T.one()
    for k in range(1, T.p):
        conj = conj * a.shift_gen(i, k)
    norm = a * conj
    if norm.is_zero():
        raise NotInvertible(f"{a!r} is a zero divisor: the relations do not define a field")
    if norm.level() > i:
        raise NotInvertible("norm left the subtower: relations are inconsistent")
    result = conj * elem_inv(norm, check=False)
    if check and a * result != T.one():
        raise NotInvertible(f"{a!r} has no inverse")
    return result


def tower_make(base: FieldDesc, relations, names=None, params=None, var: str = "x") -> TowerField:
    """Build a tower from relations given as strings, RatFuncs or callables.

    A string relation is parsed with the generators named so far; a callable
    receives the partial tower and must return a TowerElem.
    """
    from .expr import parse_in_tower
    from ..errors import NonTriangularRelation

    relations = list(relations)
    if names is None:
        names = [f"t{i + 1}" for i in range(len(relations))]
    names = list(names)
    if len(names) != len(relations):
        raise ValueError("one name per relation is required")
    if len(names) > MAX_GENERATORS:
        raise ValueError(f"at most {MAX_GENERATORS} generators are supported")
    T = TowerField(base, names, var)
    for i, rel in enumerate(relations):
        if isinstance(rel, str):
            phi = parse_in_tower(T, rel, params or {}, max_gen=i)
        elif isinstance(rel, RatFunc):
            phi = T.from_ratfunc(rel)
        elif isinstance(rel, TowerElem):
            phi = rel
            if phi.tower is not T:
                phi = TowerElem(T, {tuple(e) + (0,) * (T.m - len(e)): c for e, c in rel.terms.items()})
        elif callable(rel):
            phi = rel(T)
        else:
            raise TypeError(f"unsupported relation {rel!r}")
        if phi.level() > i:
            raise NonTriangularRelation(
                f"relation for {names[i]} mentions {names[phi.level() - 1]}"
            )
        T._set_relation(phi)
    return T
