"""Rational functions over F_q, places of F_q(x), valuations, partial fractions."""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering

from ..errors import DivisionByZero, FieldMismatch
from . import poly as P
from .gf import FieldDesc, FqElem


@total_ordering
class _Infinity:
    """The valuation of 0.  Compares above every integer; never equals one."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __eq__(self, other):
        return other is self

    def __lt__(self, other):
        return False

    def __gt__(self, other):
        return other is not self

    def __add__(self, other):
        return self

    __radd__ = __add__

    def __hash__(self):
        return hash("valuation-infinity")

    def __repr__(self):
        return "INF"


INF = _Infinity()


class RatFunc:
    """num/den in F_q(x), stored with gcd(num, den) = 1 and den monic."""

    __slots__ = ("F", "num", "den", "_hash")

    def __init__(self, F: FieldDesc, num=(), den=(1,), *, normalized: bool = False):
        self.F = F
        self._hash = None
        if normalized:
            self.num, self.den = num, den
            return
        num, den = P.strip(num), P.strip(den)
        if not den:
            raise DivisionByZero("zero denominator")
        if not num:
            self.num, self.den = (), (1,)
            return
        if len(den) > 1:
            g = P.gcd(F, num, den)
            if g != P.ONE:
                num = P.div_exact(F, num, g)
                den = P.div_exact(F, den, g)
        lc = den[-1]
        if lc != 1:
            c = F.inv(lc)
            num, den = P.scale(F, num, c), P.scale(F, den, c)
        self.num, self.den = num, den

    # -- constructors -------------------------------------------------------
    @classmethod
    def const(cls, F: FieldDesc, c: int) -> RatFunc:
        return cls(F, (c,) if c else (), (1,), normalized=True)

    @classmethod
    def x(cls, F: FieldDesc) -> RatFunc:
        return cls(F, P.X, (1,), normalized=True)

    @classmethod
    def from_poly(cls, F: FieldDesc, a) -> RatFunc:
        return cls(F, P.strip(a), (1,), normalized=True)

    # -- predicates ---------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.num

    def is_poly(self) -> bool:
        return self.den == (1,)

    def is_const(self) -> bool:
        return self.den == (1,) and len(self.num) <= 1

    def const_value(self) -> int:
        return self.num[0] if self.num else 0

    def __bool__(self) -> bool:
        return bool(self.num)

    # -- arithmetic ---------------------------------------------------------
    def _coerce(self, other) -> RatFunc:
        if isinstance(other, RatFunc):
            if other.F != self.F:
                raise FieldMismatch("rational functions over different fields")
            return other
        if isinstance(other, int):
            return RatFunc.const(self.F, self.F.from_int(other))
        if isinstance(other, FqElem):
            if other.field != self.F:
                raise FieldMismatch("constant from a different field")
            return RatFunc.const(self.F, other.value)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        F = self.F
        if self.den == o.den:
            if self.den == (1,):
                return RatFunc(F, P.add(F, self.num, o.num), (1,), normalized=True)
            return RatFunc(F, P.add(F, self.num, o.num), self.den)
        g = P.gcd(F, self.den, o.den)
        if g == P.ONE:
            # coprime monic denominators: the sum is already reduced
            num = P.add(F, P.mul(F, self.num, o.den), P.mul(F, o.num, self.den))
            if not num:
                return RatFunc(F, (), (1,), normalized=True)
            return RatFunc(F, num, P.mul(F, self.den, o.den), normalized=True)
        a = P.div_exact(F, self.den, g)
        b = P.div_exact(F, o.den, g)
        num = P.add(F, P.mul(F, self.num, b), P.mul(F, o.num, a))
        return RatFunc(F, num, P.mul(F, a, o.den))

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(self.F, P.neg(self.F, self.num), self.den, normalized=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        F = self.F
        if not self.num or not o.num:
            return RatFunc(F, (), (1,), normalized=True)
        if self.den == (1,) and o.den == (1,):
            return RatFunc(F, P.mul(F, self.num, o.num), (1,), normalized=True)
        # cross-cancel keeps operands small
        g1 = P.gcd(F, self.num, o.den)
        g2 = P.gcd(F, o.num, self.den)
        n1, d2 = (self.num, o.den) if g1 == P.ONE else (P.div_exact(F, self.num, g1), P.div_exact(F, o.den, g1))
        n2, d1 = (o.num, self.den) if g2 == P.ONE else (P.div_exact(F, o.num, g2), P.div_exact(F, self.den, g2))
        num, den = P.mul(F, n1, n2), P.mul(F, d1, d2)
        lc = den[-1]
        if lc != 1:
            c = F.inv(lc)
            num, den = P.scale(F, num, c), P.scale(F, den, c)
        return RatFunc(F, num, den, normalized=True)

    __rmul__ = __mul__

    def inv(self) -> RatFunc:
        if not self.num:
            raise DivisionByZero("inverse of the zero rational function")
        return RatFunc(self.F, self.den, self.num)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return self * o.inv()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o * self.inv()

    def __pow__(self, e: int):
        if e < 0:
            return self.inv() ** (-e)
        F = self.F
        return RatFunc(F, P.pow_(F, self.num, e), P.pow_(F, self.den, e), normalized=True)

    def scale(self, c: int) -> RatFunc:
        if not c:
            return RatFunc(self.F, (), (1,), normalized=True)
        return RatFunc(self.F, P.scale(self.F, self.num, c), self.den, normalized=True)

    def substitute(self, inner) -> RatFunc:
        """f(inner(x)) for a polynomial inner of positive degree."""
        F = self.F
        return RatFunc(F, P.compose(F, self.num, inner), P.compose(F, self.den, inner))

    def normalize(self) -> RatFunc:
        return RatFunc(self.F, self.num, self.den)

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other) -> bool:
        o = self._coerce(other) if not isinstance(other, RatFunc) else other
        if o is NotImplemented:
            return NotImplemented
        return self.num == o.num and self.den == o.den and self.F == o.F

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.num, self.den))
        return self._hash

    def key(self) -> tuple:
        return (self.num, self.den)

    def __repr__(self) -> str:
        n = P.to_str(self.F, self.num)
        if self.den == (1,):
            return n
        d = P.to_str(self.F, self.den)
        if sum(1 for c in self.num if c) > 1:
            n = f"({n})"
        if sum(1 for c in self.den if c) > 1:
            d = f"({d})"
        return f"{n}/{d}"


@dataclass(frozen=True)
class Place:
    """A place of F_q(x): the infinite place, or a monic irreducible polynomial."""

    kind: str
    poly: tuple = ()

    @classmethod
    def infinity(cls) -> Place:
        return cls("infinite")

    @classmethod
    def finite(cls, F: FieldDesc, poly) -> Place:
        poly = P.strip(tuple(poly))
        if not poly or poly[-1] != 1 or not P.is_irreducible(F, poly):
            raise ValueError("a finite place needs a monic irreducible polynomial")
        return cls("finite", poly)

    @property
    def is_infinite(self) -> bool:
        return self.kind == "infinite"

    @property
    def degree(self) -> int:
        return 1 if self.is_infinite else len(self.poly) - 1

    def label(self, F: FieldDesc, var: str = "x") -> str:
        return "inf" if self.is_infinite else f"({P.to_str(F, self.poly, var)})"


def place_valuation(f: RatFunc, place: Place):
    """v_P(f); returns INF for f = 0."""
    if f.is_zero():
        return INF
    F = f.F
    if place.is_infinite:
        return P.deg(f.den) - P.deg(f.num)
    return _multiplicity(F, f.num, place.poly) - _multiplicity(F, f.den, place.poly)


def _multiplicity(F, a, pi) -> int:
    n = 0
    while len(a) >= len(pi):
        q, r = P.divmod_(F, a, pi)
        if r:
            break
        a = q
        n += 1
    return n


def support(f: RatFunc) -> list[Place]:
    """Zeros and poles of a nonzero f, finite places sorted, then infinity if present."""
    F = f.F
    places = []
    for poly_part in (f.num, f.den):
        if P.deg(poly_part) > 0:
            places.extend(Place("finite", g) for g, _ in P.factor(F, poly_part))
    places.sort(key=lambda pl: (len(pl.poly), pl.poly[::-1]))
    if P.deg(f.num) != P.deg(f.den):
        places.append(Place.infinity())
    return places


def poles(f: RatFunc) -> list[Place]:
    F = f.F
    out = [Place("finite", g) for g, _ in P.factor(F, f.den)] if P.deg(f.den) > 0 else []
    if P.deg(f.num) > P.deg(f.den):
        out.append(Place.infinity())
    return out


@dataclass
class PartialFractions:
    """f = poly_part + sum of principal parts, one per finite pole."""

    F: FieldDesc
    poly_part: tuple
    parts: list

    def recombine(self) -> RatFunc:
        total = RatFunc.from_poly(self.F, self.poly_part)
        for _, part in self.parts:
            total = total + part
        return total


def partial_fractions(f: RatFunc) -> PartialFractions:
    F = f.F
    q, r = P.divmod_(F, f.num, f.den)
    parts = []
    if r:
        for g, e in P.factor(F, f.den):
            block = P.pow_(F, g, e)
            rest = P.div_exact(F, f.den, block)
            a = P.mod(F, P.mul(F, r, P.invmod(F, P.mod(F, rest, block), block)), block)
            parts.append((Place("finite", g), RatFunc(F, a, block)))
    return PartialFractions(F, q, parts)


def padic_digits(F, a, pi, n: int) -> list:
    """Digits c_0..c_{n-1} (deg c_j < deg pi) with a = sum c_j pi^j."""
    out = []
    for _ in range(n):
        a, r = P.divmod_(F, a, pi)
        out.append(r)
    return out
