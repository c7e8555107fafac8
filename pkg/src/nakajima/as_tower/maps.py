"""Substitution endomorphisms of a tower (curve automorphisms).

Two composition conventions appear here:

* ``map_compose(s, t)`` is composition of field maps, ``a -> s(t(a))``.
* ``s * t`` multiplies in the automorphism group acting on points, where
  ``s * t`` means "s first, then t".  On functions that is ``t`` applied
  before ``s``, i.e. ``map_compose(t, s)``.  Group words (``r*g*r``,
  ``t^-1*g*t``) are evaluated with this product.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import DivisionByZero, NotInvertible, TowerMismatch
from ..field_core import poly as P
from ..field_core.ratfunc import RatFunc
from .expr import parse_in_tower
from .tower import TowerElem, TowerField

DEFAULT_ORDER_CAP = 729


class FieldAuto:
    """x -> image_x, t_i -> image_t[i], extended to a ring homomorphism."""

    def __init__(self, tower: TowerField, image_x: TowerElem, image_t, name: str | None = None):
        image_t = list(image_t)
        if len(image_t) != tower.m:
            raise ValueError(f"need {tower.m} generator images, got {len(image_t)}")
        for e in [image_x, *image_t]:
            if not tower.same_as(e.tower):
                raise TowerMismatch("map image lives in another tower")
        self.tower = tower
        self.image_x = image_x
        self.image_t = image_t
        self.name = name
        self.verified = False
        self.order: int | None = None
        self._linear = _linear_poly(image_x)
        self._coeff_cache: dict = {}
        self._mono_cache: dict = {}
        self._key = None

    @classmethod
    def identity(cls, tower: TowerField) -> FieldAuto:
        f = cls(tower, tower.x(), tower.gens(), name="1")
        f.verified, f.order = True, 1
        return f

    @classmethod
    def from_strings(cls, tower: TowerField, image_x: str, image_t, params=None, name=None) -> FieldAuto:
        return cls(
            tower,
            parse_in_tower(tower, image_x, params),
            [parse_in_tower(tower, s, params) for s in image_t],
            name=name,
        )

    # -- identity and hashing -------------------------------------------------
    def key(self) -> tuple:
        if self._key is None:
            self._key = (self.image_x.key(), tuple(e.key() for e in self.image_t))
        return self._key

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldAuto) and self.tower.same_as(other.tower) and self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    def is_identity(self) -> bool:
        T = self.tower
        return self.image_x == T.x() and all(img == g for img, g in zip(self.image_t, T.gens()))

    def __repr__(self) -> str:
        T = self.tower
        imgs = ", ".join([repr(self.image_x)] + [repr(e) for e in self.image_t])
        vars_ = ", ".join((T.var,) + T.names)
        label = f"{self.name}: " if self.name else ""
        return f"{label}({vars_}) -> ({imgs})"

    # -- application -----------------------------------------------------------
    def __call__(self, a: TowerElem) -> TowerElem:
        return map_apply(self, a)

    def _coeff_image(self, c: RatFunc) -> TowerElem:
        T = self.tower
        if self._linear is not None:
            if self._linear == P.X:
                return T.from_ratfunc(c)
            return T.from_ratfunc(c.substitute(self._linear))
        key = c.key()
        hit = self._coeff_cache.get(key)
        if hit is None:
            num = self._poly_image(c.num)
            if c.den == P.ONE:
                hit = num
            else:
                dk = ("den", c.den)
                dinv = self._coeff_cache.get(dk)
                if dinv is None:
                    dinv = self._coeff_cache[dk] = self._poly_image(c.den).inv()
                hit = num * dinv
            self._coeff_cache[key] = hit
        return hit

    def _poly_image(self, a) -> TowerElem:
        T = self.tower
        if self.image_x.is_base():
            # rational substitution stays in F_q(x)
            g = self.image_x.base_value()
            acc = RatFunc.const(T.F, 0)
            for c in reversed(a):
                acc = acc * g + RatFunc.const(T.F, c)
            return T.from_ratfunc(acc)
        acc = T.zero()
        for c in reversed(a):
            acc = acc * self.image_x + T.const(T.F.elem(c))
        return acc

    def _mono_image(self, e: tuple) -> TowerElem:
        hit = self._mono_cache.get(e)
        if hit is None:
            T = self.tower
            hit = T.one()
            for i, k in enumerate(e):
                if k:
                    hit = hit * self._gen_power(i, k)
            self._mono_cache[e] = hit
        return hit

    def _gen_power(self, i: int, k: int) -> TowerElem:
        key = ("pow", i, k)
        hit = self._mono_cache.get(key)
        if hit is None:
            hit = self.image_t[i] if k == 1 else self._gen_power(i, k - 1) * self.image_t[i]
            self._mono_cache[key] = hit
        return hit

    # -- group structure (point-action product) ----------------------------------
    def __mul__(self, other: FieldAuto) -> FieldAuto:
        return map_compose(other, self)

    def __pow__(self, n: int) -> FieldAuto:
        if n < 0:
            return self.inverse() ** (-n)
        result = FieldAuto.identity(self.tower)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def compute_order(self, cap: int = DEFAULT_ORDER_CAP) -> int | None:
        if self.order is not None:
            return self.order
        power = self
        for n in range(1, cap + 1):
            if power.is_identity():
                self.order = n
                return n
            power = map_compose(self, power)
        return None

    def inverse(self) -> FieldAuto:
        n = self.compute_order()
        if n is None:
            raise ValueError("map has no finite order within the cap; inverse unavailable")
        inv = FieldAuto.identity(self.tower)
        for _ in range(n - 1):
            inv = map_compose(self, inv)
        inv.verified = self.verified
        inv.order = n
        if self.name:
            inv.name = f"{self.name}^-1"
        return inv


def _linear_poly(image_x: TowerElem):
    """If image_x = alpha*x + beta with constants, return that polynomial."""
    if not image_x.is_base():
        return None
    f = image_x.base_value()
    if f.den == P.ONE and len(f.num) == 2:
        return f.num
    return None


def map_apply(sigma: FieldAuto, a: TowerElem) -> TowerElem:
    """The substitution x -> image_x, t_i -> image_t[i], in normal form."""
    if not sigma.tower.same_as(a.tower):
        raise TowerMismatch("map and element belong to different towers")
    T = sigma.tower
    result = T.zero()
    for e, c in a.terms.items():
        ci = sigma._coeff_image(c)
        if any(e):
            result = result + ci * sigma._mono_image(e)
        else:
            result = result + ci
    return result


def map_compose(sigma: FieldAuto, tau: FieldAuto) -> FieldAuto:
    """The field map a -> sigma(tau(a))."""
    if not sigma.tower.same_as(tau.tower):
        raise TowerMismatch("maps on different towers")
    out = FieldAuto(
        sigma.tower,
        map_apply(sigma, tau.image_x),
        [map_apply(sigma, e) for e in tau.image_t],
    )
    out.verified = sigma.verified and tau.verified
    return out


@dataclass
class MapVerdict:
    """Outcome of :func:`map_verify`; truthy iff the map is an automorphism."""

    ok: bool
    reason: str = ""
    order: int | None = None

    def __bool__(self) -> bool:
        return self.ok


def map_verify(sigma: FieldAuto, cap: int = DEFAULT_ORDER_CAP) -> MapVerdict:
    """Check every defining relation and certify bijectivity by finite order."""
    T = sigma.tower
    if sigma.image_x.is_base() and sigma.image_x.base_value().is_const():
        return MapVerdict(False, f"{T.var} is sent to a constant")
    try:
        for i, (name, phi) in enumerate(zip(T.names, T.phis)):
            img = sigma.image_t[i]
            lhs = img ** T.p - img
            rhs = map_apply(sigma, phi)
            if lhs != rhs:
                return MapVerdict(False, f"relation for {name} fails: image^p - image != image of {phi!r}")
    except (DivisionByZero, NotInvertible) as exc:
        return MapVerdict(False, f"substitution is undefined: {exc}")
    order = sigma.compute_order(cap)
    if order is None:
        return MapVerdict(False, f"no finite order up to {cap}")
    sigma.verified = True
    return MapVerdict(True, "", order)


def identity_check(lhs: TowerElem, rhs: TowerElem) -> bool:
    """Exact equality modulo the tower relations."""
    if not lhs.tower.same_as(rhs.tower):
        return False
    return lhs.key() == rhs.key()
