"""Finite fields F_q, q = p^k, with elements encoded as integers.

An element of F_{p^k} = F_p[T]/(m(T)) is stored as the integer
``sum(c_i * p**i)`` where ``c_0 + c_1 T + ... + c_{k-1} T^{k-1}`` is its
reduced representative.  The integers ``0..p-1`` are therefore the prime
subfield, and ``0``/``1`` are zero and one in every field.

Polynomial and tower code works directly on these integers through the
``FieldDesc`` methods; :class:`FqElem` is the operator-friendly wrapper used
at the public surface.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

from ..errors import DegreeOutOfRange, DivisionByZero, EvenCharacteristic, FieldMismatch, NonPrime

MAX_DEGREE = 8
_TABLE_LIMIT = 1 << 20


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    f = 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


class FieldDesc:
    """The field F_{p^k} with a fixed monic irreducible modulus over F_p."""

    __slots__ = ("p", "k", "q", "modulus", "_exp", "_log")

    def __init__(self, p: int, k: int, modulus: Sequence[int]):
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus = tuple(int(c) % p for c in modulus)
        if len(self.modulus) != k + 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree k")
        self._exp: list[int] | None = None
        self._log: list[int] | None = None
        if k > 1 and self.q <= _TABLE_LIMIT:
            self._build_tables()

    # -- identity -----------------------------------------------------------
    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldDesc) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self) -> int:
        return hash((self.p, self.modulus))

    def __repr__(self) -> str:
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k}, modulus={self.modulus})"

    @property
    def prime_field(self) -> FieldDesc:
        return fq_make(self.p, 1)

    # -- encoding -----------------------------------------------------------
    def coeffs(self, a: int) -> tuple[int, ...]:
        p = self.p
        out = []
        for _ in range(self.k):
            a, r = divmod(a, p)
            out.append(r)
        return tuple(out)

    def from_coeffs(self, cs: Sequence[int]) -> int:
        cs = [int(c) % self.p for c in cs]
        if len(cs) > self.k:
            cs = list(_reduce_digits(cs, self.modulus, self.p))
        v = 0
        for c in reversed(cs):
            v = v * self.p + c
        return v

    def from_int(self, n: int) -> int:
        return n % self.p

    def __call__(self, value: int | Sequence[int]) -> FqElem:
        if isinstance(value, int):
            return FqElem(self, self.from_int(value))
        return FqElem(self, self.from_coeffs(value))

    def elem(self, raw: int) -> FqElem:
        """Wrap an already-encoded integer."""
        return FqElem(self, raw)

    def elements(self) -> Iterator[FqElem]:
        for v in range(self.q):
            yield FqElem(self, v)

    # -- arithmetic on encoded integers -------------------------------------
    def add(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a + b) % self.p
        p = self.p
        out, scale = 0, 1
        while a or b:
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            out += ((ra + rb) % p) * scale
            scale *= p
        return out

    def neg(self, a: int) -> int:
        if self.k == 1:
            return -a % self.p
        p = self.p
        out, scale = 0, 1
        while a:
            a, r = divmod(a, p)
            out += (-r % p) * scale
            scale *= p
        return out

    def sub(self, a: int, b: int) -> int:
        if self.k == 1:
            return (a - b) % self.p
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if self.k == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]
        return self._mul_slow(a, b)

    def _mul_slow(self, a: int, b: int) -> int:
        p = self.p
        da, db = self.coeffs(a), self.coeffs(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        return self.from_coeffs(_reduce_digits(prod, self.modulus, p))

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero in " + repr(self))
        if self.k == 1:
            return pow(a, -1, self.p)
        if self._exp is not None:
            return self._exp[(-self._log[a]) % (self.q - 1)]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if self.k == 1:
            return pow(a, e, self.p)
        if a == 0:
            return 1 if e == 0 else 0
        if self._exp is not None:
            return self._exp[(self._log[a] * e) % (self.q - 1)]
        result = 1
        while e:
            if e & 1:
                result = self._mul_slow(result, a)
            a = self._mul_slow(a, a)
            e >>= 1
        return result

    def frobenius(self, a: int) -> int:
        return self.pow(a, self.p)

    def pth_root(self, a: int) -> int:
        # x -> x^p is bijective on F_q with inverse x -> x^(q/p)
        return self.pow(a, self.q // self.p)

    def _build_tables(self) -> None:
        n = self.q - 1
        factors = prime_factors(n)
        for g in range(2, self.q):
            if all(self._pow_slow(g, n // r) != 1 for r in factors):
                break
        else:  # pragma: no cover - F_q^* is always cyclic
            raise RuntimeError("no primitive element found")
        exp = [0] * n
        log = [0] * self.q
        v = 1
        for i in range(n):
            exp[i] = v
            log[v] = i
            v = self._mul_slow(v, g)
        self._exp, self._log = exp, log

    def _pow_slow(self, a: int, e: int) -> int:
        result = 1
        while e:
            if e & 1:
                result = self._mul_slow(result, a)
            a = self._mul_slow(a, a)
            e >>= 1
        return result


def _reduce_digits(cs: Sequence[int], modulus: Sequence[int], p: int) -> list[int]:
    cs = list(cs)
    k = len(modulus) - 1
    for i in range(len(cs) - 1, k - 1, -1):
        c = cs[i]
        if c:
            for j in range(k):
                cs[i - k + j] = (cs[i - k + j] - c * modulus[j]) % p
            cs[i] = 0
    return cs[:k]


class FqElem:
    """An element of a finite field, with the usual operators."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldDesc, value: int):
        self.field = field
        self.value = value

    @property
    def coeffs(self) -> tuple[int, ...]:
        return self.field.coeffs(self.value)

    def _coerce(self, other) -> int:
        if isinstance(other, FqElem):
            if other.field != self.field:
                raise FieldMismatch(f"{self.field!r} vs {other.field!r}")
            return other.value
        if isinstance(other, int):
            return self.field.from_int(other)
        return NotImplemented

    def __add__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FqElem(self.field, self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FqElem(self.field, self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FqElem(self.field, self.field.sub(b, self.value))

    def __neg__(self):
        return FqElem(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FqElem(self.field, self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FqElem(self.field, self.field.div(self.value, b))

    def __rtruediv__(self, other):
        b = self._coerce(other)
        if b is NotImplemented:
            return b
        return FqElem(self.field, self.field.div(b, self.value))

    def __pow__(self, e: int):
        return FqElem(self.field, self.field.pow(self.value, e))

    def inv(self) -> FqElem:
        return FqElem(self.field, self.field.inv(self.value))

    def frobenius(self) -> FqElem:
        return FqElem(self.field, self.field.frobenius(self.value))

    def pth_root(self) -> FqElem:
        return FqElem(self.field, self.field.pth_root(self.value))

    def is_zero(self) -> bool:
        return self.value == 0

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FqElem):
            return self.field == other.field and self.value == other.value
        if isinstance(other, int):
            return self.value == self.field.from_int(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.field, self.value))

    def __repr__(self) -> str:
        if self.field.k == 1:
            return str(self.value)
        terms = [f"{c}*T^{i}" if i else str(c) for i, c in enumerate(self.coeffs) if c]
        return "(" + (" + ".join(terms) or "0") + ")"


@lru_cache(maxsize=None)
def fq_make(p: int, k: int = 1) -> FieldDesc:
    """Return F_{p^k} with the lexicographically least monic irreducible modulus.

    Candidates ``T^k + c_{k-1} T^{k-1} + ... + c_0`` are searched in
    lexicographic order of ``(c_{k-1}, ..., c_0)``.
    """
    if not is_prime(p):
        raise NonPrime(p)
    if p == 2:
        raise EvenCharacteristic("characteristic 2 is excluded")
    if not 1 <= k <= MAX_DEGREE:
        raise DegreeOutOfRange(k)
    if k == 1:
        return FieldDesc(p, 1, (0, 1))
    from . import poly

    prime = fq_make(p, 1)
    for idx in range(p**k):
        high_first = []
        for _ in range(k):
            idx, r = divmod(idx, p)
            high_first.append(r)
        high_first.reverse()
        # high_first is (c_{k-1}, ..., c_0) in lexicographic order
        cand = tuple(reversed(high_first)) + (1,)
        if cand[0] == 0:
            continue
        if poly.is_irreducible(prime, cand):
            return FieldDesc(p, k, cand)
    raise AssertionError("no irreducible polynomial found")  # pragma: no cover
