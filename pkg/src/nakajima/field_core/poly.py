"""Dense univariate polynomials over a :class:`FieldDesc`.

A polynomial is a tuple of encoded field elements, lowest degree first, with
no trailing zeros; the zero polynomial is ``()``.  Every function takes the
field as its first argument.  Prime fields get inlined integer arithmetic,
which is where almost all of the tower workload lands.
"""

from __future__ import annotations

import random
from typing import Sequence

from ..errors import DivisionByZero

Poly = tuple

ZERO: Poly = ()
ONE: Poly = (1,)
X: Poly = (0, 1)

_KRONECKER_MIN = 24


def strip(a: Sequence[int]) -> Poly:
    n = len(a)
    while n and not a[n - 1]:
        n -= 1
    return tuple(a[:n])


def deg(a: Poly) -> int:
    return len(a) - 1


def lead(a: Poly) -> int:
    return a[-1] if a else 0


def const(F, c: int) -> Poly:
    return (c,) if c else ()


def monomial(F, c: int, n: int) -> Poly:
    return (0,) * n + (c,) if c else ()


def add(F, a: Poly, b: Poly) -> Poly:
    if len(a) < len(b):
        a, b = b, a
    if not b:
        return a
    if F.k == 1:
        p = F.p
        out = [(x + y) % p for x, y in zip(a, b)]
    else:
        out = [F.add(x, y) for x, y in zip(a, b)]
    out.extend(a[len(b):])
    return strip(out)


def neg(F, a: Poly) -> Poly:
    if F.k == 1:
        p = F.p
        return tuple(-x % p for x in a)
    return tuple(F.neg(x) for x in a)


def sub(F, a: Poly, b: Poly) -> Poly:
    return add(F, a, neg(F, b))


def scale(F, a: Poly, c: int) -> Poly:
    if not c:
        return ()
    if c == 1:
        return a
    if F.k == 1:
        p = F.p
        return tuple(x * c % p for x in a)
    return tuple(F.mul(x, c) for x in a)


def shift(a: Poly, n: int) -> Poly:
    """Multiply by x^n."""
    return (0,) * n + a if a else ()


def mul(F, a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    if len(a) == 1:
        return scale(F, b, a[0])
    if len(b) == 1:
        return scale(F, a, b[0])
    if F.k == 1:
        if min(len(a), len(b)) >= _KRONECKER_MIN:
            return _mul_kronecker(F.p, a, b)
        p = F.p
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return strip([c % p for c in out])
    out = [0] * (len(a) + len(b) - 1)
    fm, fa = F.mul, F.add
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = fa(out[i + j], fm(x, y))
    return strip(out)


def _mul_kronecker(p: int, a: Poly, b: Poly) -> Poly:
    # pack coefficients into big integers, multiply once, unpack
    bound = (p - 1) ** 2 * min(len(a), len(b))
    nbytes = (bound.bit_length() + 7) // 8
    A = int.from_bytes(b"".join(c.to_bytes(nbytes, "little") for c in a), "little")
    B = int.from_bytes(b"".join(c.to_bytes(nbytes, "little") for c in b), "little")
    n = len(a) + len(b) - 1
    raw = (A * B).to_bytes(n * nbytes, "little")
    return strip([int.from_bytes(raw[i * nbytes:(i + 1) * nbytes], "little") % p for i in range(n)])


def pow_(F, a: Poly, e: int) -> Poly:
    result: Poly = ONE
    while e:
        if e & 1:
            result = mul(F, result, a)
        e >>= 1
        if e:
            a = mul(F, a, a)
    return result


def divmod_(F, a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise DivisionByZero("polynomial division by zero")
    if len(a) < len(b):
        return (), a
    db = len(b) - 1
    r = list(a)
    q = [0] * (len(a) - db)
    if F.k == 1:
        p = F.p
        inv_lc = pow(b[-1], -1, p)
        for i in range(len(a) - 1, db - 1, -1):
            c = r[i] % p
            if c:
                c = c * inv_lc % p
                q[i - db] = c
                off = i - db
                for j in range(db):
                    r[off + j] -= c * b[j]
            r[i] = 0
        return strip(q), strip([x % p for x in r[:db]])
    inv_lc = F.inv(b[-1])
    for i in range(len(a) - 1, db - 1, -1):
        c = r[i]
        if c:
            c = F.mul(c, inv_lc)
            q[i - db] = c
            off = i - db
            for j in range(db):
                if b[j]:
                    r[off + j] = F.sub(r[off + j], F.mul(c, b[j]))
        r[i] = 0
    return strip(q), strip(r[:db])


def mod(F, a: Poly, b: Poly) -> Poly:
    return divmod_(F, a, b)[1]


def div_exact(F, a: Poly, b: Poly) -> Poly:
    q, r = divmod_(F, a, b)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return q


def monic(F, a: Poly) -> Poly:
    if not a or a[-1] == 1:
        return a
    return scale(F, a, F.inv(a[-1]))


def gcd(F, a: Poly, b: Poly) -> Poly:
    """Monic gcd; gcd(0, 0) = 0."""
    if len(a) < len(b):
        a, b = b, a
    if len(b) == 1 or (b and len(a) == 1):
        return ONE
    while b:
        a, b = b, mod(F, a, b)
        if len(b) == 1:
            return ONE
    return monic(F, a)


def xgcd(F, a: Poly, b: Poly) -> tuple[Poly, Poly, Poly]:
    """Return (g, s, t) with s*a + t*b = g monic."""
    r0, r1 = a, b
    s0, s1 = ONE, ZERO
    t0, t1 = ZERO, ONE
    while r1:
        q, r = divmod_(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, sub(F, s0, mul(F, q, s1))
        t0, t1 = t1, sub(F, t0, mul(F, q, t1))
    if not r0:
        return ZERO, ZERO, ZERO
    c = F.inv(r0[-1])
    return scale(F, r0, c), scale(F, s0, c), scale(F, t0, c)


def invmod(F, a: Poly, m: Poly) -> Poly:
    g, s, _ = xgcd(F, a, m)
    if g != ONE:
        raise DivisionByZero("not invertible modulo")
    return mod(F, s, m)


def powmod(F, a: Poly, e: int, m: Poly) -> Poly:
    result: Poly = mod(F, ONE, m)
    a = mod(F, a, m)
    while e:
        if e & 1:
            result = mod(F, mul(F, result, a), m)
        e >>= 1
        if e:
            a = mod(F, mul(F, a, a), m)
    return result


def evaluate(F, a: Poly, x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc


def compose(F, a: Poly, b: Poly) -> Poly:
    """a(b(x))."""
    acc: Poly = ZERO
    for c in reversed(a):
        acc = add(F, mul(F, acc, b), const(F, c))
    return acc


def derivative(F, a: Poly) -> Poly:
    return strip([F.mul(F.from_int(i), c) for i, c in enumerate(a)][1:])


def frobenius_poly(F, a: Poly) -> Poly:
    """Apply x -> x^p to the coefficients only."""
    return tuple(F.frobenius(c) for c in a)


def pth_root_poly(F, a: Poly) -> Poly:
    """For a with a' = 0, return b with b^p = a."""
    p = F.p
    return strip([F.pth_root(c) for c in a[::p]])


def is_irreducible(F, f: Poly) -> bool:
    """Rabin's test over F_q."""
    n = deg(f)
    if n < 1:
        return False
    if n == 1:
        return True
    f = monic(F, f)
    q = F.q
    h = powmod(F, X, q**n, f)
    if h != mod(F, X, f):
        return False
    for r in _prime_divisors(n):
        h = powmod(F, X, q ** (n // r), f)
        if gcd(F, sub(F, h, X), f) != ONE:
            return False
    return True


def _prime_divisors(n: int) -> list[int]:
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def squarefree_decomposition(F, f: Poly) -> list[tuple[Poly, int]]:
    """Yun/Musser decomposition in characteristic p: f = prod g_i^{e_i}."""
    f = monic(F, f)
    if deg(f) < 1:
        return []
    out: list[tuple[Poly, int]] = []
    p = F.p
    df = derivative(F, f)
    if not df:
        return [(g, e * p) for g, e in squarefree_decomposition(F, pth_root_poly(F, f))]
    c = gcd(F, f, df)
    w = div_exact(F, f, c)
    i = 1
    while deg(w) > 0:
        y = gcd(F, w, c)
        z = div_exact(F, w, y)
        if deg(z) > 0:
            out.append((z, i))
        i += 1
        w = y
        c = div_exact(F, c, y)
    if deg(c) > 0:
        out.extend((g, e * p) for g, e in squarefree_decomposition(F, pth_root_poly(F, c)))
    return out


def distinct_degree(F, f: Poly) -> list[tuple[Poly, int]]:
    out = []
    i = 1
    h = X
    q = F.q
    while deg(f) >= 2 * i:
        h = powmod(F, h, q, f)
        g = gcd(F, f, sub(F, h, X))
        if g != ONE:
            out.append((g, i))
            f = div_exact(F, f, g)
            h = mod(F, h, f)
        i += 1
    if deg(f) > 0:
        out.append((f, deg(f)))
    return out


def equal_degree(F, f: Poly, d: int, rng: random.Random) -> list[Poly]:
    """Cantor-Zassenhaus splitting of a product of degree-d irreducibles."""
    n = deg(f)
    if n == d:
        return [f]
    q = F.q
    e = (q**d - 1) // 2
    while True:
        a = strip([rng.randrange(q) for _ in range(n)])
        if deg(a) < 1:
            continue
        g = gcd(F, a, f)
        if g == ONE:
            g = gcd(F, sub(F, powmod(F, a, e, f), ONE), f)
        if 0 < deg(g) < n:
            return equal_degree(F, g, d, rng) + equal_degree(F, div_exact(F, f, g), d, rng)


def factor(F, f: Poly) -> list[tuple[Poly, int]]:
    """Monic irreducible factorization, sorted by (degree, coefficients)."""
    rng = random.Random(0x5EED)
    found: dict[Poly, int] = {}
    for g, e in squarefree_decomposition(F, f):
        for h, d in distinct_degree(F, g):
            for irr in equal_degree(F, h, d, rng):
                irr = monic(F, irr)
                found[irr] = found.get(irr, 0) + e
    return sorted(found.items(), key=lambda t: (len(t[0]), t[0][::-1]))


def to_str(F, a: Poly, var: str = "x") -> str:
    if not a:
        return "0"
    terms = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if not c:
            continue
        cs = repr(F.elem(c)) if F.k > 1 else str(c)
        if i == 0:
            terms.append(cs)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            terms.append(mono if c == 1 else f"{cs}*{mono}")
    return " + ".join(terms)
