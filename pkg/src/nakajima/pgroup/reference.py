"""Reference groups built directly from matrices, permutations or semidirect products.

Small-group catalogue labels such as ``S(81,9)`` are attached as names only;
each construction is checked against the relations or element-order counts
that identify it.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product

import numpy as np

from ..errors import UnknownGroup
from .group import FiniteGroup, census, closure, nilpotency_class


# -- abelian -------------------------------------------------------------------
def abelian(*orders: int) -> FiniteGroup:
    """C_{n1} x C_{n2} x ... on exponent vectors."""
    orders = tuple(orders)
    k = len(orders)
    gens = [tuple(1 if i == j else 0 for i in range(k)) for j in range(k)]

    def mul(a, b):
        return tuple((x + y) % n for x, y, n in zip(a, b, orders))

    name = " x ".join(f"C{n}" for n in orders)
    return closure(gens, cap=_prod(orders) + 1, mul=mul, identity=(0,) * k, origin=name)


def cyclic(n: int) -> FiniteGroup:
    return abelian(n)


def _prod(xs) -> int:
    out = 1
    for x in xs:
        out *= x
    return out


# -- matrices ----------------------------------------------------------------------
def matrix_group(gens, p: int, origin: str = "from-matrices", cap: int = 3**7) -> FiniteGroup:
    """Closure of square matrices over F_p (rows as tuples)."""
    gens = [tuple(tuple(int(v) % p for v in row) for row in g) for g in gens]
    n = len(gens[0])
    ident = tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))

    def mul(a, b):
        return tuple(
            tuple(sum(a[i][k] * b[k][j] for k in range(n)) % p for j in range(n)) for i in range(n)
        )

    return closure(gens, cap=cap, mul=mul, identity=ident, origin=origin)


def ut3(p: int) -> FiniteGroup:
    """Unipotent upper-triangular 3x3 matrices over F_p (Heisenberg group)."""
    e12 = ((1, 1, 0), (0, 1, 0), (0, 0, 1))
    e23 = ((1, 0, 0), (0, 1, 1), (0, 0, 1))
    return matrix_group([e12, e23], p, origin=f"UT(3,{p})")


# -- permutations ----------------------------------------------------------------------
def parse_cycles(text: str, degree: int) -> tuple:
    """Cycle notation like ``(0 1 2)(3 4 5)`` -> image tuple on 0..degree-1."""
    perm = list(range(degree))
    for chunk in text.replace(")", ")|").split("|"):
        chunk = chunk.strip()
        if not chunk:
            continue
        pts = [int(t) for t in chunk.strip("()").replace(",", " ").split()]
        for a, b in zip(pts, pts[1:] + pts[:1]):
            perm[a] = b
    return tuple(perm)


def wreath_c3_c3() -> FiniteGroup:
    """C3 wr C3 = Sylow 3-subgroup of Sym(9), acting on 9 points."""
    a = parse_cycles("(0 1 2)", 9)
    b = parse_cycles("(0 3 6)(1 4 7)(2 5 8)", 9)
    return closure([a, b], origin="C3 wr C3")


# -- extensions of an abelian normal subgroup by a cyclic group of order m --------------
def cyclic_extension(moduli, phi, m: int, n0=None, origin: str = "extension") -> FiniteGroup:
    """Elements (v, k) with v in prod Z/moduli, c^m = n0 and c v c^-1 = phi(v).

    ``phi`` is a function on vectors; it must be an automorphism with
    phi^m = identity and phi(n0) = n0 for the product to be associative.
    """
    moduli = tuple(moduli)
    r = len(moduli)
    n0 = tuple(n0) if n0 is not None else (0,) * r
    vecs = list(product(*(range(q) for q in moduli)))
    pow_tab = [{v: v for v in vecs}]
    for _ in range(m - 1):
        prev = pow_tab[-1]
        pow_tab.append({v: tuple(phi(prev[v])) for v in vecs})

    def add(a, b):
        return tuple((x + y) % q for x, y, q in zip(a, b, moduli))

    def mul(a, b):
        va, ka = a
        vb, kb = b
        v = add(va, pow_tab[ka][vb])
        k = ka + kb
        if k >= m:
            v = add(v, n0)
            k -= m
        return (v, k)

    gens = [(tuple(1 if i == j else 0 for i in range(r)), 0) for j in range(r)]
    gens.append(((0,) * r, 1))
    return closure(gens, cap=len(vecs) * m + 1, mul=mul, identity=((0,) * r, 0), origin=origin)


def _s81(phi, name):
    G = cyclic_extension((9, 3), phi, 3, origin=name)
    G.names = ["a", "b", "c"]
    return G


@lru_cache(maxsize=None)
def s81_9() -> FiniteGroup:
    """(C9 x C3) : C3 with c a c^-1 = a b^-1, c b c^-1 = a^3 b."""
    return _s81(lambda v: ((v[0] + 3 * v[1]) % 9, (-v[0] + v[1]) % 3), "S(81,9)")


@lru_cache(maxsize=None)
def s81_8() -> FiniteGroup:
    """(C9 x C3) : C3 with c a c^-1 = a b, c b c^-1 = a^3 b."""
    return _s81(lambda v: ((v[0] + 3 * v[1]) % 9, (v[0] + v[1]) % 3), "S(81,8)")


S81_PRESENTATIONS = {
    "S(81,9)": ["a^9", "b^3", "c^3", "a*b = b*a", "c*a*c^-1 = a*b^-1", "c*b*c^-1 = a^3*b"],
    "S(81,8)": ["a^9", "b^3", "c^3", "a*b = b*a", "c*a*c^-1 = a*b", "c*b*c^-1 = a^3*b"],
}


@lru_cache(maxsize=None)
def s81_10() -> FiniteGroup | None:
    """A maximal-class group of order 81 with exactly 8 elements of order 3.

    Found by searching non-split extensions of C9 x C3 by C3 in a fixed order;
    among the maximal-class groups of order 81 only one has that census.
    """
    for alpha, beta, gamma, delta in product(range(9), (0, 3, 6), range(3), range(3)):
        def phi(v, a=alpha, b=beta, g=gamma, d=delta):
            return ((a * v[0] + b * v[1]) % 9, (g * v[0] + d * v[1]) % 3)

        images = {phi((x, y)) for x in range(9) for y in range(3)}
        if len(images) != 27:
            continue
        if any(phi(phi(phi((x, y)))) != (x, y) for x, y in ((1, 0), (0, 1))):
            continue
        if phi((1, 0)) == (1, 0) and phi((0, 1)) == (0, 1):
            continue
        for n0 in product(range(9), range(3)):
            if phi(n0) != n0:
                continue
            G = cyclic_extension((9, 3), phi, 3, n0, origin="S(81,10)")
            if G.n != 81:
                continue
            if census(G) == {1: 1, 3: 8, 9: 72} and nilpotency_class(G) == 3:
                return G
    return None


@lru_cache(maxsize=None)
def s243_candidate() -> FiniteGroup:
    """(C9 x C9) : C3 with the generator acting by the order-3 matrix [[0,-1],[1,-1]]."""
    G = cyclic_extension((9, 9), lambda v: ((-v[1]) % 9, (v[0] - v[1]) % 9), 3, origin="(C9 x C9) : C3")
    return G


def quotient(G: FiniteGroup, N) -> FiniteGroup:
    """G/N for a normal subgroup given by its index set."""
    N = np.asarray(sorted(int(x) for x in N), dtype=np.int64)
    coset_of = np.full(G.n, -1, dtype=np.int64)
    reps = []
    for g in range(G.n):
        if coset_of[g] < 0:
            coset_of[G.table[g, N]] = len(reps)
            reps.append(g)
    k = len(reps)
    reps_arr = np.asarray(reps, dtype=np.int64)
    table = coset_of[G.table[np.ix_(reps_arr, reps_arr)]]
    # normality: the product of cosets must not depend on representatives
    probe = coset_of[G.table[np.ix_(np.arange(G.n), reps_arr)]]
    if not (probe == table[coset_of]).all():
        raise ValueError("subgroup is not normal")
    return FiniteGroup(table, reps, origin=f"{G.origin} / N")


REFERENCE_BUILDERS = {
    "UT(3,3)": lambda: ut3(3),
    "UT(3,5)": lambda: ut3(5),
    "C3xC3": lambda: abelian(3, 3),
    "C3xC3xC3": lambda: abelian(3, 3, 3),
    "C3^4": lambda: abelian(3, 3, 3, 3),
    "C9": lambda: cyclic(9),
    "C27": lambda: cyclic(27),
    "C9xC3": lambda: abelian(9, 3),
    "C9xC9": lambda: abelian(9, 9),
    "C9:C3": lambda: cyclic_extension((9,), lambda v: ((4 * v[0]) % 9,), 3, origin="C9 : C3"),
    "C3wrC3": wreath_c3_c3,
    "S(81,7)": wreath_c3_c3,
    "S(81,8)": s81_8,
    "S(81,9)": s81_9,
    "S(81,10)": s81_10,
    "(C9xC9):C3": s243_candidate,
}


def identify(G: FiniteGroup) -> str | None:
    """Name of the first reference construction isomorphic to G, if any."""
    from .structure import is_isomorphic

    for name in REFERENCE_BUILDERS:
        R = reference_group(name)
        if R.n == G.n and is_isomorphic(G, R):
            return name
    return None


@lru_cache(maxsize=None)
def reference_group(name: str) -> FiniteGroup:
    try:
        builder = REFERENCE_BUILDERS[name]
    except KeyError:
        raise UnknownGroup(f"unknown reference group {name!r}; known: {sorted(REFERENCE_BUILDERS)}") from None
    G = builder()
    if G is None:
        raise UnknownGroup(f"no construction found for {name}")
    return G
