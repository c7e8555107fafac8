"""Counting unramified p-extensions, automorphism-group orders and family genera."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .errors import NonIntegralCount, OrderTooLarge
from .pgroup.group import FiniteGroup, rank_d
from .pgroup.structure import _element_classes, _injective_on_domain, extend_hom, minimal_generating_set
from .ramify import CoverData, ds_prank

AUT_ORDER_LIMIT = 81


@dataclass(frozen=True)
class GroupProfile:
    p: int
    n: int
    d: int
    alpha: int | None = None
    label: str = ""

    def __post_init__(self):
        if not 1 <= self.d <= self.n:
            raise ValueError(f"need 1 <= d <= n, got d={self.d}, n={self.n}")
        if self.alpha is not None and self.alpha < 1:
            raise ValueError("alpha must be positive")

    @classmethod
    def of(cls, G: FiniteGroup, label: str = "", brute_force: bool = True) -> GroupProfile:
        p = G.p
        n = G.n.bit_length() if p is None else round(np.log(G.n) / np.log(p))
        alpha = aut_order_bruteforce(G) if brute_force else None
        return cls(p, n, rank_d(G), alpha, label or G.origin)


# -- automorphism groups by search ----------------------------------------------------
def _complete(G: FiniteGroup, gens, images, cands) -> bool:
    """Can gens[:len(images)] -> images be extended to an automorphism?"""
    j = len(images)
    if j == len(gens):
        phi = extend_hom(G, gens, G, images)
        return phi is not None and bool((phi >= 0).all()) and _injective_on_domain(phi)
    for h in cands[j]:
        images.append(h)
        phi = extend_hom(G, gens[: j + 1], G, images)
        if phi is not None and _injective_on_domain(phi) and _complete(G, gens, images, cands):
            images.pop()
            return True
        images.pop()
    return False


def aut_order_bruteforce(G: FiniteGroup) -> int:
    """|Aut(G)| for |G| <= 81, by counting generator images.

    An automorphism is fixed by the images of a minimal generating set.  Aut(G)
    acts regularly on the admissible image tuples, so the count factors as a
    chain: with the first j-1 images fixed to the generators themselves, the
    number of admissible j-th images is the index of the next stabilizer.
    Admissibility is decided by an existence search for the remaining images.
    """
    if G.n > AUT_ORDER_LIMIT:
        raise OrderTooLarge(f"|G| = {G.n} exceeds {AUT_ORDER_LIMIT}")
    gens = minimal_generating_set(G)
    if not gens:
        return 1
    cls = _element_classes(G)
    cands = [np.flatnonzero(cls == cls[g]).tolist() for g in gens]
    total = 1
    for j in range(len(gens)):
        prefix = list(gens[:j])
        count = 0
        for h in cands[j]:
            images = prefix + [h]
            phi = extend_hom(G, gens[: j + 1], G, images)
            if phi is None or not _injective_on_domain(phi):
                continue
            if _complete(G, gens, images, cands):
                count += 1
        total *= count
    return total


# -- closed formulas --------------------------------------------------------------------
def gl_order(n: int, q: int) -> int:
    out = 1
    for j in range(n):
        out *= q**n - q**j
    return out


def gl_order_bruteforce(n: int, p: int) -> int:
    """Count invertible n x n matrices over F_p by rank (tiny n and p only)."""
    count = 0
    for entries in product(range(p), repeat=n * n):
        M = [list(entries[i * n:(i + 1) * n]) for i in range(n)]
        if _rank_mod_p(M, p) == n:
            count += 1
    return count


def _rank_mod_p(M, p) -> int:
    M = [row[:] for row in M]
    r = 0
    for c in range(len(M[0])):
        piv = next((i for i in range(r, len(M)) if M[i][c] % p), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = pow(M[r][c], -1, p)
        for i in range(len(M)):
            if i != r and M[i][c] % p:
                f = M[i][c] * inv
                M[i] = [(a - f * b) % p for a, b in zip(M[i], M[r])]
        r += 1
    return r


def gl2_zmod_order(p: int, e: int) -> int:
    """|GL(2, Z/p^e)| = |GL(2, p)| * p^(4(e-1))."""
    return gl_order(2, p) * p ** (4 * (e - 1))


def bh_bound(p: int, n: int, d: int) -> int:
    """p^(d(n-d)) * prod_{j<d} (p^d - p^j); |Aut(G)| divides it."""
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    return p ** (d * (n - d)) * gl_order(d, p)


def sylow_bh_bound(p: int, n: int, d: int) -> int:
    """p-part of bh_bound: p^(d(n-d) + d(d-1)/2)."""
    if not 1 <= d <= n:
        raise ValueError(f"need 1 <= d <= n, got d={d}, n={n}")
    return p ** (d * (n - d) + d * (d - 1) // 2)


def frbound_count(profile: GroupProfile, gamma: int) -> int:
    """Number of unramified extensions with group G over a curve of p-rank gamma."""
    p, n, d = profile.p, profile.n, profile.d
    if d > gamma:
        return 0
    if profile.alpha is None:
        raise ValueError("the automorphism-group order is unknown")
    num = p ** (gamma * (n - d))
    for j in range(d):
        num *= p**gamma - p**j
    q, r = divmod(num, profile.alpha)
    if r:
        raise NonIntegralCount(f"{num} is not divisible by alpha = {profile.alpha}")
    return q


def not_div_p_check(count: int, p: int) -> bool:
    if count < 1:
        raise ValueError("count must be positive")
    return count % p != 0


# -- the infinite families -------------------------------------------------------------
FAMILIES = ("base-curve", "artin-mumford")


def family_cover(p: int, N: int, family: str) -> CoverData:
    """The unramified cover with abelian group (C_{p^N})^gamma over the family's base curve."""
    if family == "base-curve":
        base = p - 1
    elif family == "artin-mumford":
        base = (p - 1) ** 2
    else:
        raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")
    return CoverData(p, p ** (N * base), base, base, [])


def family_genus(p: int, N: int, family: str) -> int:
    if N < 1:
        raise ValueError("N must be at least 1")
    if family == "base-curve":
        g = p ** ((p - 1) * N) * (p - 2) + 1
    elif family == "artin-mumford":
        g = p ** (N * (p - 1) ** 2 + 1) * (p - 2) + 1
    else:
        raise ValueError(f"unknown family {family!r}; choose from {FAMILIES}")
    check = ds_prank(family_cover(p, N, family))
    if check != g:
        raise ArithmeticError(f"closed form {g} disagrees with the p-rank count {check}")
    return g


__all__ = [
    "AUT_ORDER_LIMIT", "FAMILIES", "GroupProfile", "aut_order_bruteforce", "bh_bound",
    "family_cover", "family_genus", "frbound_count", "gl2_zmod_order", "gl_order",
    "gl_order_bruteforce", "not_div_p_check", "sylow_bh_bound",
]
