"""Finite groups as Cayley tables, built by closure from generators.

Elements can be anything with a product: field automorphisms, permutations
(tuples), matrices (tuples of rows) or semidirect-product pairs.  Once the
closure is complete everything runs on the integer multiplication table, with
index 0 the identity.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from math import lcm
from typing import Callable, Sequence

import numpy as np

from ..errors import CapExceeded, UnverifiedGenerator

DEFAULT_CAP = 3**7


class FiniteGroup:
    """A finite group given by its multiplication table."""

    def __init__(self, table: np.ndarray, elements: Sequence | None = None, gens=(), origin: str = "table",
                 names: Sequence[str] | None = None):
        self.table = np.asarray(table, dtype=np.int32)
        self.n = self.table.shape[0]
        self.elements = list(elements) if elements is not None else list(range(self.n))
        self.gens = list(gens)
        self.origin = origin
        self.names = list(names) if names is not None else None
        self.inv = np.argmin(self.table, axis=1).astype(np.int32)  # the column holding 0
        self._orders = None
        self._fp = None
        self._key_index = None
        self._rows = None

    # -- basics ------------------------------------------------------------------
    @property
    def order(self) -> int:
        return self.n

    def __len__(self) -> int:
        return self.n

    def rows(self) -> list[list[int]]:
        """The table as nested Python lists (fast scalar access)."""
        if self._rows is None:
            self._rows = self.table.tolist()
        return self._rows

    def mul(self, a: int, b: int) -> int:
        return self.rows()[a][b]

    def power(self, a: int, k: int) -> int:
        if k < 0:
            a, k = int(self.inv[a]), -k
        out = 0
        while k:
            if k & 1:
                out = self.rows()[out][a]
            a = self.rows()[a][a]
            k >>= 1
        return out

    def index_of(self, obj, key: Callable | None = None) -> int | None:
        key = key or getattr(self, "key", None) or _default_key(obj)
        if self._key_index is None:
            self._key_index = {key(e): i for i, e in enumerate(self.elements)}
        return self._key_index.get(key(obj))

    def orders(self) -> np.ndarray:
        if self._orders is None:
            self._orders = element_orders(self)
        return self._orders

    @property
    def p(self) -> int | None:
        """The prime when the order is a prime power, else None."""
        n = self.n
        if n == 1:
            return None
        q = 2
        while n % q:
            q += 1
        while n % q == 0:
            n //= q
        return q if n == 1 else None

    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    def subgroup(self, members, gens=None) -> FiniteGroup:
        """The subgroup on ``members`` (indices into self), relabelled."""
        members = sorted(int(m) for m in members)
        if members[0] != 0:
            raise ValueError("a subgroup contains the identity")
        pos = np.full(self.n, -1, dtype=np.int32)
        pos[members] = np.arange(len(members), dtype=np.int32)
        sub = pos[self.table[np.ix_(members, members)]]
        if (sub < 0).any():
            raise ValueError("members are not closed under multiplication")
        g = [int(pos[x]) for x in gens] if gens is not None else []
        out = FiniteGroup(sub, [self.elements[m] for m in members], g, origin=f"subgroup of {self.origin}")
        out.parent_indices = members
        return out

    def fingerprint(self) -> Fingerprint:
        if self._fp is None:
            self._fp = fingerprint(self)
        return self._fp

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.n}, origin={self.origin!r})"


def _default_key(obj):
    k = getattr(obj, "key", None)
    return (lambda e: e.key()) if callable(k) else (lambda e: e)


# -- closure ---------------------------------------------------------------------
def perm_mul(a: tuple, b: tuple) -> tuple:
    """Left-to-right product: apply a, then b."""
    return tuple(b[i] for i in a)


def closure(gens: Sequence, cap: int = DEFAULT_CAP, *, mul: Callable | None = None, identity=None,
            key: Callable | None = None, origin: str | None = None) -> FiniteGroup:
    """Enumerate <gens> breadth-first and build its Cayley table.

    Each new element is recorded with the (element, generator) edge that first
    reached it; the full table is then filled column by column along those
    edges, so only |G| * len(gens) products of the underlying objects are
    ever formed.
    """
    gens = list(gens)
    mul, identity, key, origin = _resolve_kind(gens, mul, identity, key, origin)
    elems = [identity]
    index = {key(identity): 0}
    parent: list[tuple[int, int]] = [(-1, -1)]
    right: list[list[int]] = [[] for _ in gens]
    i = 0
    while i < len(elems):
        e = elems[i]
        for gi, g in enumerate(gens):
            prod = mul(e, g)
            k = key(prod)
            j = index.get(k)
            if j is None:
                j = len(elems)
                if j >= cap:
                    raise CapExceeded(f"closure exceeded {cap} elements")
                index[k] = j
                elems.append(prod)
                parent.append((i, gi))
            right[gi].append(j)
        i += 1
    n = len(elems)
    R = [np.asarray(r, dtype=np.int32) for r in right]
    table = np.empty((n, n), dtype=np.int32)
    table[:, 0] = np.arange(n, dtype=np.int32)
    for j in range(1, n):
        src, gi = parent[j]
        table[:, j] = R[gi][table[:, src]]
    gen_idx = [index[key(g)] for g in gens]
    G = FiniteGroup(table, elems, gen_idx, origin=origin)
    G._key_index = index
    G.key = key
    return G


def _resolve_kind(gens, mul, identity, key, origin):
    from ..as_tower.maps import FieldAuto

    if gens and isinstance(gens[0], FieldAuto):
        for g in gens:
            if not g.verified:
                raise UnverifiedGenerator(f"map {g.name or g!r} has not passed verification")
        T = gens[0].tower
        return (mul or (lambda a, b: a * b), identity or FieldAuto.identity(T),
                key or (lambda e: e.key()), origin or "from-maps")
    if mul is None and gens and isinstance(gens[0], tuple) and gens[0] and isinstance(gens[0][0], int):
        n = len(gens[0])
        for g in gens:
            if sorted(g) != list(range(n)):
                raise ValueError(f"{g!r} is not a permutation of 0..{n - 1}")
        return perm_mul, identity or tuple(range(n)), key or (lambda e: e), origin or "from-permutations"
    if mul is None:
        mul = lambda a, b: a * b  # noqa: E731
    if identity is None:
        raise ValueError("an identity element is required for this element type")
    return mul, identity, key or (lambda e: e), origin or "from-construction"


# -- subgroup machinery ------------------------------------------------------------
def generated(G: FiniteGroup, idxs) -> np.ndarray:
    """Sorted indices of the subgroup generated by ``idxs``."""
    idxs = np.unique(np.asarray(list(idxs), dtype=np.int32))
    idxs = idxs[idxs != 0]
    member = np.zeros(G.n, dtype=bool)
    member[0] = True
    if idxs.size == 0:
        return np.array([0], dtype=np.int32)
    frontier = np.array([0], dtype=np.int32)
    while frontier.size:
        new = np.unique(G.table[np.ix_(frontier, idxs)].ravel())
        new = new[~member[new]]
        member[new] = True
        frontier = new
    return np.flatnonzero(member).astype(np.int32)


def element_orders(G: FiniteGroup) -> np.ndarray:
    n = G.n
    ar = np.arange(n, dtype=np.int32)
    order = np.zeros(n, dtype=np.int64)
    cur = ar.copy()
    k = 1
    while (order == 0).any():
        hit = (cur == 0) & (order == 0)
        order[hit] = k
        cur = G.table[cur, ar]
        k += 1
    return order


def center(G: FiniteGroup) -> np.ndarray:
    comm = G.table == G.table.T
    return np.flatnonzero(comm.all(axis=1)).astype(np.int32)


def commutator_subgroup(G: FiniteGroup, A, B) -> np.ndarray:
    """<[a, b] : a in A, b in B> with [a, b] = a^-1 b^-1 a b."""
    A = np.asarray(A, dtype=np.int32)
    B = np.asarray(B, dtype=np.int32)
    t = G.table
    inv = G.inv
    left = t[np.ix_(inv[A], inv[B])]
    right = t[np.ix_(A, B)]
    comms = np.unique(t[left, right])
    return generated(G, comms)


def derived_subgroup(G: FiniteGroup) -> np.ndarray:
    allg = np.arange(G.n, dtype=np.int32)
    return commutator_subgroup(G, allg, allg)


def power_subgroup(G: FiniteGroup, k: int) -> np.ndarray:
    ar = np.arange(G.n, dtype=np.int32)
    cur = ar.copy()
    for _ in range(k - 1):
        cur = G.table[cur, ar]
    return generated(G, np.unique(cur))


def frattini_subgroup(G: FiniteGroup) -> np.ndarray:
    """G' G^p for a p-group."""
    p = G.p
    if p is None:
        return np.array([0], dtype=np.int32)
    return generated(G, np.concatenate([derived_subgroup(G), power_subgroup(G, p)]))


def lower_central_series(G: FiniteGroup) -> list[np.ndarray]:
    allg = np.arange(G.n, dtype=np.int32)
    series = [allg]
    while True:
        nxt = commutator_subgroup(G, series[-1], allg)
        if nxt.size == series[-1].size:
            break
        series.append(nxt)
        if nxt.size == 1:
            break
    return series


def nilpotency_class(G: FiniteGroup) -> int | None:
    """Class c with gamma_{c+1} = 1; None if G is not nilpotent."""
    series = lower_central_series(G)
    if series[-1].size != 1:
        return None
    return len(series) - 1


def census(G: FiniteGroup) -> dict[int, int]:
    return dict(sorted(Counter(int(o) for o in G.orders()).items()))


def exponent(G: FiniteGroup) -> int:
    e = 1
    for o in set(int(o) for o in G.orders()):
        e = lcm(e, o)
    return e


def rank_d(G: FiniteGroup) -> int:
    """Minimal number of generators of a p-group: log_p [G : Phi(G)]."""
    p = G.p
    if p is None:
        return 0
    idx = G.n // frattini_subgroup(G).size
    d = 0
    while idx > 1:
        idx //= p
        d += 1
    return d


def abelian_invariants(G: FiniteGroup) -> tuple[int, ...]:
    """Invariant factors of G/G' (p-groups), ascending."""
    p = G.p
    if p is None:
        return ()
    D = derived_subgroup(G)
    inD = np.zeros(G.n, dtype=bool)
    inD[D] = True
    cur = np.arange(G.n, dtype=np.int32)
    exps = []  # s_i with |A[p^i]| = p^s_i
    total = G.n // D.size
    while True:
        acc = cur
        for _ in range(p - 1):
            acc = G.table[acc, cur]
        cur = acc  # g^(p^i)
        count = int(inD[cur].sum()) // D.size
        exps.append(_log(count, p))
        if count == total:
            break
    # number of cyclic factors of order >= p^i is s_i - s_{i-1}
    ge = [exps[0]] + [exps[j] - exps[j - 1] for j in range(1, len(exps))]
    factors = []
    for j, cnt in enumerate(ge):
        nxt = ge[j + 1] if j + 1 < len(ge) else 0
        factors += [p ** (j + 1)] * (cnt - nxt)
    return tuple(sorted(factors))


def _log(n: int, p: int) -> int:
    k = 0
    while n > 1:
        n //= p
        k += 1
    return k


@dataclass(frozen=True)
class Fingerprint:
    order: int
    exponent: int
    nilpotency_class: int | None
    center_order: int
    derived_order: int
    frattini_order: int
    d: int
    census: tuple = field(default=())
    abelian_invariants: tuple = field(default=())

    def as_dict(self) -> dict:
        return {
            "order": self.order,
            "exponent": self.exponent,
            "class": self.nilpotency_class,
            "center": self.center_order,
            "derived": self.derived_order,
            "frattini": self.frattini_order,
            "d": self.d,
            "census": {str(k): v for k, v in self.census},
            "abelian_invariants": list(self.abelian_invariants),
        }


def fingerprint(G: FiniteGroup) -> Fingerprint:
    return Fingerprint(
        order=G.n,
        exponent=exponent(G),
        nilpotency_class=nilpotency_class(G),
        center_order=int(center(G).size),
        derived_order=int(derived_subgroup(G).size),
        frattini_order=int(frattini_subgroup(G).size),
        d=rank_d(G),
        census=tuple(census(G).items()),
        abelian_invariants=abelian_invariants(G),
    )
