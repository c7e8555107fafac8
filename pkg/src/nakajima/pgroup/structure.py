"""Maximal subgroups, homomorphism extension, isomorphism and presentations."""

from __future__ import annotations

from itertools import product

import numpy as np

from ..errors import ImageNotInGroup
from .group import FiniteGroup, frattini_subgroup, generated
from .words import evaluate, parse_relation


def burnside_basis(G: FiniteGroup) -> list[int]:
    """Elements whose images form a basis of G/Phi(G); they generate G (p-groups)."""
    if G.n == 1:
        return []
    phi = frattini_subgroup(G)
    chosen: list[int] = []
    span = set(int(x) for x in phi)
    for g in _preferred_order(G):
        if g in span:
            continue
        chosen.append(g)
        span = set(int(x) for x in generated(G, list(phi) + chosen))
        if len(span) == G.n:
            break
    return chosen


def _preferred_order(G: FiniteGroup) -> list[int]:
    # stated generators first, then everything else; makes bases reproducible
    seen = []
    for g in G.gens:
        if g not in seen:
            seen.append(g)
    seen += [g for g in range(1, G.n) if g not in set(seen)]
    return seen


def minimal_generating_set(G: FiniteGroup) -> list[int]:
    if G.p is not None:
        return burnside_basis(G)
    chosen: list[int] = []
    span = {0}
    for g in _preferred_order(G):
        if g not in span:
            chosen.append(g)
            span = set(int(x) for x in generated(G, chosen))
    return chosen


def _coordinates(G: FiniteGroup, basis: list[int], phi: np.ndarray) -> np.ndarray:
    """coords[g] = exponent vector of g modulo Phi in the given basis."""
    p = G.p
    d = len(basis)
    coords = np.full((G.n, d), -1, dtype=np.int64)
    for vec in product(range(p), repeat=d):
        w = 0
        for b, k in zip(basis, vec):
            w = G.mul(w, G.power(b, k))
        coords[G.table[w, phi]] = vec
    return coords


def maximal_subgroup_sets(G: FiniteGroup) -> list[np.ndarray]:
    """Index sets of the maximal subgroups: preimages of hyperplanes of G/Phi."""
    p = G.p
    if p is None:
        raise ValueError("maximal subgroups are computed for p-groups only")
    phi = frattini_subgroup(G)
    basis = burnside_basis(G)
    d = len(basis)
    coords = _coordinates(G, basis, phi)
    out = []
    for lam in product(range(p), repeat=d):
        nz = [c for c in lam if c]
        if not nz or nz[0] != 1:
            continue  # one functional per hyperplane
        vals = (coords @ np.asarray(lam, dtype=np.int64)) % p
        out.append(np.flatnonzero(vals == 0).astype(np.int32))
    return out


def maximal_subgroups(G: FiniteGroup) -> list[FiniteGroup]:
    return [G.subgroup(m) for m in maximal_subgroup_sets(G)]


# -- homomorphisms -----------------------------------------------------------------
def extend_hom(G: FiniteGroup, gens: list[int], H: FiniteGroup, images: list[int]) -> np.ndarray | None:
    """Extend gens -> images along the Cayley graph of <gens>.

    Returns the map (entries -1 outside <gens>) or None when some edge
    disagrees, i.e. no homomorphism sends gens to images.
    """
    tg, th = G.rows(), H.rows()
    phi = [-1] * G.n
    phi[0] = 0
    queue = [0]
    pairs = list(zip(gens, images))
    for a in queue:
        ra, rfa = tg[a], th[phi[a]]
        for g, h in pairs:
            b = ra[g]
            v = rfa[h]
            cur = phi[b]
            if cur < 0:
                phi[b] = v
                queue.append(b)
            elif cur != v:
                return None
    return np.asarray(phi, dtype=np.int64)


def _injective_on_domain(phi: np.ndarray) -> bool:
    dom = phi[phi >= 0]
    return np.unique(dom).size == dom.size


def centralizer_sizes(G: FiniteGroup) -> np.ndarray:
    return (G.table == G.table.T).sum(axis=1)


def _element_classes(G: FiniteGroup) -> np.ndarray:
    """An isomorphism-invariant label per element (order, centralizer size)."""
    return G.orders() * (G.n + 1) + centralizer_sizes(G)


def find_isomorphism(G: FiniteGroup, H: FiniteGroup) -> np.ndarray | None:
    """A bijective homomorphism G -> H as an index map, or None."""
    if G.n != H.n:
        return None
    if G.fingerprint() != H.fingerprint():
        return None
    gens = minimal_generating_set(G)
    if not gens:
        return np.zeros(1, dtype=np.int64)
    cls_g, cls_h = _element_classes(G), _element_classes(H)
    cands = [np.flatnonzero(cls_h == cls_g[g]).tolist() for g in gens]
    # a few short words whose orders must match (cheap pruning for two generators)
    probes = _probe_words(G, gens)

    chosen: list[int] = []

    def search(j: int):
        if j == len(gens):
            phi = extend_hom(G, gens, H, chosen)
            if phi is not None and (phi >= 0).all() and _injective_on_domain(phi):
                return phi
            return None
        for h in cands[j]:
            chosen.append(h)
            ok = _probes_agree(G, H, gens, chosen, probes)
            if ok:
                phi = extend_hom(G, gens[: j + 1], H, chosen)
                if phi is not None and _injective_on_domain(phi):
                    res = search(j + 1)
                    if res is not None:
                        return res
            chosen.pop()
        return None

    return search(0)


def _probe_words(G: FiniteGroup, gens: list[int]):
    probes = []
    for i in range(len(gens)):
        for j in range(i):
            for a, b in ((1, 1), (1, -1), (2, 1), (1, 2)):
                probes.append((j, i, a, b))
    return probes


def _probes_agree(G, H, gens, images, probes) -> bool:
    og, oh = G.orders(), H.orders()
    k = len(images)
    for j, i, a, b in probes:
        if i >= k:
            continue
        wg = G.mul(G.power(gens[j], a), G.power(gens[i], b))
        wh = H.mul(H.power(images[j], a), H.power(images[i], b))
        if og[wg] != oh[wh]:
            return False
    return True


def is_isomorphic(G: FiniteGroup, H: FiniteGroup) -> bool:
    return find_isomorphism(G, H) is not None


# -- presentations -----------------------------------------------------------------
def presentation_check(relators, G: FiniteGroup, images) -> bool:
    """True iff every relation holds on ``images`` and the images generate G.

    ``images`` maps generator names to element indices of G (a list is paired
    with the generator names in order of first appearance).
    """
    rels = [parse_relation(r) if isinstance(r, str) else r for r in relators]
    if not isinstance(images, dict):
        names: list[str] = []
        from .words import generator_names

        for lhs, rhs in rels:
            for n in generator_names(lhs) + generator_names(rhs):
                if n not in names:
                    names.append(n)
        images = dict(zip(names, images))
    env = {}
    for name, v in images.items():
        if not isinstance(v, (int, np.integer)) or not 0 <= int(v) < G.n:
            raise ImageNotInGroup(f"image of {name} is not an element of the group")
        env[name] = int(v)
    mul, inv = G.mul, lambda a: int(G.inv[a])
    for lhs, rhs in rels:
        if evaluate(lhs, env, mul, inv, 0, G.power) != evaluate(rhs, env, mul, inv, 0, G.power):
            return False
    return generated(G, list(env.values())).size == G.n
