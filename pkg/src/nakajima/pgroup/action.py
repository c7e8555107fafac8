"""Group actions on finite point sets and semiregularity."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

import numpy as np

from ..field_core.gf import FieldDesc
from .group import FiniteGroup


@dataclass
class ActionReport:
    fixed_counts: list[int]   # per element index of G
    free: list[int]           # non-identity elements without fixed points
    fixing: list[int]         # non-identity elements with a fixed point
    n_points: int

    @property
    def semiregular(self) -> bool:
        return not self.fixing

    def subgroup_semiregular(self, members) -> bool:
        bad = set(self.fixing)
        return not any(int(m) in bad for m in members)


def semiregular_on(G: FiniteGroup, points: Sequence, act: Callable) -> ActionReport:
    """Fixed-point count of every element of G on ``points``.

    ``act(obj, pt)`` applies the underlying element object (``G.elements[i]``)
    to a point.  Only the generators are applied directly; other elements are
    reached through their permutation of the point indices.
    """
    pts = list(points)
    where = {pt: i for i, pt in enumerate(pts)}
    n = len(pts)
    perm = [None] * G.n
    perm[0] = np.arange(n)
    for gi in G.gens:
        img = []
        for pt in pts:
            q = act(G.elements[gi], pt)
            if q not in where:
                raise ValueError(f"action leaves the point set: {pt} -> {q}")
            img.append(where[q])
        perm[gi] = np.asarray(img)
    # breadth-first over the Cayley graph: perm[a*g] = perm[g][perm[a]]
    rows = G.rows()
    queue = [0]
    seen = {0}
    for a in queue:
        for gi in G.gens:
            b = rows[a][gi]
            if b not in seen:
                perm[b] = perm[gi][perm[a]]
                seen.add(b)
                queue.append(b)
    idx = np.arange(n)
    counts = [int((perm[i] == idx).sum()) for i in range(G.n)]
    free = [i for i in range(1, G.n) if counts[i] == 0]
    fixing = [i for i in range(1, G.n) if counts[i] > 0]
    return ActionReport(counts, free, fixing, n)


# -- evaluating tower functions at rational points ----------------------------------
def _eval_poly(L: FieldDesc, a: tuple, v: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = L.add(L.mul(acc, v), c)
    return acc


def evaluate_at(el, L: FieldDesc, point: tuple):
    """Value of a tower element at (x, t_1, ..., t_m) with coordinates in L ⊇ F_p.

    Coefficients must lie in the prime field (they are embedded digit-wise).
    Returns None at a pole of some coefficient.
    """
    x, ts = point[0], point[1:]
    total = 0
    for exp, coef in el.terms.items():
        if any(c >= L.p for c in (*coef.num, *coef.den)):
            raise ValueError("evaluation needs coefficients in the prime field")
        d = _eval_poly(L, coef.den, x)
        if d == 0:
            return None
        val = L.div(_eval_poly(L, coef.num, x), d)
        for t, e in zip(ts, exp):
            if e:
                val = L.mul(val, L.pow(t, e))
        total = L.add(total, val)
    return total


def affine_points(T, L: FieldDesc) -> list[tuple]:
    """Affine L-points (x, t_1..t_m) of the tower: t_i^p - t_i = phi_i, phi_i finite."""
    p = L.p
    pts = [(x,) for x in range(L.q)]
    for i, phi in enumerate(T.phis):
        nxt = []
        for pt in pts:
            val = evaluate_at(phi, L, pt + (0,) * (T.m - i))
            if val is None:
                continue
            for t in range(L.q):
                if L.sub(L.pow(t, p), t) == val:
                    nxt.append(pt + (t,))
        pts = nxt
    return pts


def auto_action(L: FieldDesc):
    """Point action of a FieldAuto; raises if an image has a pole at the point."""

    def act(sigma, pt):
        pad = tuple(pt)
        out = []
        for el in (sigma.image_x, *sigma.image_t):
            v = evaluate_at(el, L, pad)
            if v is None:
                raise ValueError(f"{sigma.name} is not defined at {pt}")
            out.append(v)
        return tuple(out)

    return act


__all__ = ["ActionReport", "affine_points", "auto_action", "evaluate_at", "semiregular_on"]
