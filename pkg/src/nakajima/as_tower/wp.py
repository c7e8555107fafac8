"""Membership in the image of the Artin-Schreier operator w -> w^p - w.

The operator is F_p-linear, so once every element is flattened to an F_p
coordinate vector, "u = w^p - w for some w = sum lambda_j b_j" becomes a
linear system A c = u over F_p in the coordinates c of the lambda_j.  The
test itself enumerates every coefficient vector (vectorised with numpy);
:func:`wp_image_solve` answers the same question by elimination and is used
as an independent cross-check.
"""

from __future__ import annotations

import numpy as np

from ..errors import SearchSpaceTooLarge, TowerMismatch
from ..field_core import poly as P
from ..field_core.gf import fq_make, prime_factors
from .tower import TowerElem

SEARCH_LIMIT = 10**8
_BATCH = 1 << 15


def _coefficient_system(u: TowerElem, basis: list, coeff_ext: int):
    """Return (A, target) over F_p; columns are indexed by (j, l)."""
    T = u.tower
    for b in basis:
        if not T.same_as(b.tower):
            raise TowerMismatch("basis element from another tower")
    F = T.F
    p, k, e = F.p, F.k, coeff_ext
    # components[col] = list over r of TowerElem (r indexes the coefficient-field basis)
    powers = [b ** p for b in basis]
    columns: list[list[TowerElem]] = []
    if k == 1:
        L = fq_make(p, e)
        # Frobenius on the power basis theta^l of F_{p^e}
        frob = [L.coeffs(L.pow(p**l, p)) for l in range(e)]
        for j in range(len(basis)):
            for l in range(e):
                comps = []
                for r in range(e):
                    comp = powers[j].scale_int(frob[l][r]) if frob[l][r] else T.zero()
                    if r == l:
                        comp = comp - basis[j]
                    comps.append(comp)
                columns.append(comps)
        target = [u] + [T.zero()] * (e - 1)
        ncomp = e
    elif k % e == 0:
        gamma = _subfield_generator(F, e)
        betas = [F.pow(gamma, l) for l in range(e)]
        for j in range(len(basis)):
            for l in range(e):
                b = betas[l]
                col = powers[j].scale_const(F.frobenius(b)) - basis[j].scale_const(b)
                columns.append([col])
        target = [u]
        ncomp = 1
    else:
        raise ValueError(f"coefficient field F_{p}^{e} does not embed in the base field F_{p}^{k}")

    # common denominator over every coordinate
    dens = set()
    for el in [*target, *(c for cols in columns for c in cols)]:
        for coef in el.terms.values():
            dens.add(coef.den)
    D = P.ONE
    for d in dens:
        if d != P.ONE:
            D = P.div_exact(F, P.mul(F, D, d), P.gcd(F, D, d))

    index: dict = {}

    def flatten(el: TowerElem, r: int) -> dict:
        out = {}
        for exp, coef in el.terms.items():
            num = P.mul(F, coef.num, P.div_exact(F, D, coef.den))
            for deg_, c in enumerate(num):
                if not c:
                    continue
                for digit, v in enumerate(F.coeffs(c)):
                    if v:
                        key = (r, exp, deg_, digit)
                        row = index.setdefault(key, len(index))
                        out[row] = v
        return out

    col_vecs = [[flatten(c, r) for r, c in enumerate(cols)] for cols in columns]
    tgt_vecs = [flatten(t, r) for r, t in enumerate(target[:ncomp])]
    nrows, ncols = len(index), len(columns)
    A = np.zeros((nrows, ncols), dtype=np.int64)
    for jcol, parts in enumerate(col_vecs):
        for part in parts:
            for row, v in part.items():
                A[row, jcol] = (A[row, jcol] + v) % p
    t = np.zeros(nrows, dtype=np.int64)
    for part in tgt_vecs:
        for row, v in part.items():
            t[row] = (t[row] + v) % p
    return A, t


def _subfield_generator(F, e: int) -> int:
    """A generator of the multiplicative group of F_{p^e} inside F."""
    order = F.p**e - 1
    factors = prime_factors(order)
    for g in range(2, F.q):
        h = F.pow(g, (F.q - 1) // order)
        # h generates the subfield group iff its order is exactly p^e - 1
        if all(F.pow(h, order // r) != 1 for r in factors):
            return h
    return 1


def wp_image_test(u: TowerElem, basis: list, coeff_ext: int | None = None) -> bool:
    """True iff u = w^p - w for some w in the F_{p^coeff_ext}-span of ``basis``.

    Every candidate coefficient vector is tried (p^(coeff_ext * len(basis)) of them).
    """
    p = u.tower.p
    e = p if coeff_ext is None else coeff_ext
    n = e * len(basis)
    if p**n > SEARCH_LIMIT:
        raise SearchSpaceTooLarge(f"{p}^{n} candidates exceed {SEARCH_LIMIT}")
    A, t = _coefficient_system(u, list(basis), e)
    if A.shape[0] == 0:
        return True
    # identical rows constrain identically; drop duplicates before the sweep
    aug = np.unique(np.concatenate([A, t[:, None]], axis=1), axis=0)
    A, t = aug[:, :-1], aug[:, -1]
    if n == 0:
        return not t.any()
    weights = p ** np.arange(n, dtype=np.int64)
    total = p**n
    AT = A.T.copy()
    for start in range(0, total, _BATCH):
        idx = np.arange(start, min(start + _BATCH, total), dtype=np.int64)
        digits = (idx[:, None] // weights[None, :]) % p
        hit = ((digits @ AT) % p == t[None, :]).all(axis=1)
        if hit.any():
            return True
    return False


def wp_image_solve(u: TowerElem, basis: list, coeff_ext: int | None = None):
    """Solve the same system by Gaussian elimination over F_p.

    Returns the coordinate vector of one solution, or None.
    """
    p = u.tower.p
    e = p if coeff_ext is None else coeff_ext
    A, t = _coefficient_system(u, list(basis), e)
    return _solve_mod_p(A.tolist(), t.tolist(), p, A.shape[1])


def _solve_mod_p(A: list, t: list, p: int, ncols: int):
    rows = [list(r) + [v] for r, v in zip(A, t)]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [v * inv % p for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] % p:
                f = rows[i][c]
                rows[i] = [(a - f * b) % p for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    for i in range(r, len(rows)):
        if rows[i][-1] % p:
            return None
    sol = [0] * ncols
    for i, c in enumerate(pivots):
        sol[c] = rows[i][-1]
    return sol
