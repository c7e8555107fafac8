"""Local Artin-Schreier reduction and the genus of one Artin-Schreier step."""

from __future__ import annotations

from ..errors import EverywhereUnramifiedInput, ZeroInput
from ..field_core import poly as P
from ..field_core.ratfunc import Place, RatFunc, place_valuation, poles


def _pole_order(f: RatFunc, place: Place) -> int:
    if f.is_zero():
        return 0
    v = place_valuation(f, place)
    return -v if v < 0 else 0


def _pth_root_mod(F, c, pi):
    """The p-th root of c in F_q[x]/(pi): c^(Q/p) with Q = q^deg(pi)."""
    Q = F.q ** P.deg(pi)
    return P.powmod(F, c, Q // F.p, pi)


def as_reduce(phi: RatFunc, place: Place) -> tuple[int, RatFunc]:
    """Return (m, w) with phi - (w^p - w) of pole order m at ``place``, p not dividing m.

    w has poles only at ``place``; m = 0 when the pole can be removed entirely.
    """
    if phi.is_zero():
        raise ZeroInput("cannot reduce the zero function")
    F = phi.F
    p = F.p
    witness = RatFunc.const(F, 0)
    cur = phi
    m = _pole_order(cur, place)
    while m and m % p == 0:
        if place.is_infinite:
            # leading term of the polynomial part
            q, _ = P.divmod_(F, cur.num, cur.den)
            lc = q[m]
            c = F.pth_root(lc)
            term = RatFunc.from_poly(F, P.monomial(F, c, m // p))
        else:
            pi = place.poly
            block = P.pow_(F, pi, m)
            rest = P.div_exact(F, cur.den, block)
            lead = P.mod(F, P.mul(F, cur.num, P.invmod(F, P.mod(F, rest, pi), pi)), pi)
            c = _pth_root_mod(F, lead, pi)
            term = RatFunc(F, c, P.pow_(F, pi, m // p))
        cur = cur - (term ** p - term)
        witness = witness + term
        m = _pole_order(cur, place)
    return m, witness


def ramification_data(phi: RatFunc) -> list[tuple[Place, int]]:
    """(place, reduced pole order) for every pole of phi."""
    return [(pl, as_reduce(phi, pl)[0]) for pl in poles(phi)]


def as_step_genus(phi: RatFunc, p: int | None = None) -> int:
    """Genus of y^p - y = phi over F_q(x): 2g - 2 = -2p + sum deg(P)(p-1)(m_P+1)."""
    if phi.is_zero():
        raise ZeroInput("zero right-hand side")
    F = phi.F
    if p is None:
        p = F.p
    elif p != F.p:
        raise ValueError(f"p={p} does not match the field characteristic {F.p}")
    total = 0
    ramified = False
    for pl, m in ramification_data(phi):
        if m:
            ramified = True
            total += pl.degree * (p - 1) * (m + 1)
    if not ramified:
        raise EverywhereUnramifiedInput("no place ramifies: the Hurwitz formula over P^1 does not apply")
    two_g_minus_2 = -2 * p + total
    return (two_g_minus_2 + 2) // 2
