"""Buchberger-Moeller algorithm for the vanishing ideal of a point set."""

from __future__ import annotations

import heapq
from dataclasses import dataclass

from .field import EchelonBasis, PrimeField
from .order import Monomial, TermOrder
from .poly import Polynomial, evaluate_monomial

__all__ = ["PointSet", "buchberger_moller"]


@dataclass(frozen=True)
class PointSet:
    """Distinct points of F_p^n together with the order used on k[x1..xn]."""

    points: tuple[tuple[int, ...], ...]
    p: int
    order: TermOrder

    def __post_init__(self):
        PrimeField(self.p)
        pts = tuple(tuple(int(x) for x in pt) for pt in self.points)
        object.__setattr__(self, "points", pts)
        if not pts:
            raise ValueError("point set is empty")
        n = self.order.n
        for pt in pts:
            if len(pt) != n:
                raise ValueError(f"point {pt} does not have {n} coordinates")
            if any(not 0 <= x < self.p for x in pt):
                raise ValueError(f"point {pt} has a coordinate outside [0, {self.p})")
        if len(set(pts)) != len(pts):
            raise ValueError("point set contains duplicate points")

    @property
    def n_vars(self) -> int:
        return self.order.n


def buchberger_moller(ps: PointSet) -> tuple[list[Polynomial], list[Monomial]]:
    """Reduced Groebner basis and standard monomials of I(points).

    Candidates are visited in increasing order.  A candidate whose
    evaluation vector is independent of those of the standard monomials
    found so far becomes standard; otherwise the dependency gives a basis
    element ``t - sum(c_j * s_j)`` directly in reduced form.

    Returns ``(gb, sm)`` with ``gb`` sorted by increasing leading monomial
    and ``sm`` increasing.
    """
    p, order, pts = ps.p, ps.order, ps.points
    n = order.n
    key = order.key
    start = (0,) * n

    basis = EchelonBasis(p, len(pts))
    sm: list[Monomial] = []
    sm_set: set[Monomial] = set()
    gb: list[Polynomial] = []
    heap = [(key(start), start)]
    seen = {start}
    while heap:
        _, t = heapq.heappop(heap)
        # t is a multiple of a known leading term iff some t / x_k is not standard
        if any(e and (t[:k] + (e - 1,) + t[k + 1:]) not in sm_set for k, e in enumerate(t)):
            continue
        coeffs = basis.insert([evaluate_monomial(t, pt, p) for pt in pts])
        if coeffs is None:
            sm.append(t)
            sm_set.add(t)
            for k in range(n):
                u = t[:k] + (t[k] + 1,) + t[k + 1:]
                if u not in seen:
                    seen.add(u)
                    heapq.heappush(heap, (key(u), u))
        else:
            terms = [(t, 1)]
            for s, c in zip(reversed(sm), reversed(coeffs)):
                if c:
                    terms.append((s, -c % p))
            gb.append(Polynomial._sorted(tuple(terms), p, order))
    return gb, sm
