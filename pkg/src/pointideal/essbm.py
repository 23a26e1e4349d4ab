"""Groebner bases of few points in many variables.

Variables are visited from smallest to largest.  A variable that agrees on
the points with a combination of smaller standard monomials yields a linear
relation ``x_i - sum(c_j * s_j)``; any other variable is *essential* and
triggers a Buchberger-Moeller run on the points projected onto the
essential variables found so far.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from operator import itemgetter
from typing import Sequence

from .bma import PointSet, buchberger_moller
from .field import EchelonBasis, PrimeField
from .order import Monomial, TermOrder, variable_monomial
from .poly import Polynomial, evaluate_monomial

__all__ = [
    "GroebnerResult",
    "Variety",
    "build_eval_matrix",
    "candidate_monomials",
    "essbm",
    "project_points",
]


@dataclass(frozen=True)
class Variety:
    """``m >= 1`` distinct points of F_p^n."""

    points: tuple[tuple[int, ...], ...]
    p: int
    n_vars: int

    def __post_init__(self):
        PrimeField(self.p)
        pts = tuple(tuple(int(x) for x in pt) for pt in self.points)
        object.__setattr__(self, "points", pts)
        if self.n_vars < 1:
            raise ValueError("a variety needs at least one coordinate")
        if not pts:
            raise ValueError("variety has no points")
        for pt in pts:
            if len(pt) != self.n_vars:
                raise ValueError(f"point {pt} does not have {self.n_vars} coordinates")
            if any(not 0 <= x < self.p for x in pt):
                raise ValueError(f"point {pt} has a coordinate outside [0, {self.p})")
        if len(set(pts)) != len(pts):
            raise ValueError("variety contains duplicate points")

    @classmethod
    def from_points(cls, points: Sequence[Sequence[int]], p: int, n_vars: int | None = None,
                    strict: bool = True) -> "Variety":
        """Build a variety, dropping repeated points unless ``strict``."""
        pts = [tuple(int(x) for x in pt) for pt in points]
        if n_vars is None:
            if not pts:
                raise ValueError("variety has no points")
            n_vars = len(pts[0])
        unique = list(dict.fromkeys(pts))
        if len(unique) != len(pts):
            if strict:
                raise ValueError("variety contains duplicate points")
            warnings.warn(f"dropped {len(pts) - len(unique)} duplicate point(s)", stacklevel=2)
        return cls(tuple(unique), p, n_vars)

    @property
    def m(self) -> int:
        return len(self.points)


@dataclass
class GroebnerResult:
    """Output of :func:`essbm`.

    ``gb`` holds the basis elements in the essential variables (increasing
    leading monomial) and ``rel`` the linear relations, in the order the
    variables were visited.  ``g`` is their concatenation.
    """

    ev: tuple[int, ...]
    sm: list[Monomial]
    gb: list[Polynomial]
    rel: list[Polynomial]
    order: TermOrder
    p: int
    g: list[Polynomial] = field(init=False)

    def __post_init__(self):
        self.g = list(self.gb) + list(self.rel)

    @property
    def n_vars(self) -> int:
        return self.order.n


def _lift(a: Monomial, variables: Sequence[int], n: int) -> Monomial:
    out = [0] * n
    for v, e in zip(variables, a):
        out[v] = e
    return tuple(out)


def candidate_monomials(sm_prev: Sequence[Monomial], x: int, order: TermOrder) -> list[Monomial]:
    """Members of ``sm_prev`` strictly smaller than the variable ``x``."""
    xk = order.key(variable_monomial(order.n, x))
    return [s for s in sm_prev if order.key(s) < xk]


def project_points(v: Variety, variables, order: TermOrder | None = None) -> PointSet:
    """Points of ``v`` restricted to ``variables`` (ascending), deduplicated.

    The returned point set carries ``order`` induced on the chosen variables
    (lex if no order is given).
    """
    vs = sorted(set(variables))
    if not vs:
        raise ValueError("cannot project onto an empty set of variables")
    order = order or TermOrder("lex", v.n_vars)
    get = itemgetter(*vs) if len(vs) > 1 else (lambda pt, i=vs[0]: (pt[i],))
    pts = tuple(dict.fromkeys(get(pt) for pt in v.points))
    return PointSet(pts, v.p, order.induced(vs))


def build_eval_matrix(monos: Sequence[Monomial], v: Variety) -> list[list[int]]:
    """``m x len(monos)`` matrix of each monomial evaluated at each point."""
    return [[evaluate_monomial(a, pt, v.p) for a in monos] for pt in v.points]


def essbm(v: Variety, order: TermOrder) -> GroebnerResult:
    """Reduced Groebner basis of I(V) and its standard monomials."""
    n = v.n_vars
    if order.n != n:
        raise ValueError(f"term order is on {order.n} variables, variety on {n}")
    p, pts = v.p, v.points
    m = len(pts)

    # Essential-variable state, in coordinates local to ``ev`` (ascending).
    ev: list[int] = []
    sm_local: list[Monomial] = [()]
    gb_local: list[Polynomial] = []
    sm_evals: list[list[int]] = [[1] * m]
    sm_full: list[Monomial] = [(0,) * n]
    solvers: dict[tuple[int, ...], EchelonBasis] = {}
    rel: list[Polynomial] = []

    for x in order.variable_rank():
        variables = sorted(ev + [x])
        at = variables.index(x)
        sub = order.induced(variables)
        xkey = sub.key(tuple(int(i == at) for i in range(len(variables))))
        lm = tuple(j for j, s in enumerate(sm_local) if sub.key(s[:at] + (0,) + s[at:]) < xkey)

        solver = solvers.get(lm)
        if solver is None:
            solver = EchelonBasis(p, m)
            for j in lm:
                dep = solver.insert(sm_evals[j])
                # standard monomials have independent evaluation vectors
                assert dep is None
            solvers[lm] = solver
        coeffs = solver.express([pt[x] for pt in pts])

        if coeffs is not None:
            terms = [(variable_monomial(n, x), 1)]
            for j, c in zip(reversed(lm), reversed(coeffs)):
                if c:
                    terms.append((sm_full[j], -c % p))
            rel.append(Polynomial._sorted(tuple(terms), p, order))
            continue

        ev = variables
        gb_local, sm_local = buchberger_moller(project_points(v, ev, order))
        get = itemgetter(*ev) if len(ev) > 1 else (lambda pt, i=ev[0]: (pt[i],))
        proj = [get(pt) for pt in pts]
        sm_evals = [[evaluate_monomial(s, q, p) for q in proj] for s in sm_local]
        sm_full = [_lift(s, ev, n) for s in sm_local]
        solvers.clear()

    sm = sm_full
    gb = [Polynomial._sorted(tuple((_lift(a, ev, n), c) for a, c in g.terms), p, order)
          for g in gb_local]
    return GroebnerResult(tuple(ev), sm, gb, rel, order, p)
