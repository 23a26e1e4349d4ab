"""Independent checks of a computed Groebner basis of points.

Each check returns a :class:`CheckResult`; failures carry a counterexample
instead of raising, so a whole suite can be reported at once.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Sequence

from .bma import PointSet, buchberger_moller
from .essbm import GroebnerResult, Variety
from .field import EchelonBasis
from .order import Monomial, TermOrder
from .poly import Polynomial, evaluate_monomial, format_monomial

__all__ = [
    "CheckResult",
    "VerificationReport",
    "canonical_set",
    "check_reduced",
    "check_rel_shape",
    "check_result_equivalence",
    "check_sm",
    "check_vanishing",
    "verify_result",
]


@dataclass
class CheckResult:
    name: str
    passed: bool
    counterexample: Any = None

    def __bool__(self) -> bool:
        return self.passed

    def render(self) -> str:
        if self.passed:
            return f"{self.name}: PASS"
        return f"{self.name}: FAIL {self.counterexample}"


@dataclass
class VerificationReport:
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def render(self) -> str:
        return "\n".join(c.render() for c in self.checks)


def _pass(name):
    return CheckResult(name, True)


def _fail(name, why):
    return CheckResult(name, False, why)


def check_vanishing(G: Sequence[Polynomial], v: Variety) -> CheckResult:
    name = "check_vanishing"
    for g in G:
        for pt in v.points:
            if g.evaluate(pt):
                return _fail(name, f"{g} does not vanish at {pt}")
    return _pass(name)


def check_reduced(G: Sequence[Polynomial], order: TermOrder | None = None) -> CheckResult:
    """No leading monomial of one element divides a monomial of another."""
    name = "check_reduced"
    for g in G:
        if not g.is_monic():
            raise ValueError(f"{g} is not monic")
    for i, g in enumerate(G):
        lead = g.leading_monomial() if order is None else max(g.monomials(), key=order.key)
        for j, h in enumerate(G):
            if i == j:
                continue
            for a in h.monomials():
                if all(x <= y for x, y in zip(lead, a)):
                    return _fail(name, f"leading monomial of {g} divides {format_monomial(a)} in {h}")
    return _pass(name)


def check_sm(sm: Sequence[Monomial], v: Variety, ev) -> CheckResult:
    """Size, order-ideal closure, support and independence of ``sm``."""
    name = "check_sm"
    if len(sm) != v.m:
        return _fail(name, f"|SM| = {len(sm)} but V has {v.m} points")
    if len(set(sm)) != len(sm):
        return _fail(name, "SM has repeated monomials")
    members = set(sm)
    for a in sm:
        for k, e in enumerate(a):
            if e and a[:k] + (e - 1,) + a[k + 1:] not in members:
                return _fail(name, f"order ideal: divisor of {format_monomial(a)} missing")
    supp = {k for a in sm for k, e in enumerate(a) if e}
    if supp != set(ev):
        return _fail(name, f"support {sorted(k + 1 for k in supp)} != EV {sorted(k + 1 for k in ev)}")
    basis = EchelonBasis(v.p, v.m)
    for a in sm:
        if basis.insert([evaluate_monomial(a, pt, v.p) for pt in v.points]) is not None:
            return _fail(name, f"evaluation matrix singular at {format_monomial(a)}")
    return _pass(name)


def check_rel_shape(res: GroebnerResult, order: TermOrder | None = None) -> CheckResult:
    name = "check_rel_shape"
    order = order or res.order
    ev = set(res.ev)
    sm = set(res.sm)
    n = res.n_vars
    if len(ev) > len(res.sm):
        return _fail(name, f"|EV| = {len(ev)} exceeds m = {len(res.sm)}")
    if len(res.rel) != n - len(ev):
        return _fail(name, f"|Rel| = {len(res.rel)} but n - |EV| = {n - len(ev)}")
    for h in res.rel:
        a, c = h.leading_term()
        if c != 1:
            return _fail(name, f"{h} is not monic")
        if sum(a) != 1:
            return _fail(name, f"leading term of {h} is not a single variable")
        x = a.index(1)
        if x in ev:
            return _fail(name, f"{h} is headed by essential variable x{x + 1}")
        xk = order.key(a)
        for b, _ in h.terms[1:]:
            if b not in sm:
                return _fail(name, f"tail monomial {format_monomial(b)} of {h} is not standard")
            if not order.key(b) < xk:
                return _fail(name, f"tail monomial {format_monomial(b)} of {h} is not below x{x + 1}")
    return _pass(name)


def canonical_set(G: Sequence[Polynomial]) -> frozenset:
    return frozenset(g.monic() for g in G)


def check_result_equivalence(res: GroebnerResult, v: Variety,
                             order: TermOrder | None = None) -> CheckResult:
    """Compare against a full-ring Buchberger-Moeller run on the same points."""
    name = "check_result_equivalence"
    order = order or res.order
    gb, sm = buchberger_moller(PointSet(v.points, v.p, order))
    mine, ref = canonical_set(res.g), canonical_set(gb)
    if mine != ref:
        extra = sorted(str(g) for g in mine - ref)
        missing = sorted(str(g) for g in ref - mine)
        return _fail(name, f"extra {extra} missing {missing}")
    if set(res.sm) != set(sm) or len(res.sm) != len(sm):
        return _fail(name, "standard monomials differ")
    return _pass(name)


def verify_result(res: GroebnerResult, v: Variety, oracle: bool = False) -> VerificationReport:
    report = VerificationReport([
        check_vanishing(res.g, v),
        check_reduced(res.g, res.order),
        check_sm(res.sm, v, res.ev),
        check_rel_shape(res),
    ])
    if oracle:
        report.checks.append(check_result_equivalence(res, v))
    return report
