"""Sparse polynomials over F_p."""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .field import inverse
from .order import Monomial, TermOrder

__all__ = [
    "Polynomial",
    "eliminate_inessential",
    "evaluate_monomial",
    "format_monomial",
    "normal_form",
]


def evaluate_monomial(a: Monomial, point: Sequence[int], p: int) -> int:
    v = 1
    for e, x in zip(a, point):
        if e:
            v = v * pow(x, e, p) % p
    return v


def format_monomial(a: Monomial) -> str:
    factors = []
    for i, e in enumerate(a):
        if e == 1:
            factors.append(f"x{i + 1}")
        elif e:
            factors.append(f"x{i + 1}^{e}")
    return "*".join(factors) or "1"


class Polynomial:
    """Immutable polynomial with terms sorted by decreasing monomial.

    ``terms`` is a tuple of ``(monomial, coefficient)`` pairs with nonzero
    coefficients in ``[0, p)``; the zero polynomial has no terms.
    """

    __slots__ = ("terms", "p", "order")

    def __init__(self, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]],
                 p: int, order: TermOrder):
        acc: dict[Monomial, int] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for a, c in items:
            if len(a) != order.n:
                raise ValueError(f"monomial {a} does not have {order.n} variables")
            acc[a] = (acc.get(a, 0) + c) % p
        key = order.key
        self.terms = tuple(sorted(((a, c) for a, c in acc.items() if c),
                                  key=lambda t: key(t[0]), reverse=True))
        self.p = p
        self.order = order

    @classmethod
    def _sorted(cls, terms: tuple, p: int, order: TermOrder) -> "Polynomial":
        # caller guarantees normalized, decreasing terms
        f = cls.__new__(cls)
        f.terms = terms
        f.p = p
        f.order = order
        return f

    @classmethod
    def zero(cls, p: int, order: TermOrder) -> "Polynomial":
        return cls._sorted((), p, order)

    @classmethod
    def monomial(cls, a: Monomial, p: int, order: TermOrder, coeff: int = 1) -> "Polynomial":
        return cls([(a, coeff)], p, order)

    @property
    def n(self) -> int:
        return self.order.n

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def leading_term(self) -> tuple[Monomial, int]:
        if not self.terms:
            raise ValueError("the zero polynomial has no leading term")
        return self.terms[0]

    def leading_monomial(self) -> Monomial:
        return self.leading_term()[0]

    def leading_coefficient(self) -> int:
        return self.leading_term()[1]

    def tail(self) -> "Polynomial":
        return Polynomial._sorted(self.terms[1:], self.p, self.order)

    def monomials(self) -> list[Monomial]:
        return [a for a, _ in self.terms]

    def support(self) -> frozenset[int]:
        """Indices of the variables occurring in some term."""
        out = set()
        for a, _ in self.terms:
            out.update(i for i, e in enumerate(a) if e)
        return frozenset(out)

    def as_dict(self) -> dict[Monomial, int]:
        return dict(self.terms)

    def is_monic(self) -> bool:
        return bool(self.terms) and self.terms[0][1] == 1

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        s = inverse(self.terms[0][1], self.p)
        p = self.p
        return Polynomial._sorted(tuple((a, c * s % p) for a, c in self.terms), p, self.order)

    def _check(self, other: "Polynomial") -> None:
        if other.p != self.p or other.order != self.order:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        acc = dict(self.terms)
        for a, c in other.terms:
            acc[a] = acc.get(a, 0) + c
        return Polynomial(acc, self.p, self.order)

    def __neg__(self) -> "Polynomial":
        p = self.p
        return Polynomial._sorted(tuple((a, -c % p) for a, c in self.terms), p, self.order)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, c: int) -> "Polynomial":
        p = self.p
        c %= p
        if not c:
            return Polynomial.zero(p, self.order)
        return Polynomial._sorted(tuple((a, x * c % p) for a, x in self.terms), p, self.order)

    def mul_term(self, a: Monomial, c: int) -> "Polynomial":
        """Product with the single term ``c * x^a`` (order is preserved)."""
        p = self.p
        c %= p
        if not c:
            return Polynomial.zero(p, self.order)
        terms = tuple((tuple(x + y for x, y in zip(b, a)), x * c % p) for b, x in self.terms)
        return Polynomial._sorted(terms, p, self.order)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        self._check(other)
        acc: dict[Monomial, int] = {}
        for a, c in other.terms:
            for b, x in self.terms:
                m = tuple(u + v for u, v in zip(a, b))
                acc[m] = acc.get(m, 0) + c * x
        return Polynomial(acc, self.p, self.order)

    def evaluate(self, point: Sequence[int]) -> int:
        if len(point) != self.n:
            raise ValueError(f"point has {len(point)} coordinates, expected {self.n}")
        p = self.p
        return sum(c * evaluate_monomial(a, point, p) for a, c in self.terms) % p

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.p == other.p and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.p, self.terms))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        out = []
        for a, c in self.terms:
            mono = format_monomial(a)
            if not any(a):
                out.append(str(c))
            elif c == 1:
                out.append(mono)
            else:
                out.append(f"{c}*{mono}")
        return " + ".join(out)

    def __repr__(self) -> str:
        return f"Polynomial({self}, p={self.p})"


def normal_form(f: Polynomial, G: Sequence[Polynomial], order: TermOrder | None = None) -> Polynomial:
    """Remainder of ``f`` on division by ``G``.

    The largest reducible monomial is always reduced first, using the
    earliest divisor in ``G``.
    """
    order = order or f.order
    if any(g.is_zero() for g in G):
        raise ValueError("cannot divide by the zero polynomial")
    p = f.p
    if order != f.order:
        f = Polynomial(f.terms, p, order)
    leads = [(g.leading_monomial(), inverse(g.leading_coefficient(), p), g) for g in G]
    rest = f
    remainder = []
    while rest:
        a, c = rest.terms[0]
        for b, s, g in leads:
            if all(x <= y for x, y in zip(b, a)):
                quot = tuple(y - x for x, y in zip(b, a))
                rest = rest - g.mul_term(quot, c * s)
                break
        else:
            remainder.append((a, c))
            rest = rest.tail()
    return Polynomial._sorted(tuple(remainder), p, order)


def eliminate_inessential(f: Polynomial, rel: Sequence[Polynomial],
                          order: TermOrder | None = None) -> Polynomial:
    """Rewrite ``f`` so that no variable heading a relation in ``rel`` occurs.

    Each element of ``rel`` must have the shape ``x_b + g`` with leading
    term the single variable ``x_b`` and ``g`` free of relation variables.
    Powers ``x_b^i`` are replaced by ``-x_b^(i-1) * g`` until ``x_b`` is gone,
    largest relation variable first.  The leading term of ``f`` is kept and
    ``f - f*`` lies in the ideal generated by ``rel``.
    """
    order = order or f.order
    p = f.p
    subs = {}
    for h in rel:
        a, c = h.leading_term()
        if sum(a) != 1 or c != 1:
            raise ValueError(f"relation {h} is not of the form x_i + g")
        subs[a.index(1)] = (a, -h.tail())
    if not f:
        return f
    lead = f.leading_monomial()
    bad = [i for i in subs if lead[i]]
    if bad:
        raise ValueError(f"leading term of f contains inessential variable x{bad[0] + 1}")
    by_size = sorted(subs, key=lambda i: order.key(subs[i][0]), reverse=True)
    for i in by_size:
        xb, minus_g = subs[i]
        while any(a[i] for a, _ in f.terms):
            keep = {}
            acc = Polynomial.zero(p, order)
            for a, c in f.terms:
                if a[i]:
                    lower = a[:i] + (a[i] - 1,) + a[i + 1:]
                    acc = acc + minus_g.mul_term(lower, c)
                else:
                    keep[a] = c
            f = Polynomial(keep, p, order) + acc
    return f
