"""Monomials and term orders.

A monomial is a tuple of ``n`` nonnegative exponents; ``(0,) * n`` is 1.
Variables are indexed from 0 internally and printed as ``x1 .. xn``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from operator import itemgetter, neg
from typing import Callable, Sequence

import numpy as np

Monomial = tuple[int, ...]

__all__ = [
    "Monomial",
    "TermOrder",
    "compare",
    "divides",
    "induced_order",
    "one",
    "parse_order",
    "variable_monomial",
    "variable_rank",
]

KINDS = ("lex", "grevlex", "matrix")


def one(n: int) -> Monomial:
    return (0,) * n


def variable_monomial(n: int, i: int) -> Monomial:
    a = [0] * n
    a[i] = 1
    return tuple(a)


def divides(a: Monomial, b: Monomial) -> bool:
    if len(a) != len(b):
        raise ValueError(f"monomial lengths differ: {len(a)} vs {len(b)}")
    return all(x <= y for x, y in zip(a, b))


def _getter(idx: Sequence[int]) -> Callable[[Monomial], tuple]:
    if len(idx) == 1:
        i = idx[0]
        return lambda a: (a[i],)
    return itemgetter(*idx)


@dataclass(frozen=True)
class TermOrder:
    """Monomial order on ``n`` variables.

    ``priority`` lists variable indices from largest to smallest.  For the
    matrix kind, column ``j`` of ``weights`` acts on the exponent of
    variable ``priority[j]``; monomials are compared by the weight vectors
    lexicographically.
    """

    kind: str
    n: int
    priority: tuple[int, ...] = None
    weights: tuple[tuple[int, ...], ...] | None = None
    key: Callable[[Monomial], tuple] = field(init=False, repr=False, compare=False)
    position: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown term order {self.kind!r}")
        if self.n < 1:
            raise ValueError("a term order needs at least one variable")
        prio = tuple(range(self.n)) if self.priority is None else tuple(self.priority)
        if sorted(prio) != list(range(self.n)):
            raise ValueError(f"variable priority {prio} is not a permutation of 0..{self.n - 1}")
        object.__setattr__(self, "priority", prio)
        position = [0] * self.n
        for j, v in enumerate(prio):
            position[v] = j
        object.__setattr__(self, "position", tuple(position))
        if self.kind == "matrix":
            if self.weights is None:
                raise ValueError("matrix order needs a weight matrix")
            w = tuple(tuple(int(x) for x in row) for row in self.weights)
            _check_weights(w, self.n)
            object.__setattr__(self, "weights", w)
        elif self.weights is not None:
            raise ValueError(f"{self.kind} order takes no weight matrix")
        object.__setattr__(self, "key", self._make_key())

    def _make_key(self):
        prio = self.priority
        if self.kind == "lex":
            if prio == tuple(range(self.n)):
                return tuple
            return _getter(prio)
        if self.kind == "grevlex":
            rev = _getter(prio[::-1])
            return lambda a: (sum(a), *map(neg, rev(a)))
        get = _getter(prio)
        rows = self.weights
        return lambda a: tuple(sum(w * e for w, e in zip(row, get(a))) for row in rows)

    def compare(self, a: Monomial, b: Monomial) -> int:
        """-1, 0 or 1 as ``a`` is smaller than, equal to or larger than ``b``."""
        if len(a) != self.n or len(b) != self.n:
            raise ValueError(f"expected monomials of length {self.n}")
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def variable_rank(self) -> list[int]:
        return list(reversed(self.priority))

    def as_matrix(self) -> tuple[tuple[int, ...], ...]:
        """Weight matrix (columns in priority order) defining this order."""
        if self.kind == "matrix":
            return self.weights
        n = self.n
        if self.kind == "lex":
            return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
        rows = [(1,) * n]
        for k in range(n - 1, 0, -1):
            rows.append(tuple(-int(j == k) for j in range(n)))
        return tuple(rows)

    def to_matrix_order(self) -> "TermOrder":
        return TermOrder("matrix", self.n, self.priority, self.as_matrix())

    def induced(self, variables) -> "TermOrder":
        """Order on the subring in ``variables`` (given by ambient index).

        The subring's variables are renumbered ``0..k-1`` in ascending
        ambient index.  Comparing two subring monomials agrees with comparing
        their zero-extensions under ``self``.
        """
        vs = sorted(set(variables))
        if not vs:
            raise ValueError("induced order needs at least one variable")
        if vs[0] < 0 or vs[-1] >= self.n:
            raise ValueError(f"variable index out of range for {self.n} variables")
        local = {v: i for i, v in enumerate(vs)}
        chosen = sorted(self.position[v] for v in vs)
        prio = tuple(local[self.priority[j]] for j in chosen)
        if self.kind != "matrix":
            return TermOrder(self.kind, len(vs), prio)
        rows = []
        for row in self.weights:
            sub = tuple(row[j] for j in chosen)
            if any(sub):
                rows.append(sub)
        return TermOrder("matrix", len(vs), prio, tuple(rows))

    def spec(self) -> str:
        if self.kind == "matrix":
            text = "matrix:" + ",".join(str(x) for row in self.weights for x in row)
        else:
            text = self.kind
        if self.priority != tuple(range(self.n)):
            text += " varorder=" + ",".join(str(v + 1) for v in self.priority)
        return text


def _check_weights(w, n: int) -> None:
    if not w or any(len(row) != n for row in w):
        raise ValueError(f"weight matrix must have {n} columns")
    if np.linalg.matrix_rank(np.array(w, dtype=float)) != n:
        raise ValueError("weight matrix must have full column rank")
    for j in range(n):
        first = next((row[j] for row in w if row[j]), 0)
        if first <= 0:
            raise ValueError(f"first nonzero entry of weight column {j + 1} must be positive")


def compare(order: TermOrder, a: Monomial, b: Monomial) -> int:
    return order.compare(a, b)


def variable_rank(order: TermOrder) -> list[int]:
    """Variable indices sorted from smallest to largest under ``order``."""
    return order.variable_rank()


def induced_order(order: TermOrder, variables) -> TermOrder:
    return order.induced(variables)


def parse_order(text: str, n: int, varorder: str | None = None) -> TermOrder:
    """Parse ``lex``, ``grevlex`` or ``matrix:<n*n comma separated ints>``.

    ``varorder`` is a comma separated list of 1-based variable indices,
    largest first.  It may also be appended to ``text`` as
    ``" varorder=..."``.
    """
    parts = text.split()
    if not parts:
        raise ValueError("empty term order")
    head = parts[0]
    for extra in parts[1:]:
        if not extra.startswith("varorder="):
            raise ValueError(f"unexpected term order component {extra!r}")
        if varorder is not None:
            raise ValueError("varorder given twice")
        varorder = extra[len("varorder="):]
    prio = None
    if varorder:
        try:
            prio = tuple(int(v) - 1 for v in varorder.split(","))
        except ValueError:
            raise ValueError(f"bad varorder {varorder!r}") from None
        if len(prio) != n:
            raise ValueError(f"varorder must list all {n} variables")
    if head in ("lex", "grevlex"):
        return TermOrder(head, n, prio)
    if head.startswith("matrix:"):
        try:
            vals = [int(x) for x in head[len("matrix:"):].split(",")]
        except ValueError:
            raise ValueError(f"bad matrix order {head!r}") from None
        if len(vals) != n * n:
            raise ValueError(f"matrix order needs {n * n} entries, got {len(vals)}")
        rows = tuple(tuple(vals[i * n:(i + 1) * n]) for i in range(n))
        return TermOrder("matrix", n, prio, rows)
    raise ValueError(f"unknown term order {text!r}")
