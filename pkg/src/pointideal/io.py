"""Text formats: variety files and rendered results."""

from __future__ import annotations

from .essbm import GroebnerResult, Variety
from .order import Monomial
from .poly import Polynomial, format_monomial


class ParseError(ValueError):
    pass


def parse_variety(text: str, strict: bool = False) -> Variety:
    """Read the ``p / n / m / rows`` variety format.

    Repeated rows are an error when ``strict``; otherwise they are dropped
    with a warning.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    while lines and not lines[-1]:
        lines.pop()
    header = {}
    for want, ln in zip(("p", "n", "m"), lines[:3]):
        parts = ln.split()
        if len(parts) != 2 or parts[0] != want:
            raise ParseError(f"expected '{want} <integer>', got {ln!r}")
        try:
            header[want] = int(parts[1])
        except ValueError:
            raise ParseError(f"{want} must be an integer, got {parts[1]!r}") from None
    if len(header) != 3:
        raise ParseError("missing header lines (need p, n and m)")
    p, n, m = header["p"], header["n"], header["m"]
    if n < 1:
        raise ParseError("n must be positive")
    if m < 1:
        raise ParseError("m must be positive")
    rows = lines[3:]
    if len(rows) != m:
        raise ParseError(f"header says m = {m} but found {len(rows)} point rows")
    points = []
    for i, ln in enumerate(rows, start=4):
        try:
            pt = [int(x) for x in ln.split()]
        except ValueError:
            raise ParseError(f"line {i}: non-integer coordinate") from None
        if len(pt) != n:
            raise ParseError(f"line {i}: expected {n} coordinates, got {len(pt)}")
        if any(not 0 <= x < p for x in pt):
            raise ParseError(f"line {i}: coordinate out of range [0, {p})")
        points.append(pt)
    try:
        return Variety.from_points(points, p, n, strict=strict)
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def format_variety(v: Variety) -> str:
    out = [f"p {v.p}", f"n {v.n_vars}", f"m {v.m}"]
    out.extend(" ".join(str(x) for x in pt) for pt in v.points)
    return "\n".join(out) + "\n"


def format_monomials(sm: list[Monomial]) -> str:
    return ", ".join(format_monomial(a) for a in sm)


def format_result(g: list[Polynomial], sm: list[Monomial], ev=None) -> str:
    out = [str(f) for f in g]
    out.append(("SM: " + format_monomials(sm)).rstrip())
    if ev is not None:
        out.append(("EV: " + ", ".join(f"x{i + 1}" for i in sorted(ev))).rstrip())
    return "\n".join(out) + "\n"


def format_groebner_result(res: GroebnerResult) -> str:
    return format_result(res.g, res.sm, res.ev)
