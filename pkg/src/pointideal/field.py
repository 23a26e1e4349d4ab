"""Arithmetic in prime fields and incremental exact elimination.

Field elements are plain Python ints kept in the canonical range ``[0, p)``.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = [
    "DimensionError",
    "EchelonBasis",
    "PrimeField",
    "inverse",
    "is_prime",
    "solve_linear",
]

# Deterministic Miller-Rabin witness set, valid for every n < 2**64.
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


class DimensionError(ValueError):
    """Vector or matrix shapes do not line up."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in _MR_WITNESSES:
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def inverse(a: int, p: int) -> int:
    """Multiplicative inverse of ``a`` modulo the prime ``p``."""
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"0 has no inverse mod {p}")
    # pow(a, -1, p) runs the extended Euclidean algorithm
    return pow(a, -1, p)


@dataclass(frozen=True)
class PrimeField:
    """The coefficient field F_p."""

    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not 2 <= self.p < 2**31:
            raise ValueError(f"modulus must be an integer in [2, 2^31), got {self.p!r}")
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")

    def __call__(self, value: int) -> int:
        return value % self.p

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def inverse(self, a: int) -> int:
        return inverse(a, self.p)


class EchelonBasis:
    """Row-echelon accumulator over F_p that remembers how it was built.

    Vectors are inserted one at a time.  Each independent vector is kept
    (in reduced form) together with its expression in terms of the
    previously *incorporated* vectors, so a dependent vector can be written
    back as a combination of the originals.
    """

    def __init__(self, p: int, dim: int):
        self.p = p
        self.dim = dim
        # (pivot column, reduced row with 1 at pivot, combination of originals)
        self._rows: list[tuple[int, list[int], list[int]]] = []

    def __len__(self) -> int:
        return len(self._rows)

    def _reduce(self, v) -> tuple[list[int], list[int]]:
        if len(v) != self.dim:
            raise DimensionError(f"expected a vector of length {self.dim}, got {len(v)}")
        p = self.p
        w = [x % p for x in v]
        k = len(self._rows)
        used = [0] * k  # w = v - sum(used_i * row_i)
        for i, (piv, row, _) in enumerate(self._rows):
            f = w[piv]
            if f:
                used[i] = f
                for j in range(piv, self.dim):
                    if row[j]:
                        w[j] = (w[j] - f * row[j]) % p
        return w, used

    def _combine(self, used: list[int]) -> list[int]:
        p = self.p
        k = len(self._rows)
        out = [0] * k
        for f, (_, _, combo) in zip(used, self._rows):
            if f:
                for j, c in enumerate(combo):
                    if c:
                        out[j] = (out[j] + f * c) % p
        return out

    def express(self, v) -> list[int] | None:
        """Coefficients writing ``v`` over the incorporated vectors, or None.

        Does not modify the accumulator.
        """
        w, used = self._reduce(v)
        if any(w):
            return None
        return self._combine(used)

    def insert(self, v) -> list[int] | None:
        """Add ``v`` to the accumulator.

        Returns None when ``v`` was independent (and is now incorporated),
        otherwise the coefficient list ``c`` with ``v == sum(c[j] * u_j)``
        over the incorporated vectors ``u_j`` in insertion order.
        """
        w, used = self._reduce(v)
        piv = next((j for j, x in enumerate(w) if x), None)
        if piv is None:
            return self._combine(used)
        p = self.p
        k = len(self._rows)
        # new row = (v - sum used_i row_i) / w[piv]
        combo = [(-c) % p for c in self._combine(used)]
        combo.append(1)
        s = inverse(w[piv], p)
        row = [x * s % p for x in w]
        combo = [c * s % p for c in combo]
        for _, _, old in self._rows:
            old.append(0)
        assert len(combo) == k + 1
        self._rows.append((piv, row, combo))
        return None


def solve_linear(A, b, p: int) -> list[int] | None:
    """Solve ``A c = b`` over F_p.

    ``A`` is a list of ``m`` rows of length ``r`` (``r`` may be 0).  Returns a
    solution vector, unique when the columns of ``A`` are independent, or
    None if the system is inconsistent.
    """
    m = len(b)
    if len(A) != m:
        raise DimensionError(f"A has {len(A)} rows but b has length {m}")
    r = len(A[0]) if m else 0
    if any(len(row) != r for row in A):
        raise DimensionError("ragged matrix")
    basis = EchelonBasis(p, m)
    pivots = []
    for j in range(r):
        if basis.insert([row[j] for row in A]) is None:
            pivots.append(j)
    coeffs = basis.express(b)
    if coeffs is None:
        return None
    c = [0] * r
    for j, x in zip(pivots, coeffs):
        c[j] = x
    return c
