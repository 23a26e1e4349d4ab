"""Reproducible random varieties.

The generator is xoshiro256** seeded through splitmix64, so a given seed
yields the same stream on every platform and Python version.
"""

from __future__ import annotations

from .essbm import Variety
from .field import PrimeField

MASK64 = (1 << 64) - 1


def splitmix64(state: int) -> tuple[int, int]:
    """One splitmix64 step: returns ``(new_state, output)``."""
    state = (state + 0x9E3779B97F4A7C15) & MASK64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return state, z ^ (z >> 31)


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & MASK64


class Xoshiro256:
    """xoshiro256** 64-bit generator."""

    def __init__(self, seed: int):
        state = seed & MASK64
        s = []
        for _ in range(4):
            state, out = splitmix64(state)
            s.append(out)
        self.s = s

    def next64(self) -> int:
        s = self.s
        result = (_rotl((s[1] * 5) & MASK64, 7) * 9) & MASK64
        t = (s[1] << 17) & MASK64
        s[2] ^= s[0]
        s[3] ^= s[1]
        s[1] ^= s[2]
        s[0] ^= s[3]
        s[2] ^= t
        s[3] = _rotl(s[3], 45)
        return result

    def residue(self, p: int) -> int:
        """Uniform draw from ``[0, p)`` by rejection above ``floor(2^64/p)*p``."""
        limit = ((1 << 64) // p) * p
        while True:
            x = self.next64()
            if x < limit:
                return x % p


def random_variety(p: int, n: int, m: int, seed: int) -> Variety:
    """``m`` distinct uniform points of F_p^n determined by ``seed``."""
    PrimeField(p)
    if n < 1 or m < 1:
        raise ValueError("need n >= 1 and m >= 1")
    if m > p ** n:
        raise ValueError(f"cannot draw {m} distinct points from F_{p}^{n} ({p ** n} points)")
    rng = Xoshiro256(seed)
    seen: dict[tuple[int, ...], None] = {}
    while len(seen) < m:
        pt = tuple(rng.residue(p) for _ in range(n))
        seen.setdefault(pt, None)
    return Variety(tuple(seen), p, n)
