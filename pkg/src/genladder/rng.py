"""Portable seeded randomness for instance generation.

The generator is SplitMix64 (Steele, Lea & Flood) so that instances can be
reproduced bit for bit in any language:

    state += 0x9E3779B97F4A7C15            (mod 2**64)
    z = state
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9  (mod 2**64)
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB  (mod 2**64)
    return z ^ (z >> 31)

Bounded integers use rejection of the lowest ``2**64 mod bound`` outputs
followed by ``x mod bound``.  Sampling ``k`` of ``N`` cells without
replacement uses Floyd's algorithm.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1


class SplitMix64:
    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform integer in ``[0, bound)``."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        threshold = (1 << 64) % bound
        while True:
            x = self.next_u64()
            if x >= threshold:
                return x % bound

    def between(self, lo: int, hi: int) -> int:
        """Uniform integer in ``[lo, hi]``."""
        return lo + self.below(hi - lo + 1)

    def sample(self, population: int, k: int) -> list[int]:
        """``k`` distinct integers from ``range(population)``, sorted (Floyd)."""
        if not 0 <= k <= population:
            raise ValueError(f"cannot draw {k} of {population}")
        chosen: set[int] = set()
        for j in range(population - k, population):
            t = self.below(j + 1)
            chosen.add(j if t in chosen else t)
        return sorted(chosen)
