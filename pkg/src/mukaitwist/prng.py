"""Deterministic, splittable PRNG for the verification suites.

The generator is SplitMix64 (Steele, Lea, Flood): 64-bit state advanced by
the golden-gamma constant, output whitened by a two-round xorshift-multiply
finalizer. It is pinned here, rather than using the interpreter default, so
that a (trials, seed) pair identifies the same sample sequence on any
platform or reimplementation.

Per-trial substreams are derived by index, never by sharing state:

    state_0(seed, index) = mix64((seed + GAMMA * index) mod 2**64)

so trials can run in any order, or in parallel, and produce identical
samples.
"""
from __future__ import annotations

_MASK = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """SplitMix64 finalizer; bijective on 64-bit words."""
    z &= _MASK
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


class SplitMix64:
    """Sequential SplitMix64 stream."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + GAMMA) & _MASK
        return mix64(self.state)

    def below(self, n: int) -> int:
        """Uniform draw from [0, n) by rejection on the top bits."""
        if n <= 0:
            raise ValueError("below() requires n >= 1")
        bits = (n - 1).bit_length()
        while True:
            r = self.next_u64() >> (64 - bits) if bits else 0
            if r < n:
                return r

    def integer(self, lo: int, hi: int) -> int:
        """Uniform integer in the inclusive range [lo, hi]."""
        if lo > hi:
            raise ValueError("empty range")
        return lo + self.below(hi - lo + 1)

    def integers(self, lo: int, hi: int, count: int) -> tuple[int, ...]:
        return tuple(self.integer(lo, hi) for _ in range(count))


def substream(seed: int, index: int) -> SplitMix64:
    """Independent stream for trial 'index' of a run seeded with 'seed'."""
    return SplitMix64(mix64((seed + GAMMA * index) & _MASK))
