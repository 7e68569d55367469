"""Deterministic random number generation.

Everything seeded in this package flows through the SplitMix64 generator
below.  It is a fixed, fully specified algorithm (Steele, Lea & Flood's
64-bit mix used by java.util.SplittableRandom), so a seed reproduces the
same stream on any platform and any Python version.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """SplitMix64 finalizer: avalanche a 64-bit value."""
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """SplitMix64 stream: state advances by the 64-bit golden ratio."""

    __slots__ = ("_state",)

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        return mix64(self._state)

    def below(self, bound: int) -> int:
        """Uniform integer in [0, bound) via top-bits rejection sampling."""
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        bits = (bound - 1).bit_length()
        if bits == 0:
            return 0
        while True:
            r = self.next_u64() >> (64 - bits)
            if r < bound:
                return r


def derive_seed(base_seed: int, *values: int) -> int:
    """Mix a base seed with integer coordinates into a fresh 64-bit seed.

    Each coordinate is absorbed in order through mix64, so e.g.
    (n, m, run_index) cells of an experiment grid get independent,
    individually reproducible streams.
    """
    state = mix64(base_seed ^ _GOLDEN)
    for v in values:
        state = mix64((state + _GOLDEN + (v & _MASK64)) & _MASK64)
    return state
