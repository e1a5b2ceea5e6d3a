"""Portable seeded randomness: the splitmix64 generator with split streams.

The generator is fully specified so corpora are reproducible bit-for-bit:
state advances by the 64-bit golden gamma 0x9E3779B97F4A7C15 and each output
is the finalizer

    z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9
    z ^= z >> 27;  z *= 0x94D049BB133111EB
    z ^= z >> 31

with all arithmetic modulo 2**64.  Bounded draws use rejection sampling, so
they are unbiased and depend only on the raw output sequence.
"""

from __future__ import annotations

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_MIX_A = 0xBF58476D1CE4E5B9
_MIX_B = 0x94D049BB133111EB


def _mix64(z: int) -> int:
    z = ((z ^ (z >> 30)) * _MIX_A) & _MASK64
    z = ((z ^ (z >> 27)) * _MIX_B) & _MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """Deterministic 64-bit generator; cheap to seed, cheap to split."""

    __slots__ = ("_state",)

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        return _mix64(self._state)

    def below(self, bound: int) -> int:
        """Unbiased integer in [0, bound) by rejection."""
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        limit = (1 << 64) - ((1 << 64) % bound)
        while True:
            u = self.next_u64()
            if u < limit:
                return u % bound

    def chance(self, p: float) -> bool:
        """Bernoulli draw; consumes exactly one output regardless of p."""
        if not 0.0 <= p <= 1.0:
            raise ValueError(f"probability must be in [0, 1], got {p}")
        return self.next_u64() < int(p * (1 << 64))

    def split(self) -> "SplitMix64":
        """Fork an independently seeded child generator."""
        return SplitMix64(self.next_u64())


def stream(seed: int, index: int) -> SplitMix64:
    """The index-th independent stream of a root seed.

    Equivalent to seeding from the index-th output of ``SplitMix64(seed)``
    but computed in O(1), so streams can be assigned to tasks in any order.
    """
    if index < 0:
        raise ValueError(f"stream index must be nonnegative, got {index}")
    state = (seed + (index + 1) * _GOLDEN) & _MASK64
    return SplitMix64(_mix64(state))
