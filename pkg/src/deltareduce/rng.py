"""Seedable 64-bit PRNG used everywhere randomness is needed.

The generator is SplitMix64 (Steele, Lea & Flood), chosen because it is
trivial to reimplement bit-exactly in any language, so corpora and Monte
Carlo runs are reproducible from the seed alone:

    state <- (state + 0x9E3779B97F4A7C15) mod 2^64
    z <- state
    z <- (z XOR (z >> 30)) * 0xBF58476D1CE4E5B9 mod 2^64
    z <- (z XOR (z >> 27)) * 0x94D049BB133111EB mod 2^64
    output z XOR (z >> 31)

Floats in [0, 1) take the top 53 bits of one output.  Independent
substreams (one per Monte Carlo trial) are seeded with the (i+1)-th raw
output of a SplitMix64 whose state is the base seed, which is the pure
function mix64(seed + (i+1) * 0x9E3779B97F4A7C15); trials therefore do
not depend on evaluation order.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15


def _mix64(z: int) -> int:
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return z ^ (z >> 31)


class SplitMix64:
    """SplitMix64 stream started from a 64-bit seed."""

    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        return _mix64(self._state)

    def next_float(self) -> float:
        # 53-bit mantissa, uniform in [0, 1).
        return (self.next_u64() >> 11) * 2.0**-53


def substream(seed: int, index: int) -> SplitMix64:
    """Independent stream for (seed, index); index >= 0."""
    if index < 0:
        raise ValueError("substream index must be >= 0")
    return SplitMix64(_mix64((seed + (index + 1) * _GAMMA) & _MASK))
