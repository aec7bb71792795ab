"""Deterministic seeded randomness for reproducible instance generation.

The generator is a split-mix style 64-bit state machine, fully specified so
any implementation can reproduce identical instances from the same seed:

    state   <- (state + 0x9E3779B97F4A7C15) mod 2^64
    z       <- state
    z       <- (z XOR (z >> 30)) * 0xBF58476D1CE4E5B9   mod 2^64
    z       <- (z XOR (z >> 27)) * 0x94D049BB133111EB   mod 2^64
    output  <- z XOR (z >> 31)

Derived draws are defined in terms of next_u64 exactly as implemented below
(modulo reduction for bounded integers, a 53-bit mantissa for unit floats,
descending Fisher-Yates for shuffles).
"""

from __future__ import annotations

from typing import List, Sequence, TypeVar

_MASK = (1 << 64) - 1

T = TypeVar("T")


class SplitMix64:
    __slots__ = ("_state",)

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform-ish integer in [0, bound); modulo reduction by design."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next_u64() % bound

    def unit_float(self) -> float:
        return (self.next_u64() >> 11) * (2.0 ** -53)

    def chance(self, probability: float) -> bool:
        return self.unit_float() < probability

    def choice(self, seq: Sequence[T]) -> T:
        return seq[self.below(len(seq))]

    def shuffle(self, items: List[T]) -> None:
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]

    def nonzero_int(self, magnitude: int = 9) -> int:
        """A nonzero integer in [-magnitude, magnitude]."""
        value = 1 + self.below(magnitude)
        return -value if self.below(2) else value
