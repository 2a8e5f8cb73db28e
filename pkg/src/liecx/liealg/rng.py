"""Deterministic pseudo-random numbers with a frozen cross-platform contract.

Randomised routines in this package (generic conjugators, witness vectors,
prime selection) must produce identical streams for identical seeds on every
platform and Python version, so golden tests stay valid.  ``random.Random``
does not promise that across major versions, hence this tiny generator with
an explicitly pinned algorithm:

* state update: ``state = (state + 0x9E3779B97F4A7C15) mod 2**64``
* output mix:   ``z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;``
                ``z ^= z >> 27; z *= 0x94D049BB133111EB; z ^= z >> 31``
  (all arithmetic mod ``2**64``)

``randint`` maps the raw stream through a plain modulus.  The tiny modulo
bias is irrelevant here — draws only need to be generic, not uniform — and
keeping the mapping trivial keeps the contract trivial.
"""

from __future__ import annotations

from typing import Sequence, TypeVar

_MASK = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_MIX1 = 0xBF58476D1CE4E5B9
_MIX2 = 0x94D049BB133111EB

T = TypeVar("T")


class SplitMix64:
    """Seeded generator; the output stream is part of the package contract."""

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK
        z = self._state
        z = ((z ^ (z >> 30)) * _MIX1) & _MASK
        z = ((z ^ (z >> 27)) * _MIX2) & _MASK
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in ``[lo, hi]`` (inclusive)."""
        if hi < lo:
            raise ValueError(f"empty range [{lo}, {hi}]")
        return lo + self.next_u64() % (hi - lo + 1)

    def nonzero_int(self, bound: int) -> int:
        """Nonzero integer in ``[-bound, bound]``."""
        while True:
            value = self.randint(-bound, bound)
            if value:
                return value

    def choice(self, seq: Sequence[T]) -> T:
        if not seq:
            raise ValueError("empty sequence")
        return seq[self.next_u64() % len(seq)]

    def fork(self) -> "SplitMix64":
        """Independent child stream (e.g. one per worker or per trial)."""
        return SplitMix64(self.next_u64())
