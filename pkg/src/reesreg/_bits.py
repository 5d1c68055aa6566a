"""Packed bit-table primitives.

Every membership structure in this package stores a subset of [0, N] as an
arbitrary-precision int: bit i is set iff integer i belongs.  Shifted ORs
then implement Minkowski sums and semigroup closures at word speed instead
of element-at-a-time Python loops.
"""

from __future__ import annotations

from itertools import accumulate
from typing import Iterator


def mask(width: int) -> int:
    """All-ones window covering bit positions 0..width-1."""
    return (1 << width) - 1


def has_bit(bits: int, i: int) -> bool:
    return (bits >> i) & 1 == 1


def iter_bits(bits: int) -> Iterator[int]:
    """Set-bit positions in ascending order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


def lowest_bit(bits: int) -> int:
    """Position of the least set bit; undefined for 0."""
    return (bits & -bits).bit_length() - 1


def reverse_window(bits: int, width: int) -> int:
    """Reflect a bitset inside [0, width): position i maps to width-1-i."""
    s = format(bits & mask(width), "b").zfill(width)
    return int(s[::-1], 2)


def popcount_prefix(bits: int, width: int) -> list[int]:
    """prefix[i] = number of set bits at positions <= i, for i in [0, width)."""
    rev = format(bits & mask(width), "b").zfill(width)[::-1]
    return list(accumulate(map(int, rev)))
