"""Bit-vector helpers for subsets of a dense vertex range.

Vertex subsets are plain ints: bit i set means position i is in the set.
Positions are indices into a sorted vertex list, so the same helpers work
for hypergraphs whose vertex ids are not contiguous.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator


def mask_of(positions: Iterable[int]) -> int:
    m = 0
    for p in positions:
        m |= 1 << p
    return m


def bits(mask: int) -> Iterator[int]:
    """Yield set bit positions in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def popcount(mask: int) -> int:
    return mask.bit_count()


def submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask``, including 0 and ``mask`` itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask
