"""Mixed-radix tuple coding and the entropy helper shared by all modules.

Tuples over {0..v-1} are stored in dense counters/accumulators indexed by
their big-endian base-v encoding, so index order equals lexicographic
tuple order.
"""

from __future__ import annotations

from math import log2
from typing import Iterable


def encode_tuple(symbols: Iterable[int], v: int) -> int:
    idx = 0
    for s in symbols:
        idx = idx * v + s
    return idx


def decode_index(idx: int, v: int, length: int) -> tuple[int, ...]:
    out = [0] * length
    for pos in range(length - 1, -1, -1):
        idx, out[pos] = divmod(idx, v)
    return tuple(out)


def entropy_bits(masses: Iterable) -> float:
    """Shannon entropy in bits. Masses may be exact rationals; 0*log(0) = 0."""
    h = 0.0
    for p in masses:
        if p:
            pf = float(p)
            h -= pf * log2(pf)
    return h
