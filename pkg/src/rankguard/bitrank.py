"""Bit-packed GF(2) rank primitives for the hot exhaustive sweeps.

Rows of a binary matrix are ints (bit i = column i).  A whole small matrix
packs into one int key (row r occupies bits [r*ncols, (r+1)*ncols)), which
lets precomputed rank tables turn the inner loops of the capability and
delta-distance sweeps into XOR-plus-lookup.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np


def rank_bits(rows: Iterable[int]) -> int:
    """Rank over GF(2) of the row vectors encoded as ints."""
    pivots: dict[int, int] = {}
    rank = 0
    for v in rows:
        while v:
            h = v.bit_length() - 1
            if h in pivots:
                v ^= pivots[h]
            else:
                pivots[h] = v
                rank += 1
                break
    return rank


def _insert_canonical(basis: tuple[int, ...], v: int) -> tuple[int, ...]:
    """Insert v into a fully reduced leading-bit basis; canonical per subspace."""
    for b in basis:
        if v & (1 << (b.bit_length() - 1)):
            v ^= b
    if not v:
        return basis
    h = 1 << (v.bit_length() - 1)
    reduced = tuple((b ^ v) if (b & h) else b for b in basis)
    return tuple(sorted(reduced + (v,), reverse=True))


def pack_key(rows: Sequence[int], ncols: int) -> int:
    key = 0
    for r, row in enumerate(rows):
        key |= row << (r * ncols)
    return key


class PackedRankTable:
    """rank() lookup for every nrows x ncols GF(2) matrix, nrows*ncols <= 22.

    Built by a subspace DP: scanning the rows of a key in order, the only
    state that matters is the row space seen so far, and subspaces of
    F_2^ncols are few.  The table itself is filled with vectorized
    transition lookups instead of per-key elimination.
    """

    def __init__(self, nrows: int, ncols: int):
        if nrows * ncols > 22:
            raise ValueError("packed table limited to 22 bits")
        self.nrows = nrows
        self.ncols = ncols
        states: dict[tuple[int, ...], int] = {(): 0}
        bases: list[tuple[int, ...]] = [()]
        trans_rows: list[list[int]] = []
        i = 0
        while i < len(bases):
            basis = bases[i]
            row_out = []
            for row in range(1 << ncols):
                new = _insert_canonical(basis, row)
                if new not in states:
                    states[new] = len(bases)
                    bases.append(new)
                row_out.append(states[new])
            trans_rows.append(row_out)
            i += 1
        trans = np.array(trans_rows, dtype=np.int32)
        ranks = np.array([len(b) for b in bases], dtype=np.uint8)

        keys = np.arange(1 << (nrows * ncols), dtype=np.uint32)
        state = np.zeros_like(keys, dtype=np.int32)
        mask = np.uint32((1 << ncols) - 1)
        for r in range(nrows):
            rows = (keys >> np.uint32(r * ncols)) & mask
            state = trans[state, rows]
        self.table = ranks[state]

    def lookup(self, keys: np.ndarray) -> np.ndarray:
        return self.table[keys]

    def rank_of(self, rows: Sequence[int]) -> int:
        return int(self.table[pack_key(rows, self.ncols)])


@lru_cache(maxsize=8)
def packed_rank_table(nrows: int, ncols: int) -> PackedRankTable:
    return PackedRankTable(nrows, ncols)
