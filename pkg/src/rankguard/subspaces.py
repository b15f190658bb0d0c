"""Enumeration of the subspace families that the profile reductions range over.

Frobenius-invariant subspaces of F_{q^m}^n (those with V = V^q) are exactly
the subspaces admitting a basis of base-field vectors, so the i-dimensional
family is enumerated as the F_q-subspaces of F_q^n, one canonical RREF basis
each, lifted to the extension by the constant embedding.  Coordinate
subspaces E_I (unit-vector spans) are the sub-family behind the classical
Hamming-side profiles.

Enumeration order is deterministic: lexicographic over RREF pivot patterns,
then lexicographic over the free entries, so streamed reductions and golden
files are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .errors import EnumerationTooLarge, PreconditionError
from .gf import FieldCtx, PrimeField
from .linalg import Matrix, Subspace, embed_base_matrix

#: Families larger than this refuse to enumerate rather than silently sample.
DEFAULT_FAMILY_CAP = 10**6


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def enumerate_base_subspaces(q: int, n: int, i: int) -> Iterator[Matrix]:
    """All i-dim subspaces of F_q^n as RREF basis matrices, canonical order."""
    base = PrimeField(q)
    if i == 0:
        yield Matrix(base, [], n)
        return
    if i > n:
        return
    for pivots in combinations(range(n), i):
        free_cols = [c for c in range(n) if c not in pivots
                     and any(c > p for p in pivots)]
        # entry (r, c) is free iff c > pivots[r] and c is not a pivot column
        slots = [(r, c) for r in range(i) for c in free_cols if c > pivots[r]]
        for assign in range(q ** len(slots)):
            rows = [[0] * n for _ in range(i)]
            for r, p in enumerate(pivots):
                rows[r][p] = 1
            x = assign
            for (r, c) in slots:
                rows[r][c] = x % q
                x //= q
            yield Matrix(base, rows, n)


@dataclass
class QInvariantFamily:
    """Lazily enumerated family of i-dim Frobenius-invariant subspaces."""

    ctx: FieldCtx
    n: int
    i: int
    cap: int = DEFAULT_FAMILY_CAP

    def __post_init__(self):
        if not 0 <= self.i <= self.n:
            raise PreconditionError(f"need 0 <= i={self.i} <= n={self.n}")
        count = gaussian_binomial(self.n, self.i, self.ctx.q)
        if count > self.cap:
            raise EnumerationTooLarge(
                f"[{self.n} choose {self.i}]_{self.ctx.q} = {count} exceeds cap {self.cap}")
        self.count = count

    def base_bases(self) -> Iterator[Matrix]:
        yield from enumerate_base_subspaces(self.ctx.q, self.n, self.i)

    def __iter__(self) -> Iterator[Subspace]:
        for base_m in self.base_bases():
            yield Subspace(self.ctx, self.n, embed_base_matrix(self.ctx, base_m))


@dataclass
class CoordinateFamily:
    """Coordinate subspaces E_I over index sets I of a fixed size."""

    ctx: FieldCtx
    n: int
    i: int

    def __post_init__(self):
        if not 0 <= self.i <= self.n:
            raise PreconditionError(f"need 0 <= i={self.i} <= n={self.n}")
        from math import comb
        self.count = comb(self.n, self.i)

    def index_sets(self) -> Iterator[tuple[int, ...]]:
        yield from combinations(range(self.n), self.i)

    def __iter__(self) -> Iterator[Subspace]:
        for idx in self.index_sets():
            yield coordinate_subspace(self.ctx, self.n, idx)


def coordinate_subspace(ctx: FieldCtx, n: int, indices) -> Subspace:
    rows = []
    for j in sorted(indices):
        row = [ctx.zero] * n
        row[j] = ctx.one
        rows.append(row)
    return Subspace(ctx, n, Matrix(ctx, rows, n))


def enumerate_qinvariant(ctx: FieldCtx, n: int, i: int,
                         cap: int = DEFAULT_FAMILY_CAP) -> QInvariantFamily:
    return QInvariantFamily(ctx, n, i, cap)


def frobenius_image(V: Subspace, iterate: int = 1) -> Subspace:
    ctx = V.ctx
    rows = [[ctx.frobenius(a, iterate) for a in row] for row in V.basis.rows]
    return Subspace.from_rows(ctx, V.n, rows)


def is_qinvariant(V: Subspace) -> bool:
    """True iff the Frobenius image of every basis row stays inside V."""
    ctx = V.ctx
    return all(V.contains(tuple(ctx.frobenius(a) for a in row))
               for row in V.basis.rows)


def galois_closure(V: Subspace) -> Subspace:
    """Smallest Frobenius-invariant subspace containing V: sum of V^(q^i)."""
    acc = V
    for i in range(1, V.ctx.m):
        acc = acc.sum_with(frobenius_image(V, i))
    return acc
