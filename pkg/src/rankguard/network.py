"""The (n x m)_q linear network channel at matrix level.

No graph topology is simulated: the universal statements quantify over
transfer/wiretap matrices directly, so realizations are sampled or
enumerated as matrices.  Received packets follow Y = X A^T + Z D^T and the
adversary sees W = X B^T + Z F^T, all over the tower (base-field matrices
acting on extension-field row vectors).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import DimensionMismatch, EnumerationTooLarge, InfeasibleRank
from .gf import FieldCtx, PrimeField
from .linalg import Matrix, ext_vec_times_base_transpose, vec_add
from .rank_metrics import rank_weight
from .subspaces import enumerate_base_subspaces, gaussian_binomial

DEFAULT_ENUM_CAP = 10**6
FALLBACK_REJECTION_TRIES = 10**4


@dataclass(frozen=True)
class ChannelRealization:
    """One network instance: transfer, wiretap and error-routing matrices."""

    A: Matrix
    B: Matrix
    D: Matrix
    Fw: Matrix
    Z: tuple[int, ...]

    @property
    def rho(self) -> int:
        return self.A.ncols - self.A.rank()


def sample_matrix(rng: random.Random, q: int, nrows: int, ncols: int) -> Matrix:
    return Matrix(PrimeField(q),
                  [[rng.randrange(q) for _ in range(ncols)] for _ in range(nrows)], ncols)


def sample_invertible(rng: random.Random, q: int, n: int) -> Matrix:
    while True:
        M = sample_matrix(rng, q, n, n)
        if M.rank() == n:
            return M


def sample_transfer(rng: random.Random, q: int, N: int, n: int, rho_max: int,
                    max_tries: int = FALLBACK_REJECTION_TRIES) -> Matrix:
    """Uniform over F_q^(N x n) conditioned on rank >= n - rho_max."""
    if rho_max < 0 or N < n - rho_max:
        raise InfeasibleRank(f"no {N}x{n} matrix has rank >= {n - rho_max}")
    for _ in range(max_tries):
        A = sample_matrix(rng, q, N, n)
        if A.rank() >= n - rho_max:
            return A
    # q=2 desk scale essentially never gets here; build rank n-rho directly
    r = n - rho_max
    base = PrimeField(q)
    core = Matrix(base, [[1 if i == j else 0 for j in range(n)] for i in range(r)]
                  + [[0] * n for _ in range(N - r)], n)
    return sample_invertible(rng, q, N).matmul(core).matmul(sample_invertible(rng, q, n))


def sample_error_pair(rng: random.Random, ctx: FieldCtx, N: int, t: int) -> tuple[Matrix, tuple[int, ...]]:
    """(D, Z): error routing N x t over F_q and t injected packets over F_{q^m}."""
    D = sample_matrix(rng, ctx.q, N, t)
    Z = tuple(rng.randrange(ctx.order) for _ in range(t))
    return D, Z


def sample_realization(rng: random.Random, ctx: FieldCtx, n: int, N: int, mu: int,
                       t: int, rho_max: int) -> ChannelRealization:
    A = sample_transfer(rng, ctx.q, N, n, rho_max)
    B = sample_matrix(rng, ctx.q, mu, n)
    D, Z = sample_error_pair(rng, ctx, N, t)
    Fw = sample_matrix(rng, ctx.q, mu, t)
    return ChannelRealization(A, B, D, Fw, Z)


def transmit(ctx: FieldCtx, X: Sequence[int], real: ChannelRealization) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(Y, W): the sink's packets and the adversary's observation."""
    if real.A.ncols != len(X) or real.B.ncols != len(X):
        raise DimensionMismatch("transfer width must equal the packet count")
    Y = ext_vec_times_base_transpose(ctx, X, real.A)
    W = ext_vec_times_base_transpose(ctx, X, real.B)
    if real.Z:
        Y = vec_add(ctx, Y, ext_vec_times_base_transpose(ctx, real.Z, real.D))
        W = vec_add(ctx, W, ext_vec_times_base_transpose(ctx, real.Z, real.Fw))
    return Y, W


def enumerate_wiretap(q: int, n: int, mu: int, mode: str = "rowspace",
                      cap: int = DEFAULT_ENUM_CAP) -> Iterator[Matrix]:
    """Wiretap matrices to maximize over.

    Leakage depends on B only through its row space, so the default yields
    one canonical RREF matrix per row space of dimension <= mu.  Full mode
    yields every raw mu x n matrix (cap permitting).
    """
    if mode == "rowspace":
        total = sum(gaussian_binomial(n, i, q) for i in range(min(mu, n) + 1))
        if total > cap:
            raise EnumerationTooLarge(f"{total} row spaces exceed cap {cap}")
        for i in range(min(mu, n) + 1):
            yield from enumerate_base_subspaces(q, n, i)
        return
    if mode == "full":
        if q ** (mu * n) > cap:
            raise EnumerationTooLarge(f"q^(mu*n) = {q**(mu*n)} exceeds cap {cap}")
        base = PrimeField(q)
        for stamp in range(q ** (mu * n)):
            rows = []
            x = stamp
            for _ in range(mu):
                row = []
                for _ in range(n):
                    row.append(x % q)
                    x //= q
                rows.append(row)
            yield Matrix(base, rows, n)
        return
    raise DimensionMismatch(f"unknown wiretap enumeration mode {mode!r}")


def error_count(ctx: FieldCtx, N: int, t: int) -> int:
    total = 0
    for r in range(min(t, N) + 1):
        full_rank_tuples = 1
        for i in range(r):
            full_rank_tuples *= ctx.order - ctx.q**i
        total += gaussian_binomial(N, r, ctx.q) * full_rank_tuples
    return total


def enumerate_errors(ctx: FieldCtx, N: int, t: int,
                     cap: int = DEFAULT_ENUM_CAP) -> Iterator[tuple[int, ...]]:
    """Every distinct error contribution E = Z D^T with base rank <= t.

    Factored without duplicates: the expansion row space of E is a base
    subspace of dimension r <= t with canonical basis R, and E = z R for a
    unique z whose r components are F_q-independent.
    """
    if error_count(ctx, N, t) > cap:
        raise EnumerationTooLarge(f"{error_count(ctx, N, t)} errors exceed cap {cap}")
    for r in range(min(t, N) + 1):
        for R in enumerate_base_subspaces(ctx.q, N, r):
            for z in _independent_tuples(ctx, r):
                E = [ctx.zero] * N
                for zs, row in zip(z, R.rows):
                    for j, c in enumerate(row):
                        if c:
                            E[j] = ctx.add(E[j], ctx.scalar_mul(c, zs))
                yield tuple(E)


def _independent_tuples(ctx: FieldCtx, r: int) -> Iterator[tuple[int, ...]]:
    if r == 0:
        yield ()
        return
    def rec(acc):
        if len(acc) == r:
            yield tuple(acc)
            return
        for z in ctx.nonzero():
            cand = acc + [z]
            if rank_weight(ctx, cand) == len(cand):
                yield from rec(cand)
    yield from rec([])
