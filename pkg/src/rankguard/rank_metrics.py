"""Rank weight/distance and the relative profile parameters of a code pair.

Two exhaustively-computed tables drive everything downstream:

* the relative dimension/intersection profile (RDIP): for each subspace
  dimension i, the largest gap dim(C1 cap V) - dim(C2 cap V) over the
  i-dimensional Frobenius-invariant subspaces V, and
* the relative generalized rank weight (RGRW): for each gap level i, the
  smallest subspace dimension realizing it, read off the RDIP table (the
  two definitions agree; tests cross-check a direct minimization).

Swapping the Frobenius-invariant family for coordinate subspaces yields the
Hamming-side analogues (RDLP / RGHW), kept here for cross-checks: rank-side
weights can never exceed Hamming-side ones.

Intersection dimensions are computed through duals,
dim(C cap V) = n - dim(C_dual + V_dual), so one algorithm serves sums,
intersections and the duality identities alike.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bitrank import rank_bits
from .codes import LinearCode
from .errors import LengthMismatch, NotASubcode, PreconditionError
from .gf import FieldCtx
from .linalg import Matrix, Subspace, embed_base_matrix, expand_to_base
from .subspaces import DEFAULT_FAMILY_CAP, CoordinateFamily, QInvariantFamily


def rank_weight(ctx: FieldCtx, x) -> int:
    """Number of F_q-linearly-independent coordinates of x."""
    if ctx.q == 2:
        return rank_bits(x)
    return expand_to_base(ctx, x).rank()


def rank_distance(ctx: FieldCtx, x, y) -> int:
    if len(x) != len(y):
        raise LengthMismatch("rank distance needs equal lengths")
    return rank_weight(ctx, tuple(ctx.sub(b, a) for a, b in zip(x, y)))


@dataclass(frozen=True)
class ProfileTable:
    """Intersection-gap maxima indexed by subspace dimension 0..n."""

    kind: str
    values: tuple[int, ...]

    def at(self, i: int) -> int:
        return self.values[i]

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True)
class WeightTable:
    """Minimal realizing dimensions indexed by gap level 1..dim(C1/C2)."""

    kind: str
    values: tuple[int, ...]

    def at(self, i: int) -> int:
        if not 1 <= i <= len(self.values):
            raise PreconditionError(f"weight index {i} out of range 1..{len(self.values)}")
        return self.values[i - 1]

    def __len__(self) -> int:
        return len(self.values)


def _check_nested(c1: LinearCode, c2: LinearCode) -> int:
    if not c1.contains(c2) or c2.k >= c1.k:
        raise NotASubcode("need C2 a proper subcode of C1")
    return c1.k - c2.k


def _families(kind: str, ctx, n, cap):
    if kind == "qinvariant":
        return lambda i: QInvariantFamily(ctx, n, i, cap)
    if kind == "coordinate":
        return lambda i: CoordinateFamily(ctx, n, i)
    raise PreconditionError(f"unknown family kind {kind!r}")


def intersection_gap(c1: LinearCode, c2: LinearCode, V: Subspace) -> int:
    """dim(C1 cap V) - dim(C2 cap V), via the dual-sum identity."""
    return (intersection_dim(c1, V) - intersection_dim(c2, V))


def intersection_dim(code: LinearCode, V: Subspace) -> int:
    dual_gen = code.dual().gen
    stacked = dual_gen.stack(V.complement().basis)
    return code.n - stacked.rref()[1]


class _PairEngine:
    """Shared enumeration state for one (C1, C2) pair."""

    def __init__(self, c1: LinearCode, c2: LinearCode, family: str, cap: int):
        self.quotient_dim = _check_nested(c1, c2)
        self.ctx = c1.ctx
        self.n = c1.n
        self.d1 = c1.dual().gen
        self.d2 = c2.dual().gen
        self.make_family = _families(family, self.ctx, self.n, cap)

    def gap_for_base_basis(self, base_basis: Matrix) -> int:
        # V given by its base-field RREF basis; its complement stays base-field.
        perp = embed_base_matrix(self.ctx, base_basis.right_kernel())
        dim1 = self.n - self.d1.stack(perp).rref()[1]
        dim2 = self.n - self.d2.stack(perp).rref()[1]
        return dim1 - dim2

    def gap_for_subspace(self, V: Subspace) -> int:
        perp = V.complement().basis
        dim1 = self.n - self.d1.stack(perp).rref()[1]
        dim2 = self.n - self.d2.stack(perp).rref()[1]
        return dim1 - dim2

    def max_gap(self, i: int) -> int:
        fam = self.make_family(i)
        if isinstance(fam, QInvariantFamily):
            return max(self.gap_for_base_basis(b) for b in fam.base_bases())
        return max(self.gap_for_subspace(V) for V in fam)


def rdip(c1: LinearCode, c2: LinearCode, *, family: str = "qinvariant",
         cap: int = DEFAULT_FAMILY_CAP) -> ProfileTable:
    """Profile table K_0..K_n of the pair, by streaming max over each family."""
    engine = _PairEngine(c1, c2, family, cap)
    values = tuple(engine.max_gap(i) for i in range(engine.n + 1))
    kind = "RDIP" if family == "qinvariant" else "RDLP"
    table = ProfileTable(kind, values)
    _validate_profile(table, engine.quotient_dim)
    return table


def _validate_profile(table: ProfileTable, quotient_dim: int) -> None:
    v = table.values
    assert v[0] == 0 and v[-1] == quotient_dim, "profile endpoints violated"
    assert all(0 <= b - a <= 1 for a, b in zip(v, v[1:])), "profile must rise by unit steps"


def rgrw(c1: LinearCode, c2: LinearCode, *, family: str = "qinvariant",
         method: str = "profile", cap: int = DEFAULT_FAMILY_CAP) -> WeightTable:
    """Weight table M_1..M_l; derived from the profile table by default."""
    kind = "RGRW" if family == "qinvariant" else "RGHW"
    if method == "profile":
        table = rdip(c1, c2, family=family, cap=cap)
        l = table.values[-1]
        values = tuple(min(j for j in range(len(table.values)) if table.values[j] == i)
                       for i in range(1, l + 1))
    elif method == "direct":
        engine = _PairEngine(c1, c2, family, cap)
        l = engine.quotient_dim
        values_list = []
        for i in range(1, l + 1):
            hit = next(j for j in range(engine.n + 1) if engine.max_gap(j) >= i)
            values_list.append(hit)
        values = tuple(values_list)
    else:
        raise PreconditionError(f"unknown method {method!r}")
    table = WeightTable(kind, values)
    assert all(b > a for a, b in zip(values, values[1:])), "weights must strictly increase"
    return table


def rdlp(c1: LinearCode, c2: LinearCode) -> ProfileTable:
    return rdip(c1, c2, family="coordinate")


def rghw(c1: LinearCode, c2: LinearCode) -> WeightTable:
    return rgrw(c1, c2, family="coordinate")


def first_rgrw(c1: LinearCode, c2: LinearCode, **kw) -> int:
    """Smallest rank weight over C1 \\ C2 (the first entry of the weight table)."""
    return rgrw(c1, c2, **kw).at(1)


def verify_bounds(c1: LinearCode, c2: LinearCode) -> dict:
    """Check every structural bound the tables must satisfy; all should pass
    for any correctly computed pair, so a failure flags an implementation bug."""
    ctx = c1.ctx
    n, m = c1.n, ctx.m
    profile = rdip(c1, c2)
    weights = rgrw(c1, c2)
    l = c1.k - c2.k
    report: dict[str, bool] = {}
    v = profile.values
    report["profile_endpoints"] = v[0] == 0 and v[-1] == l
    report["profile_unit_steps"] = all(0 <= b - a <= 1 for a, b in zip(v, v[1:]))
    report["weights_strictly_increasing"] = all(
        b > a for a, b in zip(weights.values, weights.values[1:]))
    cap_term = min(n - c1.k, (m - 1) * l)
    report["generalized_singleton"] = all(
        weights.at(i) <= cap_term + i for i in range(1, l + 1))
    # first-weight refinement with the m(n-k1)/(n-k2) term, compared exactly
    extra = Fraction(m * (n - c1.k), n - c2.k)
    report["first_weight_bound"] = Fraction(weights.at(1) - 1) <= min(
        Fraction(cap_term), extra)
    if c2.k == 0 and m >= 2:
        d = weights.at(1)
        k = c1.k
        if n <= m:
            ok = d <= n - k + 1
        elif k == 1:
            ok = d <= (m - 1) * k + 1
        else:
            ok = Fraction(d - 1) <= Fraction(m * (n - k), n)
        report["distance_case_split"] = ok
    report["all"] = all(report.values())
    return report
