"""Exact leakage measurement and the profile-table predictions it must match.

Probabilities are integer counts over one common denominator T, and every
information quantity is carried as a LogQuantity: alongside a float for
reporting it stores the exact rational (q^m)^(T * value), so comparisons,
the uniform-case integer identities, and the non-uniform sandwich bounds
are all decided in exact arithmetic.  Entropies use log base q^m, which
makes the dimensional identities integers.

Leakage maximization ranges over canonical wiretap row spaces rather than
raw matrices: the observation through B is a deterministic function of the
observation through any matrix with the same row space (and vice versa),
so mutual information only depends on row(B).
"""

from __future__ import annotations

import math
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .codes import LinearCode
from .coset_scheme import NestedScheme
from .errors import EnumerationTooLarge, PreconditionError
from .linalg import Matrix, ext_vec_times_base_transpose
from .network import enumerate_wiretap
from .parallel import ordered_map
from .rank_metrics import first_rgrw, rdip

DEFAULT_SUPPORT_CAP = 2**20
MAX_STRENGTH_SUBSET_BITS = 12


def _check_support_cap(scheme: NestedScheme, cap: int) -> None:
    support_size = scheme.message_count() * scheme.c2.codeword_count()
    if support_size > cap:
        raise EnumerationTooLarge(f"support of {support_size} pairs exceeds cap {cap}")


def _log_big(x: int) -> float:
    if x <= 0:
        raise ValueError("log of nonpositive")
    bits = x.bit_length()
    if bits <= 900:
        return math.log(x)
    shift = bits - 900
    return math.log(x >> shift) + shift * math.log(2)


def _log_fraction(f: Fraction) -> float:
    return _log_big(f.numerator) - _log_big(f.denominator)


@dataclass(frozen=True)
class LogQuantity:
    """(1/T) * log_order(power), kept exact through `power`."""

    power: Fraction
    denom: int
    order: int

    @staticmethod
    def from_integer(k: int, denom: int, order: int) -> "LogQuantity":
        return LogQuantity(Fraction(order) ** (denom * k), denom, order)

    @property
    def value(self) -> float:
        return _log_fraction(self.power) / (self.denom * math.log(self.order))

    def as_integer(self) -> int | None:
        """The exact integer this equals, or None."""
        k = round(self.value)
        if self.power == Fraction(self.order) ** (self.denom * k):
            return k
        return None

    def _check(self, other: "LogQuantity") -> None:
        if (self.denom, self.order) != (other.denom, other.order):
            raise PreconditionError("quantities live on different denominators")

    def __add__(self, other: "LogQuantity") -> "LogQuantity":
        self._check(other)
        return LogQuantity(self.power * other.power, self.denom, self.order)

    def __sub__(self, other: "LogQuantity") -> "LogQuantity":
        self._check(other)
        return LogQuantity(self.power / other.power, self.denom, self.order)

    def __le__(self, other: "LogQuantity") -> bool:
        self._check(other)
        return self.power <= other.power

    def __lt__(self, other: "LogQuantity") -> bool:
        self._check(other)
        return self.power < other.power

    def __eq__(self, other) -> bool:
        return (isinstance(other, LogQuantity)
                and (self.denom, self.order) == (other.denom, other.order)
                and self.power == other.power)

    def __repr__(self) -> str:
        return f"LogQuantity({self.value:.6f})"


class JointDistribution:
    """Exact joint distribution of (message, transmitted packets).

    Entries carry integer weights over the common denominator T; the
    support is every coset member of every message, so uniform weights give
    the canonical 'S uniform, X conditionally uniform' case.
    """

    def __init__(self, scheme: NestedScheme, weights: dict, cap: int = DEFAULT_SUPPORT_CAP):
        self.scheme = scheme
        self.ctx = scheme.ctx
        _check_support_cap(scheme, cap)
        self.entries: list[tuple[tuple[int, ...], tuple[int, ...], int]] = [
            (S, X, w) for (S, X), w in weights.items() if w]
        self.total = sum(w for _, _, w in self.entries)
        if self.total <= 0:
            raise PreconditionError("distribution must have positive mass")

    # -- constructors ---------------------------------------------------------

    @staticmethod
    def uniform(scheme: NestedScheme, cap: int = DEFAULT_SUPPORT_CAP) -> "JointDistribution":
        _check_support_cap(scheme, cap)
        weights = {}
        for S in scheme.messages():
            for X in scheme.coset_elements(S):
                weights[(S, X)] = 1
        return JointDistribution(scheme, weights, cap)

    @staticmethod
    def seeded(scheme: NestedScheme, rng: random.Random, max_weight: int = 4,
               uniform_messages: bool = False, cap: int = DEFAULT_SUPPORT_CAP) -> "JointDistribution":
        """Random integer weights: message weight times per-coset weight.

        Per-coset weight patterns share a common sum so that one global
        denominator exists; weights are >= 1, keeping full support.
        """
        _check_support_cap(scheme, cap)
        coset_size = scheme.c2.codeword_count()
        pattern_sum = None
        weights = {}
        for S in scheme.messages():
            sw = 1 if uniform_messages else rng.randrange(1, max_weight + 1)
            while True:
                pattern = [rng.randrange(1, max_weight + 1) for _ in range(coset_size)]
                if pattern_sum is None:
                    pattern_sum = sum(pattern)
                    break
                if sum(pattern) == pattern_sum:
                    break
            for X, w in zip(scheme.coset_elements(S), pattern):
                weights[(S, X)] = sw * w
        return JointDistribution(scheme, weights, cap)

    @staticmethod
    def point_mass(scheme: NestedScheme, S: tuple[int, ...], X: tuple[int, ...]) -> "JointDistribution":
        return JointDistribution(scheme, {(S, X): 1})

    # -- exact quantities --------------------------------------------------------

    def _quantity(self, terms: Iterable[tuple[Fraction, int]]) -> LogQuantity:
        power = Fraction(1)
        for ratio, count in terms:
            power *= ratio**count
        return LogQuantity(power, self.total, self.ctx.order)

    def integer(self, k: int) -> LogQuantity:
        return LogQuantity.from_integer(k, self.total, self.ctx.order)

    def message_entropy(self) -> LogQuantity:
        counts = Counter()
        for S, _, w in self.entries:
            counts[S] += w
        return self._quantity((Fraction(self.total, c), c) for c in counts.values())

    def divergence_message_from_uniform(self) -> LogQuantity:
        """D(S || uniform on the full message space)."""
        counts = Counter()
        for S, _, w in self.entries:
            counts[S] += w
        space = self.ctx.order**self.scheme.l
        return self._quantity((Fraction(c * space, self.total), c) for c in counts.values())

    def divergence_packets_from_coset_uniform(self) -> LogQuantity:
        """D(X || uniform on the coset of S | S)."""
        s_counts = Counter()
        for S, _, w in self.entries:
            s_counts[S] += w
        coset_size = self.scheme.c2.codeword_count()
        return self._quantity(
            (Fraction(w * coset_size, s_counts[S]), w) for S, _, w in self.entries)

    def observe(self, B: Matrix, z_indices: Sequence[int] | None = None):
        """Joint counts of (selected message symbols, X B^T)."""
        cells = Counter()
        for S, X, w in self.entries:
            s_key = S if z_indices is None else tuple(S[i] for i in z_indices)
            w_key = ext_vec_times_base_transpose(self.ctx, X, B)
            cells[(s_key, w_key)] += w
        return cells

    def mutual_information(self, B: Matrix, z_indices: Sequence[int] | None = None) -> LogQuantity:
        """I(S_Z ; X B^T), exact."""
        cells = self.observe(B, z_indices)
        s_marg, w_marg = Counter(), Counter()
        for (s_key, w_key), c in cells.items():
            s_marg[s_key] += c
            w_marg[w_key] += c
        return self._quantity(
            (Fraction(c * self.total, s_marg[s] * w_marg[w]), c)
            for (s, w), c in cells.items())

    def conditional_message_entropy(self, B: Matrix) -> LogQuantity:
        return self.message_entropy() - self.mutual_information(B)


def entropy_tools(dist: JointDistribution, B: Matrix | None = None) -> dict[str, LogQuantity]:
    out = {
        "H_S": dist.message_entropy(),
        "D_S_uniform": dist.divergence_message_from_uniform(),
        "D_X_coset_uniform_given_S": dist.divergence_packets_from_coset_uniform(),
    }
    if B is not None:
        out["I_S_W"] = dist.mutual_information(B)
        out["H_S_given_W"] = dist.conditional_message_entropy(B)
    return out


# -- leakage over all wiretap matrices ----------------------------------------


@dataclass
class LeakageReport:
    """Worst-case leakage at mu tapped links, with its exact prediction."""

    mu: int
    z_indices: tuple[int, ...] | None
    max_leakage: LogQuantity
    argmax_b: Matrix
    predicted: int
    slack_s: LogQuantity
    slack_x: LogQuantity
    equivocation: LogQuantity

    def sandwich_holds(self) -> bool:
        lo = self.predicted_quantity() - self.slack_s
        hi = self.predicted_quantity() + self.slack_x
        return lo <= self.max_leakage <= hi

    def predicted_quantity(self) -> LogQuantity:
        return LogQuantity.from_integer(self.predicted, self.max_leakage.denom,
                                        self.max_leakage.order)

    def to_json(self) -> dict:
        return {
            "mu": self.mu,
            "z_indices": list(self.z_indices) if self.z_indices is not None else None,
            "max_leakage": self.max_leakage.value,
            "max_leakage_exact_integer": self.max_leakage.as_integer(),
            "argmax_b": self.argmax_b.to_json(),
            "predicted": self.predicted,
            "slack_s": self.slack_s.value,
            "slack_x": self.slack_x.value,
            "equivocation": self.equivocation.value,
            "sandwich_holds": self.sandwich_holds(),
        }


def dual_pair(c1: LinearCode, c2: LinearCode) -> tuple[LinearCode, LinearCode]:
    """(C2^dual, C1^dual): the nested pair governing leakage."""
    return c2.dual(), c1.dual()


def predicted_leakage(scheme: NestedScheme, mu: int,
                      z_indices: Sequence[int] | None = None) -> int:
    """Profile value K_mu of the relevant dual pair; 0 for an empty index set."""
    if z_indices is None:
        z_indices = tuple(range(scheme.l))
    z = tuple(sorted(set(z_indices)))
    if not z:
        return 0
    big = scheme.partial_subcode(z)
    outer, inner = big.dual(), scheme.c1.dual()
    if outer.k == inner.k:
        return 0
    return rdip(outer, inner).at(mu)


def leakage_report(scheme: NestedScheme, mu: int, dist: JointDistribution,
                   z_indices: Sequence[int] | None = None,
                   mode: str = "rowspace") -> LeakageReport:
    """Maximize I(S_Z ; X B^T) over wiretap matrices with <= mu rows."""
    if dist.scheme is not scheme and dist.scheme.to_json() != scheme.to_json():
        raise PreconditionError("distribution was built for a different scheme")
    z = tuple(sorted(set(z_indices))) if z_indices is not None else None
    candidates = list(enumerate_wiretap(scheme.ctx.q, scheme.n, mu, mode=mode))
    values = list(ordered_map(lambda B: dist.mutual_information(B, z), candidates))
    best_idx = 0
    for i in range(1, len(values)):
        if values[best_idx] < values[i]:
            best_idx = i
    if z is None:
        entropy = dist.message_entropy()
        slack_s = dist.divergence_message_from_uniform()
        slack_x = dist.divergence_packets_from_coset_uniform()
    else:
        # slack terms for the reduced scheme (messages restricted to S_Z)
        entropy, slack_s, slack_x = _partial_slacks(dist, z)
    report = LeakageReport(
        mu=mu,
        z_indices=z,
        max_leakage=values[best_idx],
        argmax_b=candidates[best_idx],
        predicted=predicted_leakage(scheme, mu, z),
        slack_s=slack_s,
        slack_x=slack_x,
        equivocation=entropy - values[best_idx],
    )
    return report


def _partial_slacks(dist: JointDistribution, z: tuple[int, ...]):
    ctx = dist.ctx
    sz_counts = Counter()
    for S, _, w in dist.entries:
        sz_counts[tuple(S[i] for i in z)] += w
    entropy = dist._quantity((Fraction(dist.total, c), c) for c in sz_counts.values())
    space = ctx.order ** len(z)
    slack_s = dist._quantity(
        (Fraction(c * space, dist.total), c) for c in sz_counts.values())
    # X given S_Z is uniform on the partial subcode's coset of size |C2|*order^(l-|z|)
    coset_size = dist.scheme.c2.codeword_count() * ctx.order ** (dist.scheme.l - len(z))
    x_counts = Counter()
    for S, X, w in dist.entries:
        x_counts[(tuple(S[i] for i in z), X)] += w
    slack_x = dist._quantity(
        (Fraction(c * coset_size, sz_counts[s]), c) for (s, _), c in x_counts.items())
    return entropy, slack_s, slack_x


def universal_equivocation(scheme: NestedScheme, mu: int, dist: JointDistribution,
                           mode: str = "rowspace") -> LeakageReport:
    return leakage_report(scheme, mu, dist, None, mode)


def partial_leakage(scheme: NestedScheme, z_indices: Sequence[int], mu: int,
                    dist: JointDistribution, mode: str = "rowspace") -> LeakageReport:
    return leakage_report(scheme, mu, dist, z_indices, mode)


# -- universal maximum strength -------------------------------------------------


def omega_exact(scheme: NestedScheme) -> int:
    """Smallest over message-index subsets of (first weight of the dual
    partial pair plus the subset size), minus two.  The empty subset never
    leaks and so never constrains the minimum."""
    if scheme.l > MAX_STRENGTH_SUBSET_BITS:
        raise EnumerationTooLarge(f"2^l subsets with l={scheme.l} exceeds the cap")
    best = None
    for mask in range(1, 2**scheme.l):
        z = tuple(i for i in range(scheme.l) if mask >> i & 1)
        big = scheme.partial_subcode(z)
        value = first_rgrw(big.dual(), scheme.c1.dual()) + len(z)
        if best is None or value < best:
            best = value
    return best - 2


def omega_bounds(scheme: NestedScheme) -> tuple[int, int]:
    """(lower, upper) from l single-index computations each."""
    uppers = []
    lowers = []
    for i in range(scheme.l):
        c3 = scheme.partial_subcode([i])
        uppers.append(first_rgrw(c3.dual(), scheme.c1.dual()))
        d1, d2 = scheme.bound_codes(i)
        lowers.append(first_rgrw(d2.dual(), d1.dual()))
    return min(lowers) - 1, min(uppers) - 1


@dataclass
class StrengthWitness:
    omega: int
    zero_at: list[tuple[tuple[int, ...], int]]
    witness_z: tuple[int, ...]
    witness_mu: int
    witness_leakage: float


def verify_strength_empirically(scheme: NestedScheme, omega: int,
                                dist: JointDistribution | None = None) -> StrengthWitness:
    """Check the defining property of the strength at its boundary.

    For every nonempty index set Z, leakage of S_Z must be exactly zero at
    mu = omega - |Z| + 1; and some (Z, B) must leak at mu one larger.
    """
    if dist is None:
        dist = JointDistribution.uniform(scheme)
    zero_at = []
    witness = None
    for mask in range(1, 2**scheme.l):
        z = tuple(i for i in range(scheme.l) if mask >> i & 1)
        mu_safe = omega - len(z) + 1
        if mu_safe >= 0:
            report = partial_leakage(scheme, z, mu_safe, dist)
            if report.max_leakage.as_integer() != 0:
                raise AssertionError(f"leakage at the safe boundary for Z={z}")
            zero_at.append((z, mu_safe))
        if witness is None and mu_safe + 1 <= scheme.n:
            report = partial_leakage(scheme, z, mu_safe + 1, dist)
            leak = report.max_leakage
            if not (leak <= dist.integer(0)):
                witness = (z, mu_safe + 1, leak.value)
    if witness is None:
        raise AssertionError("no leakage witness just beyond the strength")
    return StrengthWitness(omega, zero_at, witness[0], witness[1], witness[2])
