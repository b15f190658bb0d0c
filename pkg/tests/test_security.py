import math
import random
from collections import Counter

import pytest

from rankguard import ctx_new
from rankguard.coset_scheme import build_proposed
from rankguard.linalg import Matrix, Subspace, embed_base_matrix, ext_vec_times_base_transpose
from rankguard.gf import PrimeField
from rankguard.network import enumerate_wiretap, sample_matrix
from rankguard.rank_metrics import intersection_dim
from rankguard.security import (
    JointDistribution,
    LogQuantity,
    entropy_tools,
    leakage_report,
    omega_bounds,
    omega_exact,
    partial_leakage,
    predicted_leakage,
    universal_equivocation,
    verify_strength_empirically,
)

F16 = ctx_new(2, 4)
GF2 = PrimeField(2)


def flagship():
    return build_proposed(F16, l=1, n=3, k=2)


@pytest.fixture(scope="module")
def scheme():
    return flagship()


@pytest.fixture(scope="module")
def uniform(scheme):
    return JointDistribution.uniform(scheme)


def test_logquantity_arithmetic():
    a = LogQuantity.from_integer(2, 5, 16)
    b = LogQuantity.from_integer(1, 5, 16)
    assert (a - b).as_integer() == 1
    assert (a + b).as_integer() == 3
    assert b < a and b <= a and a == a


def test_uniform_entropy_is_l(scheme, uniform):
    assert uniform.message_entropy().as_integer() == scheme.l
    assert uniform.divergence_message_from_uniform().as_integer() == 0
    assert uniform.divergence_packets_from_coset_uniform().as_integer() == 0


def test_point_mass_entropies(scheme):
    S = (5,)
    X = next(iter(scheme.coset_elements(S)))
    pm = JointDistribution.point_mass(scheme, S, X)
    tools = entropy_tools(pm)
    assert tools["H_S"].as_integer() == 0
    assert tools["D_S_uniform"].as_integer() == scheme.l


def test_mi_zero_for_zero_wiretap(scheme, uniform):
    B0 = Matrix(GF2, [], 3)
    assert uniform.mutual_information(B0).as_integer() == 0


def test_mi_full_observation_reveals_message(scheme, uniform):
    B = Matrix.identity(GF2, 3)
    assert uniform.mutual_information(B).as_integer() == scheme.l


def test_uniform_mi_equals_dual_dimension_gap(scheme, uniform):
    d2 = scheme.c2.dual()
    d1 = scheme.c1.dual()
    for B in enumerate_wiretap(2, 3, 3):
        measured = uniform.mutual_information(B).as_integer()
        rowspace = Subspace(F16, 3, embed_base_matrix(F16, B).row_basis())
        expected = intersection_dim(d2, rowspace) - intersection_dim(d1, rowspace)
        assert measured == expected


def test_mi_invariant_under_row_operations(scheme, uniform):
    rng = random.Random(71)
    for _ in range(10):
        B = sample_matrix(rng, 2, 2, 3)
        canonical = B.row_basis()
        assert (uniform.mutual_information(B)
                == uniform.mutual_information(canonical))


def test_leakage_report_uniform_flagship(scheme, uniform):
    expected_leak = {0: 0, 1: 0, 2: 1, 3: 1}
    expected_theta = {0: 1, 1: 1, 2: 0, 3: 0}
    for mu in range(4):
        report = universal_equivocation(scheme, mu, uniform)
        assert report.max_leakage.as_integer() == expected_leak[mu]
        assert report.predicted == expected_leak[mu]
        assert report.equivocation.as_integer() == expected_theta[mu]
        assert report.sandwich_holds()


def test_nonuniform_sandwich_exact(scheme):
    rng = random.Random(72)
    dist = JointDistribution.seeded(scheme, rng)
    for mu in range(4):
        report = leakage_report(scheme, mu, dist)
        assert report.sandwich_holds()


def test_skewed_packets_have_positive_divergence(scheme):
    rng = random.Random(73)
    dist = JointDistribution.seeded(scheme, rng)
    assert not (dist.divergence_packets_from_coset_uniform()
                <= dist.integer(0))


def test_partial_leakage_full_index_set_matches_universal(scheme, uniform):
    for mu in range(4):
        full = universal_equivocation(scheme, mu, uniform)
        part = partial_leakage(scheme, [0], mu, uniform)
        assert part.max_leakage == full.max_leakage
        assert part.predicted == full.predicted


def test_predicted_leakage_empty_set(scheme):
    assert predicted_leakage(scheme, 2, []) == 0


def test_omega_flagship(scheme):
    omega = omega_exact(scheme)
    assert omega == scheme.c1.k - 1 == 1
    low, high = omega_bounds(scheme)
    assert low == high == omega


def test_strength_empirical(scheme):
    witness = verify_strength_empirically(scheme, omega_exact(scheme))
    assert witness.witness_mu == 2
    assert witness.witness_leakage > 0.5


def test_two_symbol_scheme_strength():
    f64 = ctx_new(2, 6)
    scheme = build_proposed(f64, l=2, n=4, k=3)
    assert omega_exact(scheme) == scheme.c1.k - 1 == 2
    low, high = omega_bounds(scheme)
    assert low == high == 2


def test_strength_depends_on_coset_map():
    # same (C1, C2), arbitrary coset-representative matrices: the strength
    # can drop below k-1, and the bounds always sandwich it
    from rankguard.coset_scheme import NestedScheme

    f64 = ctx_new(2, 6)
    s = build_proposed(f64, l=2, n=4, k=3)
    rng = random.Random(99)
    seen = Counter()
    trials = 0
    while trials < 8:
        coeffs = [[rng.randrange(64) for _ in range(s.c1.k)] for _ in range(s.l)]
        rows = [s.c1.encode(tuple(c)) for c in coeffs]
        try:
            alt = NestedScheme(s.c1, s.c2, Matrix(s.ctx, rows, 4))
        except Exception:
            continue
        trials += 1
        om = omega_exact(alt)
        low, high = omega_bounds(alt)
        assert low <= om <= high
        seen[om] += 1
    assert seen == Counter({1: 6, 2: 2})


def test_entropy_divergence_identity(scheme):
    # H(S) = log|space| - D(S || uniform), exact and after float conversion
    rng = random.Random(75)
    for dist in [JointDistribution.uniform(scheme),
                 JointDistribution.seeded(scheme, rng)]:
        h = dist.message_entropy()
        d = dist.divergence_message_from_uniform()
        assert (h + d).as_integer() == scheme.l
        assert abs(h.value + d.value - scheme.l) < 1e-12


def test_thread_count_does_not_change_results(scheme, uniform, monkeypatch):
    baseline = [universal_equivocation(scheme, mu, uniform).to_json() for mu in range(4)]
    monkeypatch.setenv("RANKGUARD_THREADS", "3")
    threaded = [universal_equivocation(scheme, mu, uniform).to_json() for mu in range(4)]
    assert baseline == threaded


def _cond_entropy(cells: Counter, order: int) -> float:
    total = sum(cells.values())
    w_marg = Counter()
    for (s, w), c in cells.items():
        w_marg[w] += c
    h = 0.0
    for (s, w), c in cells.items():
        h -= (c / total) * math.log(c / w_marg[w], order)
    return h


def test_data_processing_with_errors(scheme, uniform):
    # a noisy observation W' = X B^T + E can only raise the conditional entropy
    rng = random.Random(74)
    for _ in range(5):
        B = sample_matrix(rng, 2, 2, 3)
        errors = [tuple(rng.randrange(16) for _ in range(2)) for _ in range(2)]
        clean, noisy = Counter(), Counter()
        for S, X, w in uniform.entries:
            W = ext_vec_times_base_transpose(F16, X, B)
            for E in errors:
                Wn = tuple(F16.add(a, b) for a, b in zip(W, E))
                clean[(S, W)] += w
                noisy[(S, Wn)] += w
        assert _cond_entropy(noisy, 16) >= _cond_entropy(clean, 16) - 1e-12
