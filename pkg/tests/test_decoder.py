import random

import pytest

from rankguard import BudgetExceeded, PreconditionError, ctx_new
from rankguard.coset_scheme import build_proposed, lift
from rankguard.decoder import (
    capability_report,
    construct_failure_witness,
    decode_coherent,
    decode_noncoherent,
    delta_distance,
    delta_min_noncoherent,
    delta_min_over_A,
    discrepancy_coherent,
    discrepancy_noncoherent,
    split_error_by_rank,
)
from rankguard.gf import PrimeField
from rankguard.linalg import (
    Matrix,
    ext_vec_times_base_transpose,
    expand_to_base,
    vec_add,
    vec_sub,
)
from rankguard.network import sample_invertible, sample_matrix, sample_transfer
from rankguard.rank_metrics import first_rgrw, rank_weight

F16 = ctx_new(2, 4)
GF2 = PrimeField(2)


def flagship():
    return build_proposed(F16, l=1, n=3, k=2)


def test_discrepancy_zero_for_clean_reception():
    s = flagship()
    rng = random.Random(81)
    A = sample_transfer(rng, 2, 3, 3, 0)
    for _ in range(10):
        S = (rng.randrange(16),)
        X = s.encode(S, rng)
        Y = ext_vec_times_base_transpose(F16, X, A)
        assert discrepancy_coherent(s, A, Y, S) == 0


def test_discrepancy_bounded_by_injected_rank():
    s = flagship()
    rng = random.Random(82)
    for _ in range(20):
        A = sample_transfer(rng, 2, 3, 3, 1)
        S = (rng.randrange(16),)
        X = s.encode(S, rng)
        E = tuple(rng.randrange(16) for _ in range(3))
        Y = vec_add(F16, ext_vec_times_base_transpose(F16, X, A), E)
        assert discrepancy_coherent(s, A, Y, S) <= rank_weight(F16, E)


def _factorization_oracle(scheme, A, Y, S, r_max=3):
    """Least r admitting Y = X A^T + Z D^T with X in the coset: brute force
    over every base routing matrix D and injected packets Z."""
    ctx = scheme.ctx
    N = A.nrows
    members = [ext_vec_times_base_transpose(ctx, X, A)
               for X in scheme.coset_elements(S)]
    for r in range(r_max + 1):
        for d_stamp in range(2 ** (N * r)):
            rows, x = [], d_stamp
            for _ in range(N):
                row = []
                for _ in range(r):
                    row.append(x % 2)
                    x //= 2
                rows.append(row)
            D = Matrix(GF2, rows, r)
            for z_stamp in range(ctx.order**r):
                Z, x = [], z_stamp
                for _ in range(r):
                    Z.append(x % ctx.order)
                    x //= ctx.order
                e = ext_vec_times_base_transpose(ctx, tuple(Z), D) if r else (0,) * N
                for xa in members:
                    if vec_add(ctx, xa, e) == Y:
                        return r
    return None


def test_discrepancy_matches_factorization_oracle():
    f8 = ctx_new(2, 3)
    s = build_proposed(f8, l=1, n=2, k=1)
    rng = random.Random(83)
    for _ in range(6):
        A = sample_transfer(rng, 2, 2, 2, 1)
        S = (rng.randrange(8),)
        Y = tuple(rng.randrange(8) for _ in range(2))
        delta = discrepancy_coherent(s, A, Y, S)
        assert delta == _factorization_oracle(s, A, Y, S)


def test_decode_identity_channel():
    s = flagship()
    rng = random.Random(84)
    A = Matrix.identity(GF2, 3)
    for _ in range(10):
        S = (rng.randrange(16),)
        X = s.encode(S, rng)
        res = decode_coherent(s, A, X)
        assert res.ok and res.message == S and res.discrepancy == 0
        assert res.runner_up is not None and res.runner_up > 0


def test_decode_invariant_under_row_space_change():
    # the exhaustive engine's first reduction: A -> R A with invertible R,
    # errors conjugated by R^T, leaves every decode outcome unchanged
    s = flagship()
    rng = random.Random(85)
    for _ in range(15):
        A = sample_transfer(rng, 2, 3, 3, 1)
        R = sample_invertible(rng, 2, 3)
        S = (rng.randrange(16),)
        X = s.encode(S, rng)
        E = tuple(rng.randrange(16) for _ in range(3))
        Y1 = vec_add(F16, ext_vec_times_base_transpose(F16, X, A), E)
        RA = R.matmul(A)
        E2 = ext_vec_times_base_transpose(F16, E, R)
        Y2 = vec_add(F16, ext_vec_times_base_transpose(F16, X, RA), E2)
        r1 = decode_coherent(s, A, Y1)
        r2 = decode_coherent(s, RA, Y2)
        assert (r1.status, r1.message, r1.discrepancy) == (r2.status, r2.message, r2.discrepancy)


def test_decode_translation_reduction():
    # the engine's second reduction: per-(A, E) success for every sender is
    # the per-difference-coset strict-inequality condition
    s = flagship()
    rng = random.Random(86)
    for _ in range(10):
        A = sample_transfer(rng, 2, 3, 3, 1)
        E = tuple(rng.randrange(16) for _ in range(3))
        # direct: try every sender and coset member
        direct_ok = True
        for S in s.messages():
            for X in s.coset_elements(S):
                Y = vec_add(F16, ext_vec_times_base_transpose(F16, X, A), E)
                res = decode_coherent(s, A, Y)
                if not (res.ok and res.message == S):
                    direct_ok = False
                    break
            if not direct_ok:
                break
        # reduced: difference cosets against the true coset value
        true_val = min(rank_weight(F16, vec_sub(F16, E, ext_vec_times_base_transpose(F16, c, A)))
                       for c in s.c2.codewords())
        reduced_ok = True
        for S in s.messages():
            if not any(S):
                continue
            other = min(rank_weight(F16, vec_sub(
                F16, vec_sub(F16, E, ext_vec_times_base_transpose(F16, s.representative(S), A)),
                ext_vec_times_base_transpose(F16, c, A)))
                for c in s.c2.codewords())
            if other <= true_val:
                reduced_ok = False
                break
        assert direct_ok == reduced_ok


def test_delta_distance_identity_is_first_weight():
    s = flagship()
    assert delta_distance(s, Matrix.identity(GF2, 3)) == first_rgrw(s.c1, s.c2) == 2


def test_delta_min_over_A():
    ctx = F16
    from rankguard.codes import LinearCode, gabidulin
    from rankguard.coset_scheme import NestedScheme
    c1 = gabidulin(ctx, 4, 2)
    scheme = NestedScheme(c1, LinearCode.zero(ctx, 4), c1.gen)
    assert delta_min_over_A(scheme, 0) == 3
    assert delta_min_over_A(scheme, 1) == 2
    assert delta_min_over_A(scheme, 4) == 0
    s = flagship()
    for rho in range(4):
        assert delta_min_over_A(s, rho) == max(0, 2 - rho)


def test_split_error_by_rank():
    rng = random.Random(87)
    for _ in range(20):
        rows = [[rng.randrange(2) for _ in range(4)] for _ in range(5)]
        M = Matrix(GF2, rows, 4)
        r = M.rank()
        for part in range(r + 1):
            first, second = split_error_by_rank(GF2, rows, 4, part)
            assert first.rank() == part
            assert second.rank() == r - part
            assert first.add(second) == M


def test_normality_every_intermediate_discrepancy():
    # between any two cosets at delta distance d, every split (i, d-i) is
    # realizable by some received word
    s = flagship()
    A = Matrix.identity(GF2, 3)
    rng = random.Random(88)
    S1, S2 = (3,), (9,)
    best = None
    for X1 in s.coset_elements(S1):
        for X2 in s.coset_elements(S2):
            d = rank_weight(F16, vec_sub(
                F16, ext_vec_times_base_transpose(F16, X2, A),
                ext_vec_times_base_transpose(F16, X1, A)))
            if best is None or d < best[0]:
                best = (d, X1, X2)
    d, X1, X2 = best
    u = vec_sub(F16, ext_vec_times_base_transpose(F16, X2, A),
                ext_vec_times_base_transpose(F16, X1, A))
    for i in range(d + 1):
        w_mat, _ = split_error_by_rank(GF2, list(expand_to_base(F16, u).rows), 3, i)
        W = tuple(F16.from_coeffs([w_mat.rows[r][j] for r in range(4)]) for j in range(3))
        Y = vec_add(F16, ext_vec_times_base_transpose(F16, X1, A), W)
        assert discrepancy_coherent(s, A, Y, S1) == i
        assert discrepancy_coherent(s, A, Y, S2) == d - i


def test_capability_exhaustive_flagship_boundary():
    s = flagship()  # first weight 2: capability iff 2t + rho < 2
    ok = capability_report(s, t=0, rho=0)
    assert ok.verified and ok.covered_tuples > 0
    ok = capability_report(s, t=0, rho=1)
    assert ok.verified
    bad = capability_report(s, t=1, rho=0)
    assert not bad.verified and bad.counterexample is not None
    bad = capability_report(s, t=0, rho=2)
    assert not bad.verified


def test_capability_sampled_matches():
    s = flagship()
    rep = capability_report(s, t=0, rho=1, mode="sampled", trials=200, seed=5)
    assert rep.verified and rep.trials == 200
    with pytest.raises(BudgetExceeded) as exc:
        capability_report(s, t=0, rho=0, mode="sampled", trials=50, budget=10, seed=5)
    assert exc.value.report.trials == 10


def test_failure_witness_flagship():
    s = flagship()
    with pytest.raises(PreconditionError):
        construct_failure_witness(s, t=0, rho=1)
    wit = construct_failure_witness(s, t=1, rho=0)
    assert wit["demonstrates_failure"]
    assert rank_weight(F16, wit["injected"]) <= 1


def _lifted_instance():
    inner = build_proposed(F16, l=1, n=3, k=2)
    return lift(inner, ctx_new(2, 7))


def test_noncoherent_clean_decode():
    lifted = _lifted_instance()
    rng = random.Random(89)
    A = Matrix.identity(GF2, 3)
    for _ in range(5):
        S = (rng.randrange(16),)
        X = lifted.lift_encode(S, rng)
        Y = ext_vec_times_base_transpose(lifted.ctx, X, A)
        res = decode_noncoherent(lifted, Y, rho=0)
        assert res.ok and res.message == S


def test_noncoherent_fast_equals_oracle():
    lifted = _lifted_instance()
    rng = random.Random(90)
    for rho in (0, 1):
        for _ in range(4):
            S = (rng.randrange(16),)
            X = lifted.lift_encode(S, rng)
            A = sample_transfer(rng, 2, 3, 3, rho)
            E = tuple(rng.randrange(128) for _ in range(3))
            Y = vec_add(lifted.ctx, ext_vec_times_base_transpose(lifted.ctx, X, A), E)
            for S2 in [(0,), S, (rng.randrange(16),)]:
                fast = discrepancy_noncoherent(lifted, Y, S2, rho, mode="fast")
                oracle = discrepancy_noncoherent(lifted, Y, S2, rho, mode="oracle")
                assert fast == oracle


def test_noncoherent_delta_identity():
    inner = build_proposed(ctx_new(2, 4), l=1, n=3, k=1)
    lifted = lift(inner, ctx_new(2, 7))
    m1 = first_rgrw(inner.c1, inner.c2)
    for rho in (0, 1):
        assert delta_min_noncoherent(lifted, rho, method="closed") == m1 - rho
        assert delta_min_noncoherent(lifted, rho, method="bruteforce") == m1 - rho


def test_noncoherent_capability_sampled():
    lifted = _lifted_instance()  # inner first weight 2: t=0, rho<=1 only
    rep = capability_report(lifted, t=0, rho=1, mode="sampled", trials=60, seed=7)
    assert rep.verified
