import random

import pytest

from rankguard import BadDimensions, DegreeMismatch, PacketTooShort, ctx_new
from rankguard.coset_scheme import LiftedScheme, NestedScheme, build_proposed, lift
from rankguard.codes import LinearCode
from rankguard.linalg import Matrix, expand_to_base, vec_sub
from rankguard.rank_metrics import rank_weight

F16 = ctx_new(2, 4)
F64 = ctx_new(2, 6)


def flagship():
    return build_proposed(F16, l=1, n=3, k=2)


def test_build_proposed_dimensions():
    s = flagship()
    assert (s.c1.k, s.c2.k, s.l) == (2, 1, 1)
    s2 = build_proposed(F64, l=2, n=4, k=3)
    assert (s2.c1.k, s2.c2.k) == (3, 1)


def test_build_proposed_rejects_short_packets_and_bad_dims():
    with pytest.raises(PacketTooShort):
        build_proposed(ctx_new(2, 3), l=1, n=3, k=2)
    with pytest.raises(BadDimensions):
        build_proposed(F16, l=2, n=3, k=1)
    with pytest.raises(BadDimensions):
        build_proposed(F16, l=1, n=2, k=3)


def test_component_codes_are_mrd():
    s = flagship()
    assert s.c1.min_rank_distance(method="scan") == 3 - 2 + 1
    assert s.c2.min_rank_distance(method="scan") == 3 - 1 + 1
    assert s.c1.contains(s.c2)


def test_encode_lands_in_the_right_coset():
    s = flagship()
    rng = random.Random(51)
    for _ in range(30):
        S = tuple(rng.randrange(16) for _ in range(s.l))
        X = s.encode(S, rng)
        assert s.c1.contains_word(X)
        diff = vec_sub(s.ctx, X, s.representative(S))
        assert s.c2.contains_word(diff)
        assert s.decode_message_of(X) == S


def test_zero_subcode_makes_encode_deterministic():
    s = build_proposed(ctx_new(2, 5), l=1, n=4, k=1)
    assert s.c2.k == 0
    rng = random.Random(52)
    S = (7,)
    assert s.encode(S, rng) == s.representative(S)
    assert s.encode((0,), rng) == (0, 0, 0, 0)


def test_psi_is_bijective():
    s = flagship()
    labels = {s.coset_label(s.representative(S)) for S in s.messages()}
    assert len(labels) == s.message_count()


def test_coset_label_constant_on_cosets():
    s = flagship()
    rng = random.Random(53)
    for _ in range(10):
        S = tuple(rng.randrange(16) for _ in range(1))
        labels = {s.coset_label(x) for x in s.coset_elements(S)}
        assert len(labels) == 1


def test_partial_subcode():
    s = flagship()
    assert s.partial_subcode([]) == s.c1
    c3 = s.partial_subcode([0])
    assert c3 == s.c2
    s2 = build_proposed(F64, l=2, n=4, k=3)
    c3 = s2.partial_subcode([1])
    assert s2.c1.contains(c3) and c3.contains(s2.c2)
    assert c3.k == s2.c1.k - 1
    # the explicit construction keeps every partial subcode MRD
    assert c3.min_rank_distance(method="scan") == 4 - 3 + 1 + 1


def test_partial_subcode_is_union_of_cosets():
    s2 = build_proposed(F64, l=2, n=4, k=3)
    c3 = s2.partial_subcode([0])
    rng = random.Random(54)
    for _ in range(20):
        S = (0, rng.randrange(64))
        X = s2.encode(S, rng)
        assert c3.contains_word(X)


def test_bound_codes():
    s = flagship()
    d1, d2 = s.bound_codes(0)
    assert d1.n == s.l + s.n - 1 == d2.n
    assert d1.k == s.c1.k
    assert d2.k == s.c1.k - 1
    assert d1.contains(d2)


def test_lengthened_code_matches_encoder():
    s = flagship()
    rng = random.Random(55)
    lengthened = s.lengthened_code()
    for _ in range(20):
        S = tuple(rng.randrange(16) for _ in range(1))
        X = s.encode(S, rng)
        assert lengthened.contains_word(S + X)


def test_explicit_coset_distribution():
    s = flagship()
    point_mass = [0] * s.c2.codeword_count()
    point_mass[3] = 1
    skew = NestedScheme(s.c1, s.c2, s.delta_g, point_mass)
    rng = random.Random(56)
    xs = {skew.encode((5,), rng) for _ in range(20)}
    assert len(xs) == 1  # always the same coset element


def test_scheme_json_roundtrip():
    s = flagship()
    again = NestedScheme.from_json(s.to_json())
    assert again.c1 == s.c1 and again.c2 == s.c2
    assert again.delta_g == s.delta_g


def test_lift_header_and_rank():
    inner = flagship()
    outer = ctx_new(2, 4 + 3)
    lifted = lift(inner, outer)
    rng = random.Random(57)
    zero_packet = lifted.lift_vector((0, 0, 0))
    assert expand_to_base(outer, zero_packet).rank() == 3
    for _ in range(10):
        S = tuple(rng.randrange(16) for _ in range(1))
        X = lifted.lift_encode(S, rng)
        M = expand_to_base(outer, X)
        assert M.rank() == 3
        for i in range(3):
            assert tuple(M.rows[i]) == tuple(1 if j == i else 0 for j in range(3))
        assert lifted.inner_of(X) in set(inner.coset_elements(S))


def test_lift_rejects_degree_mismatch():
    with pytest.raises(DegreeMismatch):
        lift(flagship(), ctx_new(2, 6))
