import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from srcover.construct import SumRankCode, pad, sr_covering_lift, whole_space_code, zero_space_code
from srcover.galois import field_make
from srcover.hamming import covering_radius_exact, hamming_binary, repetition_code, scalar_extend
from srcover.linalg import GuardError
from srcover.radius import (
    distance_to_code,
    list_census,
    sr_radius_exact,
    sr_radius_probe,
    verify_construction,
)
from srcover.space import BlockVector, ball_offsets, space_make, sr_distance


def _random_linear(space, k, rng):
    gens = rng.integers(0, space.p, size=(k, space.ndigits))
    packed = gens @ (space.p ** np.arange(space.ndigits))
    return SumRankCode(space, generators=packed)


def _random_explicit(space, size, rng):
    pts = rng.choice(space.size, size=size, replace=False)
    return SumRankCode(space, points=pts)


def _brute_radius(C):
    """Max over ambient points of the min distance to a codeword, via BlockVector objects."""
    sp = C.space
    words = [BlockVector.from_int(sp, int(c)) for c in C.materialize()]
    return max(min(sr_distance(BlockVector.from_int(sp, x), w) for w in words) for x in range(sp.size))


def _brute_census(C, d):
    sp = C.space
    words = [BlockVector.from_int(sp, int(c)) for c in C.materialize()]
    return max(sum(sr_distance(BlockVector.from_int(sp, x), w) <= d for w in words) for x in range(sp.size))


def _lift_rep(n=2):
    F = field_make(2, 2)
    C = repetition_code(F, n)
    covering_radius_exact(C)
    return sr_covering_lift(C, C)


def test_whole_space_radius_zero():
    for method in ("exhaustive", "coset", "scan"):
        assert sr_radius_exact(whole_space_code(space_make(2, 2, 2)), method).exact == 0


def test_zero_code_radius_max_weight():
    sp = space_make(2, 2, 3)
    assert sr_radius_exact(zero_space_code(sp), "exhaustive").exact == 6
    assert sr_radius_exact(zero_space_code(sp), "coset").exact == 6


def test_lift_rep_radius():
    L = _lift_rep()
    rep = sr_radius_exact(L, "exhaustive")
    assert rep.exact == _brute_radius(L) == 2
    assert rep.exact <= L.claimed_radius


def test_witness_is_at_radius():
    L = _lift_rep(3)
    for method in ("exhaustive", "coset", "scan"):
        rep = sr_radius_exact(L, method)
        assert distance_to_code(L, [rep.witness])[0] == rep.exact


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2**31 - 1), st.integers(0, 4))
def test_paths_agree_on_random_linear_codes(seed, k):
    rng = np.random.default_rng(seed)
    C = _random_linear(space_make(2, 2, 2), k, rng)
    a = sr_radius_exact(C, "exhaustive").exact
    b = sr_radius_exact(C, "coset").exact
    assert a == b == sr_radius_exact(C, "scan").exact


@pytest.mark.parametrize("q", [3, 4])
def test_paths_agree_odd_and_extension_base(q):
    rng = np.random.default_rng(q)
    sp = space_make(q, 2, 1)
    for k in range(0, 3):
        C = _random_linear(sp, k, rng)
        assert sr_radius_exact(C, "exhaustive").exact == sr_radius_exact(C, "coset").exact == _brute_radius(C)


def test_coset_path_rejects_nonlinear():
    C = SumRankCode(space_make(2, 2, 1), points=np.array([0, 3, 5]))
    with pytest.raises(ValueError):
        sr_radius_exact(C, "coset")
    assert sr_radius_exact(C).method == "exhaustive"


def test_guards():
    Z = zero_space_code(space_make(2, 2, 7))
    with pytest.raises(GuardError):
        sr_radius_exact(Z, "exhaustive")
    with pytest.raises(GuardError):
        sr_radius_exact(Z, "coset")


def test_monotone_under_adding_codewords():
    rng = np.random.default_rng(11)
    sp = space_make(2, 2, 2)
    for _ in range(5):
        order = rng.permutation(sp.size)[:12]
        radii = [sr_radius_exact(SumRankCode(sp, points=order[:i])).exact for i in range(1, 13)]
        assert all(a >= b for a, b in zip(radii, radii[1:]))


def test_probe_whole_space():
    assert sr_radius_probe(whole_space_code(space_make(2, 2, 2)), 50, seed=1).lower_estimate == 0


def test_probe_zero_code_t1():
    rep = sr_radius_probe(zero_space_code(space_make(2, 2, 1)), 1000, seed=0)
    assert rep.lower_estimate == 2 and rep.probes == 1000 and rep.method == "monte-carlo"


def test_probe_is_reproducible_and_below_exact():
    L = _lift_rep(3)
    a = sr_radius_probe(L, 200, seed=5)
    b = sr_radius_probe(L, 200, seed=5)
    assert (a.lower_estimate, a.witness) == (b.lower_estimate, b.witness)
    assert a.lower_estimate <= sr_radius_exact(L).exact
    with pytest.raises(ValueError):
        sr_radius_probe(L, 0)


def test_probe_uses_syndromes_for_large_codes():
    E = scalar_extend(hamming_binary(3), 2)
    L = sr_covering_lift(E, E)
    rep = sr_radius_probe(L, 300, seed=2)
    assert rep.lower_estimate <= sr_radius_exact(L).exact


def test_census_whole_space_t1():
    W = whole_space_code(space_make(2, 2, 1))
    assert list_census(W, 1).L_max == 10 == _brute_census(W, 1)


def test_census_zero_code():
    for d in range(3):
        assert list_census(zero_space_code(space_make(2, 2, 2)), d).L_max == 1


def test_census_matches_brute_force():
    rng = np.random.default_rng(3)
    sp = space_make(2, 2, 2)
    for size in (3, 9, 20):
        C = _random_explicit(sp, size, rng)
        for d in (1, 2):
            rep = list_census(C, d)
            assert rep.L_max == _brute_census(C, d)
            assert (distance_to_code(SumRankCode(sp, points=C.materialize()), [rep.center]) <= d).all()


def test_census_at_covering_radius_is_positive_everywhere():
    L = _lift_rep()
    R = sr_radius_exact(L).exact
    sp = L.space
    offs_hit = np.zeros(sp.size, dtype=int)
    for c in L.materialize():
        offs_hit[sp.add(np.int64(c), ball_offsets(sp, R))] += 1
    assert offs_hit.min() >= 1
    assert list_census(L, R).L_max >= 1


def test_verify_pass_and_fail():
    W = whole_space_code(space_make(2, 2, 2))
    assert verify_construction(W).status == "PASS"
    rep = verify_construction(_lift_rep())
    assert rep.ok and rep.radius.exact <= 2
    bad = SumRankCode(space_make(2, 2, 1), points=np.zeros(1, dtype=np.int64), claimed_radius=0)
    rep = verify_construction(bad)
    assert rep.status == "FAIL"
    assert BlockVector.from_int(bad.space, rep.radius.witness).weight() >= 1
    assert rep.witness_distance == rep.radius.exact > 0


def test_verify_falls_back_to_probe():
    E = scalar_extend(hamming_binary(3), 2)
    L = sr_covering_lift(E, E)
    rep = verify_construction(L, samples=200, seed=1, guard=1 << 10)
    assert rep.radius.method == "monte-carlo" and rep.status == "PASS"


def test_scan_threads_do_not_change_result():
    L = pad(_lift_rep(), 3)
    a = sr_radius_exact(L, "scan", threads=1)
    b = sr_radius_exact(L, "scan", threads=4)
    assert (a.exact, a.witness) == (b.exact, b.witness)


def test_report_text():
    text = sr_radius_exact(_lift_rep(), "coset").to_text()
    assert "exact=2" in text and "method=coset" in text and "witness=" in text
