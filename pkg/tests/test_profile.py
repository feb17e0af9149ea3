import random
from fractions import Fraction

import pytest

from goldens import CYCLE3, HEX, GENERAL3, HEX_CHAINS, SPLIT, SPLIT_L_PAIRS, SPLIT_R_PAIRS, SEVEN_CHAINS, hex_profile
from gen import random_half_integral, random_matrix, random_poset
from rationality.errors import DimensionMismatch, NotRemovable
from rationality.halfint import greedy_coloring, two_voter_construction
from rationality.core import unanimity_graph
from rationality.poset import poset_from_chains, poset_from_cover_pairs, total_order, weaken
from rationality.profile import (
    VoterProfile,
    antichain_profile,
    check_consistency,
    normalize_to_chains,
    parse_profile,
    profile_width,
    serialize_profile,
    strong_fraction,
    weak_fraction,
)

half = Fraction(1, 2)


def test_fractions_hex():
    V = hex_profile()
    assert strong_fraction(V, 1, 3) == half
    assert weak_fraction(V, 1, 3) == half
    assert weak_fraction(V, 1, 6) == half
    assert strong_fraction(V, 1, 6) == 0
    assert weak_fraction(V, 1, 2) == 1
    assert strong_fraction(V, 1, 2) == 0


def test_fractions_split():
    V = VoterProfile.of(poset_from_cover_pairs(5, SPLIT_L_PAIRS), poset_from_cover_pairs(5, SPLIT_R_PAIRS))
    assert strong_fraction(V, 1, 4) == half
    assert check_consistency(V, SPLIT).consistent


def test_antichain_voter_fractions():
    V = antichain_profile(4)
    assert all(strong_fraction(V, i, j) == 0 and weak_fraction(V, i, j) == 1
               for i in range(1, 5) for j in range(1, 5) if i != j)


def test_consistency_hex():
    assert check_consistency(hex_profile(), HEX).consistent


def test_total_order_inconsistent_with_three_cycle():
    report = check_consistency(VoterProfile.of(total_order([1, 2, 3])), CYCLE3)
    assert not report.consistent
    v13 = [v for v in report.violations if (v.i, v.j) == (1, 3)]
    assert len(v13) == 1
    assert v13[0].side == "upper" and v13[0].strong_fraction == 1 and v13[0].p_ij == 0
    # the mirrored pair fails on the other side
    v31 = [v for v in report.violations if (v.i, v.j) == (3, 1)]
    assert v31[0].side == "lower"


def test_antichain_consistent_with_anything():
    assert check_consistency(antichain_profile(3), GENERAL3).consistent
    rng = random.Random(0)
    for _ in range(100):
        assert check_consistency(antichain_profile(5), random_matrix(rng, 5)).consistent


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        check_consistency(antichain_profile(2), CYCLE3)


def test_profile_width():
    assert profile_width(hex_profile()) == 2
    assert profile_width(VoterProfile.of(total_order([2, 1, 3]), total_order([3, 2, 1]))) == 1
    assert profile_width(VoterProfile.of(poset_from_chains(7, SEVEN_CHAINS))) == 3
    assert profile_width(antichain_profile(1)) == 1
    assert profile_width(antichain_profile(3)) == 3


def test_normalize_hex_profile_gives_hex_chains():
    N = normalize_to_chains(hex_profile())
    assert N == VoterProfile.from_chains(6, HEX_CHAINS)
    assert check_consistency(N, HEX).consistent


def test_normalize_total_orders_unchanged():
    V = VoterProfile.of(total_order([2, 1, 3]), total_order([3, 1, 2]))
    assert normalize_to_chains(V) == V


def test_normalize_preserves_consistency_random():
    rng = random.Random(6)
    for _ in range(50):
        M = random_half_integral(rng, 6)
        V = two_voter_construction(M, greedy_coloring(unanimity_graph(M)))
        assert check_consistency(V, M).consistent
        N = normalize_to_chains(V)
        assert check_consistency(N, M).consistent
        assert profile_width(N) == profile_width(V)


def test_symmetry_and_fraction_identities():
    rng = random.Random(8)
    for _ in range(100):
        n = rng.randint(2, 6)
        V = VoterProfile(n, tuple(random_poset(rng, n) for _ in range(rng.randint(1, 4))))
        M = random_half_integral(rng, n)
        report = check_consistency(V, M)
        bad = {(v.i, v.j) for v in report.violations}
        assert all((j, i) in bad for i, j in bad)
        for i in range(1, n + 1):
            for j in range(1, n + 1):
                if i != j:
                    assert strong_fraction(V, i, j) + strong_fraction(V, j, i) <= 1
                    assert weak_fraction(V, i, j) == 1 - strong_fraction(V, j, i)


def test_weaken_monotonicity_random():
    rng = random.Random(12)
    trials = 0
    while trials < 200:
        M = random_half_integral(rng, rng.randint(2, 7))
        V = two_voter_construction(M, greedy_coloring(unanimity_graph(M)))
        u = rng.randrange(len(V))
        rel = sorted(V.voters[u].relation)
        if not rel:
            continue
        x, y = rng.choice(rel)
        try:
            w = weaken(V.voters[u], x, y)
        except NotRemovable:
            continue
        voters = list(V.voters)
        voters[u] = w
        assert check_consistency(VoterProfile(V.n, tuple(voters)), M).consistent
        trials += 1


def test_profile_json_roundtrip():
    for V in (hex_profile(), VoterProfile.from_chains(6, HEX_CHAINS), antichain_profile(3)):
        assert parse_profile(serialize_profile(V)) == V
    text = '{"n": 3, "voters": [{"chains": [[1, 2], [3]]}]}'
    assert parse_profile(text).voters[0].relation == {(1, 2)}
