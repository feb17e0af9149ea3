import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from goldens import HEX_UP_PAIRS, HEX_CHAINS, SEVEN_CHAINS
from gen import random_poset
from rationality.errors import CycleError, NotComparable, NotRemovable, PartitionError
from rationality.poset import (
    PartialOrder,
    antichain,
    max_antichain,
    min_chain_decomposition,
    parse_poset,
    poset_from_chains,
    poset_from_cover_pairs,
    poset_to_obj,
    total_order,
    weaken,
    width,
)


def brute_antichain(P):
    best = 0
    for r in range(P.n + 1):
        for sub in itertools.combinations(range(1, P.n + 1), r):
            if all(not P.comparable(a, b) for a, b in itertools.combinations(sub, 2)):
                best = r
    return best


def closure_oracle(n, pairs):
    rel = set(pairs)
    changed = True
    while changed:
        changed = False
        for (a, b), (c, d) in itertools.product(list(rel), repeat=2):
            if b == c and (a, d) not in rel:
                rel.add((a, d))
                changed = True
    return rel


def hex_up():
    return poset_from_cover_pairs(6, HEX_UP_PAIRS)


def test_closure_of_chain():
    assert poset_from_cover_pairs(3, [(1, 2), (2, 3)]).relation == {(1, 2), (2, 3), (1, 3)}


def test_cycle_rejected():
    with pytest.raises(CycleError):
        poset_from_cover_pairs(3, [(1, 2), (2, 1)])
    with pytest.raises(CycleError):
        poset_from_cover_pairs(3, [(1, 2), (2, 3), (3, 1)])


def test_hex_up_voter_closure():
    rel = hex_up().relation
    assert rel == set(HEX_UP_PAIRS) | {(1, 5), (2, 5), (2, 6)}


def test_from_chains():
    assert poset_from_chains(6, HEX_CHAINS[0]).relation == {(1, 3), (3, 5), (1, 5), (2, 4), (4, 6), (2, 6)}
    assert poset_from_chains(3, [[1], [2], [3]]).relation == frozenset()
    seven = poset_from_chains(7, SEVEN_CHAINS)
    assert seven.relation == {(3, 1), (1, 4), (3, 4), (5, 6), (7, 2)}
    with pytest.raises(PartitionError):
        poset_from_chains(3, [[1, 2], [2, 3]])
    with pytest.raises(PartitionError):
        poset_from_chains(3, [[1, 2]])


def test_width_examples():
    assert width(total_order([3, 1, 5, 2, 4])) == 1
    assert width(antichain(5)) == 5
    assert width(hex_up()) == 2


def test_chain_decomposition_examples():
    assert min_chain_decomposition(hex_up()).chains == ((1, 3, 5), (2, 4, 6))
    assert min_chain_decomposition(antichain(4)).chains == ((1,), (2,), (3,), (4,))


def test_max_antichain_examples():
    assert len(max_antichain(total_order([2, 4, 1, 3]))) == 1
    A = max_antichain(hex_up())
    assert len(A) == 2
    assert all(not hex_up().comparable(a, b) for a, b in itertools.combinations(A, 2))


def test_random_posets_against_enumeration():
    rng = random.Random(2024)
    for _ in range(60):
        P = random_poset(rng, 8)
        w = brute_antichain(P)
        dec = min_chain_decomposition(P)
        A = max_antichain(P)
        assert width(P) == len(dec) == len(A) == w
        assert sorted(v for c in dec.chains for v in c) == list(range(1, 9))
        for c in dec.chains:
            assert all(P.prefers(a, b) for a, b in zip(c, c[1:]))
        assert all(not P.comparable(a, b) for a, b in itertools.combinations(A, 2))


@settings(max_examples=150, deadline=None)
@given(st.integers(1, 8), st.data())
def test_closure_matches_fixpoint_oracle(n, data):
    pairs = data.draw(st.lists(st.tuples(st.integers(1, n), st.integers(1, n)), max_size=12))
    try:
        P = poset_from_cover_pairs(n, pairs)
    except CycleError:
        rel = closure_oracle(n, pairs)
        assert any(a == b for a, b in rel)
        return
    assert P.relation == closure_oracle(n, pairs)


def test_chains_roundtrip_width():
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randint(1, 9)
        labels = list(range(1, n + 1))
        rng.shuffle(labels)
        cuts = sorted(rng.sample(range(1, n), rng.randint(0, n - 1))) if n > 1 else []
        chains = [labels[a:b] for a, b in zip([0] + cuts, cuts + [n])]
        P = poset_from_chains(n, chains)
        assert width(P) == len(chains)
        assert len(min_chain_decomposition(P)) == len(chains)


def test_weaken_examples():
    chain = total_order([1, 2, 3])
    assert weaken(chain, 2, 3).relation == {(1, 2), (1, 3)}
    with pytest.raises(NotRemovable):
        weaken(chain, 1, 3)
    with pytest.raises(NotComparable):
        weaken(chain, 3, 1)


def test_weaken_hex_up_voter_keeps_derived_pair():
    # Nothing lies between 1 and 3, so dropping (1,3) alone leaves a closed order.
    P = hex_up()
    Q = weaken(P, 1, 3)
    expected = set(P.relation) - {(1, 3)}
    assert Q.relation == expected
    assert closure_oracle(6, expected) == expected
    assert Q.prefers(1, 5)


def test_weaken_random_matches_oracle():
    rng = random.Random(9)
    for _ in range(200):
        P = random_poset(rng, rng.randint(2, 8))
        if not P.relation:
            continue
        x, y = rng.choice(sorted(P.relation))
        rest = set(P.relation) - {(x, y)}
        removable = closure_oracle(P.n, rest) == rest
        if removable:
            Q = weaken(P, x, y)
            assert P.relation - Q.relation == {(x, y)} and Q.relation <= P.relation
        else:
            with pytest.raises(NotRemovable):
                weaken(P, x, y)


def test_poset_json_forms():
    P = hex_up()
    obj = poset_to_obj(P)
    assert "pairs" in obj
    assert parse_poset(__import__("json").dumps(obj)) == P
    C = poset_from_chains(6, HEX_CHAINS[0])
    assert poset_to_obj(C) == {"n": 6, "chains": [[1, 3, 5], [2, 4, 6]]}


def test_hasse_dot():
    dot = hex_up().to_dot()
    assert "1 -> 5" not in dot and "1 -> 3" in dot


def test_invalid_direct_construction():
    with pytest.raises(Exception):
        PartialOrder(3, (0b010, 0b100, 0))  # 1>2, 2>3 but not 1>3
