"""Deliberately naive reference implementations.

Nothing here calls the optimised solvers; each function recomputes its answer
from the definitions so the two routes can check each other. Size limits are
hard errors.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterator, Sequence

import numpy as np

from .core import MatrixClass, PreferenceMatrix, UnanimityGraph, classify
from .errors import ClassError, SizeLimit
from .poset import PartialOrder


def brute_width(P: PartialOrder) -> int:
    """Largest pairwise-incomparable subset, by trying every subset."""
    n = P.n
    if n > 16:
        raise SizeLimit(f"brute_width supports n <= 16, got {n}")
    comparable = [0] * n
    for i in range(n):
        for j in range(n):
            if i != j and (P.prefers(i + 1, j + 1) or P.prefers(j + 1, i + 1)):
                comparable[i] |= 1 << j
    best = 0
    for mask in range(1 << n):
        size = bin(mask).count("1")
        if size <= best:
            continue
        if all(not (mask >> i & 1) or not (comparable[i] & mask) for i in range(n)):
            best = size
    return best


def _acyclic_by_source_removal(beats: Sequence[int], n: int) -> list[bool]:
    """acyclic[mask] for every vertex subset: acyclic iff some member beats all
    the others and the rest is acyclic."""
    acyclic = [False] * (1 << n)
    acyclic[0] = True
    for mask in range(1, 1 << n):
        m = mask
        while m:
            low = m & -m
            v = low.bit_length() - 1
            rest = mask ^ low
            if beats[v] & rest == rest and acyclic[rest]:
                acyclic[mask] = True
                break
            m ^= low
    return acyclic


def _beats_from_arcs(n: int, arcs) -> list[int]:
    beats = [0] * n
    for i, j in arcs:
        beats[i - 1] |= 1 << (j - 1)
    return beats


def brute_dichromatic(T) -> int:
    """Minimum number of acyclic sets covering all vertices, by subset DP.

    ``cover`` holds every subset coverable with ``k`` acyclic sets; it grows by
    OR-ing each acyclic set onto each disjoint coverable subset until the full
    vertex set appears.
    """
    n = T.n
    if n > 18:
        raise SizeLimit(f"brute_dichromatic supports n <= 18, got {n}")
    if n == 0:
        return 0
    acyclic = np.array(_acyclic_by_source_removal(_beats_from_arcs(n, T.arcs), n))
    masks = np.arange(1 << n, dtype=np.int64)
    sets = masks[acyclic][1:]
    full = (1 << n) - 1
    cover = acyclic.copy()
    k = 1
    while not cover[full]:
        nxt = cover.copy()
        base = masks[cover]
        for s in sets:
            ok = base[(base & s) == 0]
            nxt[ok | s] = True
        cover = nxt
        k += 1
    return k


def brute_max_acyclic(T) -> int:
    """Size of the largest acyclic vertex subset, by full enumeration."""
    n = T.n
    if n > 18:
        raise SizeLimit(f"brute_max_acyclic supports n <= 18, got {n}")
    acyclic = _acyclic_by_source_removal(_beats_from_arcs(n, T.arcs), n)
    return max(bin(m).count("1") for m in range(1 << n) if acyclic[m])


def set_partitions(items: Sequence[int], k: int) -> Iterator[list[list[int]]]:
    """All partitions of ``items`` into exactly ``k`` nonempty blocks."""
    items = list(items)
    if k == 0:
        if not items:
            yield []
        return
    if len(items) < k:
        return
    first, rest = items[0], items[1:]
    for part in set_partitions(rest, k - 1):
        yield [[first]] + part
    for part in set_partitions(rest, k):
        for idx in range(len(part)):
            yield part[:idx] + [[first] + part[idx]] + part[idx + 1 :]


def _single_voter_consistent(M: PreferenceMatrix, chains: Sequence[Sequence[int]]) -> bool:
    """Check the rationality constraints for one chain-union voter from scratch."""
    pos = {}
    for c_idx, chain in enumerate(chains):
        for rank, v in enumerate(chain):
            pos[v] = (c_idx, rank)
    for i in range(1, M.n + 1):
        for j in range(1, M.n + 1):
            if i == j:
                continue
            same = pos[i][0] == pos[j][0]
            strong = Fraction(int(same and pos[i][1] < pos[j][1]))
            weak = Fraction(int(not (same and pos[j][1] < pos[i][1])))
            if not strong <= M.p(i, j) <= weak:
                return False
    return True


def _block_order(M: PreferenceMatrix, block: Sequence[int]) -> list[int] | None:
    """Topological order of ``block`` under arcs ``p_ij = 1``; None if cyclic."""
    remaining = list(block)
    order = []
    while remaining:
        sources = [v for v in remaining if all(M.p(u, v) != 1 for u in remaining if u != v)]
        if not sources:
            return None
        order.append(sources[0])
        remaining.remove(sources[0])
    return order


def brute_alpha_integral(M: PreferenceMatrix) -> int:
    """Smallest chain count of a single consistent voter, over all set partitions."""
    if classify(M) is not MatrixClass.INTEGRAL:
        raise ClassError("brute_alpha_integral needs an integral matrix")
    if M.n > 10:
        raise SizeLimit(f"brute_alpha_integral supports n <= 10, got {M.n}")
    for k in range(1, M.n + 1):
        for blocks in set_partitions(range(1, M.n + 1), k):
            chains = [_block_order(M, b) for b in blocks]
            if any(c is None for c in chains):
                continue
            if _single_voter_consistent(M, chains):
                return k
    raise AssertionError("n singleton chains are always consistent")


def brute_single_voter(M: PreferenceMatrix, max_width: int) -> list[list[int]] | None:
    """Any single voter made of at most ``max_width`` chains consistent with ``M``.

    Tries every set partition into at most ``max_width`` blocks and every
    ordering of every block. Returns the chains of the first hit, else None.
    """
    if M.n > 9:
        raise SizeLimit(f"brute_single_voter supports n <= 9, got {M.n}")
    for k in range(1, max_width + 1):
        for blocks in set_partitions(range(1, M.n + 1), k):
            for orders in itertools.product(*(itertools.permutations(b) for b in blocks)):
                if _single_voter_consistent(M, orders):
                    return [list(o) for o in orders]
    return None


def brute_chromatic(G: UnanimityGraph) -> int:
    """Chromatic number by trying k = 1, 2, ... with plain backtracking."""
    if G.n > 24:
        raise SizeLimit(f"brute_chromatic supports n <= 24, got {G.n}")
    adj = G.adjacency()
    colour = {}

    def fill(v: int, k: int, used: int) -> bool:
        if v > G.n:
            return True
        # colours are interchangeable, so at most one fresh colour is tried
        for c in range(min(k, used + 1)):
            if all(colour.get(w) != c for w in adj[v]):
                colour[v] = c
                if fill(v + 1, k, max(used, c + 1)):
                    return True
                del colour[v]
        return False

    k = 1 if G.n else 0
    while G.n and not fill(1, k, 0):
        k += 1
    return k
