"""Integral matrices: tournaments, dicolourings, and the rationality number.

For an integral matrix the rationality number equals the dichromatic number
of its voting graph, and one voter always suffices: each acyclic colour class
becomes a chain in its unique topological order.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable

from .core import (
    MatrixClass,
    PreferenceMatrix,
    VotingGraph,
    classify,
    unanimity_graph,
    voting_graph,
)
from .errors import ClassError, InvalidDicoloring, InvariantError, SizeLimit
from .halfint import (
    combine_component_profiles,
    components,
    greedy_coloring,
    two_voter_construction,
)
from .poset import poset_from_chains
from .profile import VoterProfile, antichain_profile

DEFAULT_EXACT_LIMIT = 20
LOG_BASE = 2


def _popcount(x: int) -> int:
    return bin(x).count("1")


@dataclass(frozen=True)
class Tournament(VotingGraph):
    """Orientation of the complete graph on ``1..n``."""

    def __post_init__(self):
        super().__post_init__()
        if len(self.arcs) != self.n * (self.n - 1) // 2:
            raise InvariantError(
                f"{len(self.arcs)} arcs; a tournament on {self.n} vertices has {self.n * (self.n - 1) // 2}"
            )

    @classmethod
    def from_arcs(cls, n: int, arcs: Iterable[tuple[int, int]]) -> Tournament:
        return cls(n, frozenset((int(i), int(j)) for i, j in arcs))

    @classmethod
    def from_matrix(cls, M: PreferenceMatrix) -> Tournament:
        if classify(M) is not MatrixClass.INTEGRAL:
            raise ClassError("only integral matrices have a tournament voting graph")
        return cls(M.n, voting_graph(M).arcs)

    @cached_property
    def beats(self) -> tuple[int, ...]:
        """Out-neighbourhood bitmask of each vertex (0-based bits)."""
        return tuple(self.out_masks())

    def to_matrix(self) -> PreferenceMatrix:
        return PreferenceMatrix.from_upper(
            self.n,
            {(i, j): 1 if (i, j) in self.arcs else 0 for i in range(1, self.n + 1) for j in range(i + 1, self.n + 1)},
        )

    def is_acyclic_set(self, vertices: Iterable[int]) -> bool:
        return _transitive_order(self, vertices) is not None


def _transitive_order(T: Tournament, vertices: Iterable[int]) -> list[int] | None:
    """Unique acyclic order of an induced subtournament, or None if it has a cycle."""
    vs = list(vertices)
    mask = sum(1 << (v - 1) for v in vs)
    scores = {v: _popcount(T.beats[v - 1] & mask) for v in vs}
    order = sorted(vs, key=lambda v: -scores[v])
    # Acyclic iff the scores are exactly k-1, ..., 1, 0.
    if [scores[v] for v in order] != list(range(len(vs) - 1, -1, -1)):
        return None
    return order


@dataclass(frozen=True)
class Dicoloring:
    classes: tuple[tuple[int, ...], ...]

    @property
    def k(self) -> int:
        return sum(1 for c in self.classes if c)


def check_dicoloring(T: VotingGraph, D: Dicoloring) -> None:
    """Independent certificate check: partition plus Kahn's algorithm per class."""
    labels = sorted(v for c in D.classes for v in c)
    if labels != list(range(1, T.n + 1)):
        raise InvalidDicoloring("classes do not partition the vertices")
    for c in D.classes:
        members = set(c)
        indeg = {v: 0 for v in members}
        for i, j in T.arcs:
            if i in members and j in members:
                indeg[j] += 1
        ready = [v for v in members if indeg[v] == 0]
        seen = 0
        while ready:
            v = ready.pop()
            seen += 1
            for i, j in T.arcs:
                if i == v and j in members:
                    indeg[j] -= 1
                    if indeg[j] == 0:
                        ready.append(j)
        if seen != len(members):
            raise InvalidDicoloring(f"class {sorted(c)} contains a directed cycle")


def dichromatic_number_exact(
    T: Tournament, limit: int = DEFAULT_EXACT_LIMIT
) -> tuple[int, Dicoloring]:
    """Minimum number of acyclic classes, with a witness.

    Iterative deepening on ``k``; vertices are assigned in label order, trying
    existing classes first and opening at most one new class. Each class is
    kept as its transitive order, so a vertex fits iff the members beating it
    form a prefix of that order.
    """
    n = T.n
    if n > limit:
        raise SizeLimit(f"n={n} exceeds the exact limit {limit}")
    if n == 0:
        return 0, Dicoloring(())
    beats = T.beats
    beaten_by = [sum(1 << u for u in range(n) if beats[u] >> v & 1) for v in range(n)]

    def solve(k: int) -> list[list[int]] | None:
        classes: list[list[int]] = []
        cmask: list[int] = []

        def place(v: int) -> bool:
            if v == n:
                return True
            for idx, order in enumerate(classes):
                b = _popcount(cmask[idx] & beaten_by[v])
                if all(beats[u] >> v & 1 for u in order[:b]):
                    order.insert(b, v)
                    cmask[idx] |= 1 << v
                    if place(v + 1):
                        return True
                    order.pop(b)
                    cmask[idx] &= ~(1 << v)
            if len(classes) < k:
                classes.append([v])
                cmask.append(1 << v)
                if place(v + 1):
                    return True
                classes.pop()
                cmask.pop()
            return False

        return classes if place(0) else None

    for k in range(1, n + 1):
        found = solve(k)
        if found is not None:
            return k, Dicoloring(tuple(tuple(v + 1 for v in order) for order in found))
    raise AssertionError("n singleton classes always work")


def greedy_dicoloring(T: Tournament) -> Dicoloring:
    """Peel off classes: take the top out-degree vertex, keep only its out-neighbours.

    Out-degrees are counted inside the current candidate set; ties go to the
    lowest label. Each class is listed in pick order, which is its transitive
    order.
    """
    beats = T.beats
    remaining = (1 << T.n) - 1
    classes = []
    while remaining:
        cand = remaining
        picked = []
        while cand:
            v = max(_iter_bits(cand), key=lambda u: (_popcount(beats[u] & cand), -u))
            picked.append(v + 1)
            cand &= beats[v]
        classes.append(tuple(picked))
        for v in picked:
            remaining &= ~(1 << (v - 1))
    return Dicoloring(tuple(classes))


def greedy_bound(n: int) -> int:
    """``max(1, ceil(3n / log2 n))``, the class-count bound for the greedy peel."""
    if n < 2:
        return 1
    return max(1, math.ceil(3 * n / math.log2(n)))


def _iter_bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def voter_from_dicoloring(T: Tournament, D: Dicoloring) -> VoterProfile:
    """The single voter whose chains are the classes in their acyclic order."""
    labels = sorted(v for c in D.classes for v in c)
    if labels != list(range(1, T.n + 1)):
        raise InvalidDicoloring("classes do not partition the vertices")
    chains = []
    for c in D.classes:
        if not c:
            continue
        order = _transitive_order(T, c)
        if order is None:
            raise InvalidDicoloring(f"class {sorted(c)} contains a directed cycle")
        chains.append(order)
    return VoterProfile(T.n, (poset_from_chains(T.n, chains),))


def random_tournament(n: int, seed: int) -> Tournament:
    """Pairs ``i < j`` in lexicographic order get ``i -> j`` when
    ``random.Random(seed).getrandbits(1)`` is 1, else ``j -> i``."""
    if n < 1:
        raise ValueError("n must be positive")
    rng = random.Random(seed)
    arcs = []
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            arcs.append((i, j) if rng.getrandbits(1) else (j, i))
    return Tournament(n, frozenset(arcs))


@dataclass(frozen=True)
class AcyclicSubset:
    size: int
    witness: tuple[int, ...]
    exact: bool


def max_acyclic_subset(T: Tournament, limit: int = DEFAULT_EXACT_LIMIT) -> AcyclicSubset:
    """Largest vertex set inducing an acyclic subtournament.

    Exact for ``n <= limit``: a transitive set has a source ``v`` and the rest
    lies inside ``v``'s out-neighbourhood, so ``f(S) = 1 + max_v f(S & out(v))``
    memoised over bitmasks. Above the limit the best greedy chain from every
    start vertex is returned with ``exact=False`` (a lower bound).
    """
    beats = T.beats
    if T.n > limit:
        best: tuple[int, ...] = ()
        for start in range(T.n):
            chain = [start]
            cand = beats[start]
            while cand:
                v = max(_iter_bits(cand), key=lambda u: (_popcount(beats[u] & cand), -u))
                chain.append(v)
                cand &= beats[v]
            if len(chain) > len(best):
                best = tuple(v + 1 for v in chain)
        return AcyclicSubset(len(best), best, False)

    memo: dict[int, tuple[int, int]] = {0: (0, -1)}

    def f(S: int) -> int:
        hit = memo.get(S)
        if hit is not None:
            return hit[0]
        best_size, best_v = 0, -1
        for v in _iter_bits(S):
            sub = S & beats[v]
            # Anything already at least as big as the whole remainder cannot be beaten.
            if 1 + _popcount(sub) <= best_size:
                continue
            size = 1 + f(sub)
            if size > best_size:
                best_size, best_v = size, v
        memo[S] = (best_size, best_v)
        return best_size

    full = (1 << T.n) - 1
    size = f(full)
    witness = []
    S = full
    while S:
        v = memo[S][1]
        witness.append(v + 1)
        S &= beats[v]
    return AcyclicSubset(size, tuple(sorted(witness)), True)


# --- rationality number ----------------------------------------------------


@dataclass(frozen=True)
class RationalityResult:
    """Outcome of :func:`rationality_number`.

    ``exact`` is True only when ``lower == upper`` was established by an exact
    dichromatic computation. ``certificate`` witnesses ``upper``; ``cycle``,
    when present, is a directed cycle of the voting graph witnessing
    ``lower >= 2``.
    """

    matrix_class: MatrixClass
    lower: int
    upper: int
    exact: bool
    certificate: VoterProfile
    cycle: tuple[int, ...] | None = None
    notes: tuple[str, ...] = field(default_factory=tuple)
    log_base: int = LOG_BASE


def _integral_alpha(M: PreferenceMatrix, limit: int):
    """(lower, upper, exact, single-voter certificate, notes) for an integral matrix."""
    T = Tournament.from_matrix(M)
    cyc = T.find_cycle()
    if cyc is None:
        D = Dicoloring((tuple(range(1, M.n + 1)),))
        return 1, 1, True, voter_from_dicoloring(T, D), ("voting graph acyclic",)
    if M.n <= limit:
        k, D = dichromatic_number_exact(T, limit)
        return k, k, True, voter_from_dicoloring(T, D), ("exact dichromatic number",)
    D = greedy_dicoloring(T)
    return 2, D.k, False, voter_from_dicoloring(T, D), (
        f"n={M.n} above exact limit {limit}; upper bound from greedy dicolouring",
    )


def rationality_number(M: PreferenceMatrix, exact_limit: int = DEFAULT_EXACT_LIMIT) -> RationalityResult:
    """Exact value for integral matrices, certified bounds otherwise."""
    cls = classify(M)
    cycle = voting_graph(M).find_cycle()
    cycle_lower = 1 if cycle is None else 2

    if cls is MatrixClass.INTEGRAL:
        lo, hi, exact, cert, notes = _integral_alpha(M, exact_limit)
        return RationalityResult(cls, lo, hi, exact, cert, cycle, notes)

    if cls is MatrixClass.GENERAL:
        return RationalityResult(
            cls, cycle_lower, M.n, False, antichain_profile(M.n), cycle,
            ("general matrix: single antichain voter",),
        )

    partition = components(M)
    lows, highs, profiles, notes = [], [], [], []
    for labels, sub in zip(partition.components, partition.submatrices):
        if classify(sub) is MatrixClass.INTEGRAL:
            lo, hi, _, cert, _ = _integral_alpha(sub, exact_limit)
            lows.append(lo)
        else:
            # A proper colouring never has more classes than vertices, so this
            # is already min(colour count, component size).
            coloring = greedy_coloring(unanimity_graph(sub))
            cert = two_voter_construction(sub, coloring)
            hi = len(coloring)
            sub_cycle = voting_graph(sub).find_cycle()
            lows.append(1 if sub_cycle is None else 2)
        highs.append(hi)
        profiles.append(cert)
    notes.append(f"{len(partition.components)} unanimity component(s)")
    if len(profiles) == 1:
        combined = profiles[0]
    else:
        combined = combine_component_profiles(partition, profiles, tuples="aligned")
    lower = max(max(lows), cycle_lower)
    return RationalityResult(cls, lower, max(highs), False, combined, cycle, tuple(notes))
