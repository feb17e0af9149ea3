"""Half-integral matrices: unanimity components, colour-class voters, and
random complete k-partite instances for lower-bound experiments."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import (
    HALF,
    MatrixClass,
    PreferenceMatrix,
    UnanimityGraph,
    VotingGraph,
    classify,
    unanimity_graph,
)
from .errors import (
    ClassError,
    DivisibilityError,
    ImproperColoring,
    InconsistentInput,
    InvariantError,
)
from .poset import PartialOrder, poset_from_chains
from .profile import VoterProfile, check_consistency

ENUMERATION_THRESHOLD = 10**6


@dataclass(frozen=True)
class ComponentPartition:
    """Unanimity components ``V_1..V_t`` of a matrix with their submatrices.

    Inside ``submatrices[l]`` candidate ``k`` stands for ``components[l][k-1]``.
    """

    matrix: PreferenceMatrix
    components: tuple[tuple[int, ...], ...]
    submatrices: tuple[PreferenceMatrix, ...]

    def __post_init__(self):
        labels = sorted(v for c in self.components for v in c)
        if labels != list(range(1, self.matrix.n + 1)):
            raise InvariantError("components do not partition the candidates")
        owner = {v: idx for idx, c in enumerate(self.components) for v in c}
        for i in range(1, self.matrix.n + 1):
            for j in range(i + 1, self.matrix.n + 1):
                if owner[i] != owner[j] and self.matrix.p(i, j) != HALF:
                    raise InvariantError(f"p_{i},{j} != 1/2 across components")


@dataclass(frozen=True)
class ProperColoring:
    classes: tuple[tuple[int, ...], ...]

    def __len__(self):
        return sum(1 for c in self.classes if c)


def components(M: PreferenceMatrix) -> ComponentPartition:
    if classify(M) is MatrixClass.GENERAL:
        raise ClassError("unanimity components are only defined for half-integral matrices")
    adj = unanimity_graph(M).adjacency()
    seen: set[int] = set()
    comps = []
    for root in M.candidates:
        if root in seen:
            continue
        seen.add(root)
        stack, comp = [root], []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return ComponentPartition(M, tuple(comps), tuple(M.submatrix(c) for c in comps))


def _lift(voter: PartialOrder, labels: Sequence[int]) -> list[tuple[int, int]]:
    return [(labels[i - 1], labels[j - 1]) for i, j in voter.relation]


def _ordered_voter(n, comps, lifted, forward: bool) -> PartialOrder:
    succ = [0] * n
    for i, j in lifted:
        succ[i - 1] |= 1 << (j - 1)
    masks = [sum(1 << (v - 1) for v in c) for c in comps]
    order = range(len(comps)) if forward else range(len(comps) - 1, -1, -1)
    below = 0
    for idx in reversed(list(order)):
        for v in comps[idx]:
            succ[v - 1] |= below
        below |= masks[idx]
    return PartialOrder(n, tuple(succ))


def combine_component_profiles(
    partition: ComponentPartition,
    per_component: Sequence[VoterProfile],
    *,
    tuples: str = "product",
) -> VoterProfile:
    """Merge per-component witnesses into one profile for the whole matrix.

    Every choice of one voter per component yields two output voters. Both copy
    the chosen orders inside each component; the first also ranks whole
    components left to right, the second right to left.

    ``tuples="product"`` uses every combination (twice the product of the
    profile sizes). ``tuples="aligned"`` uses only the ``lcm`` of the sizes,
    taking voter ``r mod m`` from a component with ``m`` voters at step ``r``.
    Each component's voters still get equal weight.
    """
    comps = partition.components
    if len(per_component) != len(comps):
        raise InvariantError(f"{len(comps)} components but {len(per_component)} profiles")
    for idx, (sub, prof) in enumerate(zip(partition.submatrices, per_component)):
        if not check_consistency(prof, sub).consistent:
            raise InconsistentInput(f"profile for component {idx + 1} is not consistent")
    if tuples == "product":
        choices = itertools.product(*(p.voters for p in per_component))
    elif tuples == "aligned":
        period = math.lcm(*(len(p) for p in per_component))
        choices = (
            tuple(p.voters[r % len(p)] for p in per_component) for r in range(period)
        )
    else:
        raise ValueError(f"unknown tuples mode {tuples!r}")
    n = partition.matrix.n
    voters = []
    for S in choices:
        lifted = [pair for v, c in zip(S, comps) for pair in _lift(v, c)]
        voters.append(_ordered_voter(n, comps, lifted, forward=True))
        voters.append(_ordered_voter(n, comps, lifted, forward=False))
    return VoterProfile(n, tuple(voters))


def greedy_coloring(G: UnanimityGraph) -> ProperColoring:
    """DSATUR: colour the most saturated vertex next (ties: degree, then label)."""
    adj = G.adjacency()
    colour: dict[int, int] = {}
    while len(colour) < G.n:
        v = min(
            (u for u in adj if u not in colour),
            key=lambda u: (-len({colour[w] for w in adj[u] if w in colour}), -len(adj[u]), u),
        )
        used = {colour[w] for w in adj[v] if w in colour}
        colour[v] = next(c for c in itertools.count() if c not in used)
    k = max(colour.values(), default=-1) + 1
    return ProperColoring(
        tuple(tuple(sorted(v for v in colour if colour[v] == c)) for c in range(k))
    )


def check_coloring(G: UnanimityGraph, coloring: ProperColoring) -> None:
    labels = sorted(v for c in coloring.classes for v in c)
    if labels != list(range(1, G.n + 1)):
        raise ImproperColoring("colour classes do not partition the candidates")
    for c in coloring.classes:
        for i, j in itertools.combinations(c, 2):
            if G.has_edge(i, j):
                raise ImproperColoring(f"{i} and {j} share a colour but are unanimous")


def two_voter_construction(M: PreferenceMatrix, coloring: ProperColoring) -> VoterProfile:
    """Two voters with one chain per colour class, the second reversing the first."""
    if classify(M) is MatrixClass.GENERAL:
        raise ClassError("two-voter construction needs a half-integral matrix")
    check_coloring(unanimity_graph(M), coloring)
    classes = [sorted(c) for c in coloring.classes if c]
    up = poset_from_chains(M.n, classes)
    down = poset_from_chains(M.n, [c[::-1] for c in classes])
    return VoterProfile(M.n, (up, down))


def random_lower_bound_instance(n: int, k: int, seed: int) -> PreferenceMatrix:
    """Complete k-partite unanimity graph with uniformly random orientation.

    Parts are consecutive label blocks of size ``n // k``. Pairs ``i < j`` in
    different parts are visited in lexicographic order and oriented ``i -> j``
    when ``random.Random(seed).getrandbits(1)`` is 1.
    """
    if k < 1 or n < 1 or n % k:
        raise DivisibilityError(f"k={k} must divide n={n}")
    size = n // k
    rng = random.Random(seed)
    upper = {}
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            if (i - 1) // size != (j - 1) // size:
                upper[(i, j)] = 1 if rng.getrandbits(1) else 0
    return PreferenceMatrix.from_upper(n, upper)


# --- directed-triangle property --------------------------------------------


@dataclass(frozen=True)
class TriangleCheck:
    outcome: str  # "proved" | "refuted" | "sampled_ok"
    witness: tuple[int, ...] | None
    samples: int
    exhaustive: bool


def directed_triangles(D: VotingGraph) -> list[tuple[int, int, int]]:
    out = D.out_masks()
    tris = []
    for a in range(D.n):
        for b in range(a + 1, D.n):
            for c in range(b + 1, D.n):
                ab, bc, ca = out[a] >> b & 1, out[b] >> c & 1, out[c] >> a & 1
                ba, cb, ac = out[b] >> a & 1, out[c] >> b & 1, out[a] >> c & 1
                if (ab and bc and ca) or (ba and cb and ac):
                    tris.append((a + 1, b + 1, c + 1))
    return tris


def _triangle_free_subset(n: int, s: int, tris) -> tuple[int, ...] | None:
    """Exact search for an ``s``-subset with no directed triangle."""
    # closing[v] lists pairs (a, b) with a, b < v forming a triangle with v
    closing = [[] for _ in range(n + 1)]
    for t in tris:
        a, b, c = t
        closing[c].append((1 << (a - 1)) | (1 << (b - 1)))

    chosen: list[int] = []

    def search(v: int, mask: int) -> bool:
        if len(chosen) == s:
            return True
        if n - v + 1 < s - len(chosen):
            return False
        if all(pm & mask != pm for pm in closing[v]):
            chosen.append(v)
            if search(v + 1, mask | 1 << (v - 1)):
                return True
            chosen.pop()
        return search(v + 1, mask)

    return tuple(chosen) if search(1, 0) else None


def verify_triangle_property(
    D: VotingGraph,
    s: int,
    budget: int,
    seed: int = 0,
    threshold: int = ENUMERATION_THRESHOLD,
) -> TriangleCheck:
    """Does every ``s``-subset of ``D`` contain a directed triangle?

    With at most ``threshold`` subsets the answer is exact (``proved`` or
    ``refuted`` with a triangle-free witness). Otherwise ``budget`` uniform
    subsets are drawn from ``numpy.random.Generator(PCG64(seed))`` and the
    first triangle-free draw, if any, is the refutation.
    """
    if not 3 <= s <= D.n:
        raise ValueError(f"subset size {s} outside 3..{D.n}")
    tris = directed_triangles(D)
    total = math.comb(D.n, s)
    if total <= threshold:
        witness = _triangle_free_subset(D.n, s, tris)
        if witness is None:
            return TriangleCheck("proved", None, total, True)
        return TriangleCheck("refuted", witness, total, True)

    rng = np.random.Generator(np.random.PCG64(seed))
    tri_idx = np.array(tris, dtype=np.int64).reshape(-1, 3) - 1
    chunk = max(1, min(budget, 2**22 // max(D.n, 1)))
    done = 0
    while done < budget:
        size = min(chunk, budget - done)
        keys = rng.random((size, D.n))
        picked = np.argsort(keys, axis=1)[:, :s]
        member = np.zeros((size, D.n), dtype=bool)
        np.put_along_axis(member, picked, True, axis=1)
        has_tri = np.zeros(size, dtype=bool)
        for start in range(0, len(tri_idx), 256):
            block = tri_idx[start : start + 256]
            hit = member[:, block[:, 0]] & member[:, block[:, 1]] & member[:, block[:, 2]]
            has_tri |= hit.any(axis=1)
        bad = np.flatnonzero(~has_tri)
        if bad.size:
            row = member[bad[0]]
            witness = tuple(int(v) + 1 for v in np.flatnonzero(row))
            return TriangleCheck("refuted", witness, done + int(bad[0]) + 1, False)
        done += size
    return TriangleCheck("sampled_ok", None, budget, False)
