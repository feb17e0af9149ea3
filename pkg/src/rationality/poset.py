"""Strict partial orders over candidates ``1..n``.

Orders are stored transitively closed as one bitmask per candidate:
bit ``j-1`` of ``succ[i-1]`` is set iff ``i > j``. Width and minimum chain
decompositions go through a maximum matching in the split bipartite graph
(left copy of ``i`` joined to right copy of ``j`` whenever ``i > j``).
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import CycleError, InvariantError, NotComparable, NotRemovable, ParseError, PartitionError


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class PartialOrder:
    n: int
    succ: tuple[int, ...]

    def __post_init__(self):
        if len(self.succ) != self.n:
            raise InvariantError("succ table has wrong length")
        full = (1 << self.n) - 1
        for i, m in enumerate(self.succ):
            if m & ~full:
                raise InvariantError(f"candidate {i + 1} relates to a label outside 1..{self.n}")
            if m >> i & 1:
                raise CycleError(f"{i + 1} > {i + 1} violates irreflexivity")
            for j in _bits(m):
                if self.succ[j] >> i & 1:
                    raise CycleError(f"both {i + 1} > {j + 1} and {j + 1} > {i + 1}")
                if self.succ[j] & ~m:
                    raise InvariantError("relation is not transitively closed")

    @classmethod
    def from_relation(cls, n: int, pairs: Iterable[tuple[int, int]]) -> PartialOrder:
        """Wrap an already-closed relation; raises if it is not a strict order."""
        succ = [0] * n
        for i, j in pairs:
            _check_label(n, i)
            _check_label(n, j)
            succ[i - 1] |= 1 << (j - 1)
        return cls(n, tuple(succ))

    @cached_property
    def relation(self) -> frozenset[tuple[int, int]]:
        return frozenset((i + 1, j + 1) for i, m in enumerate(self.succ) for j in _bits(m))

    def prefers(self, i: int, j: int) -> bool:
        """True iff ``i > j`` (strong preference)."""
        return bool(self.succ[i - 1] >> (j - 1) & 1)

    def comparable(self, i: int, j: int) -> bool:
        return self.prefers(i, j) or self.prefers(j, i)

    def cover_pairs(self) -> list[tuple[int, int]]:
        """Hasse diagram arcs: ``i > j`` with nothing strictly between."""
        out = []
        for i, m in enumerate(self.succ):
            for j in _bits(m):
                if not any(self.succ[z] >> j & 1 for z in _bits(m)):
                    out.append((i + 1, j + 1))
        return out

    def is_chain_union(self) -> bool:
        """True if the order is a disjoint union of chains (no cross-chain relations)."""
        return self == poset_from_chains(self.n, min_chain_decomposition(self).chains)

    def to_dot(self, name: str = "hasse") -> str:
        lines = [f"digraph {name} {{"]
        lines += [f"  {v};" for v in range(1, self.n + 1)]
        lines += [f"  {i} -> {j};" for i, j in self.cover_pairs()]
        lines.append("}")
        return "\n".join(lines) + "\n"


def _check_label(n: int, v: int) -> None:
    if not isinstance(v, int) or not 1 <= v <= n:
        raise InvariantError(f"candidate {v!r} outside 1..{n}")


def _close(n: int, succ: list[int]) -> list[int]:
    # Warshall on bitmasks.
    succ = list(succ)
    for k in range(n):
        bit = 1 << k
        for i in range(n):
            if succ[i] & bit:
                succ[i] |= succ[k]
    return succ


def poset_from_cover_pairs(n: int, pairs: Iterable[tuple[int, int]]) -> PartialOrder:
    """Transitive closure of ``pairs``; :class:`CycleError` if it is not a strict order."""
    succ = [0] * n
    for i, j in pairs:
        _check_label(n, i)
        _check_label(n, j)
        if i == j:
            raise CycleError(f"{i} > {i} violates irreflexivity")
        succ[i - 1] |= 1 << (j - 1)
    succ = _close(n, succ)
    for i in range(n):
        if succ[i] >> i & 1:
            raise CycleError(f"candidate {i + 1} lies on a preference cycle")
    return PartialOrder(n, tuple(succ))


def poset_from_chains(n: int, chains: Iterable[Sequence[int]]) -> PartialOrder:
    """Disjoint chains (most preferred first); cross-chain pairs are incomparable."""
    succ = [0] * n
    seen: set[int] = set()
    for chain in chains:
        below = 0
        for v in reversed(chain):
            _check_label(n, v)
            if v in seen:
                raise PartitionError(f"candidate {v} appears twice")
            seen.add(v)
            succ[v - 1] = below
            below |= 1 << (v - 1)
    missing = set(range(1, n + 1)) - seen
    if missing:
        raise PartitionError(f"candidates {sorted(missing)} not covered by any chain")
    return PartialOrder(n, tuple(succ))


def antichain(n: int) -> PartialOrder:
    return PartialOrder(n, (0,) * n)


def total_order(ranking: Sequence[int]) -> PartialOrder:
    return poset_from_chains(len(ranking), [ranking])


# --- Dilworth via bipartite matching ---------------------------------------


def _max_matching(P: PartialOrder) -> list[int]:
    """``match_right[j] = i`` when left ``i`` is matched to right ``j``, else -1.

    Plain augmenting paths (Kuhn), left vertices in ascending order.
    """
    n = P.n
    adj = [list(_bits(m)) for m in P.succ]
    match_right = [-1] * n

    def augment(u: int, visited: list[bool]) -> bool:
        for v in adj[u]:
            if visited[v]:
                continue
            visited[v] = True
            if match_right[v] == -1 or augment(match_right[v], visited):
                match_right[v] = u
                return True
        return False

    for u in range(n):
        augment(u, [False] * n)
    return match_right


@dataclass(frozen=True)
class ChainDecomposition:
    chains: tuple[tuple[int, ...], ...]

    def __len__(self):
        return len(self.chains)


def min_chain_decomposition(P: PartialOrder) -> ChainDecomposition:
    match_right = _max_matching(P)
    nxt = [-1] * P.n
    for v, u in enumerate(match_right):
        if u != -1:
            nxt[u] = v
    chains = []
    for start in range(P.n):
        if match_right[start] != -1:
            continue
        chain = [start + 1]
        v = nxt[start]
        while v != -1:
            chain.append(v + 1)
            v = nxt[v]
        chains.append(tuple(chain))
    return ChainDecomposition(tuple(chains))


def width(P: PartialOrder) -> int:
    matched = sum(1 for u in _max_matching(P) if u != -1)
    return P.n - matched


def max_antichain(P: PartialOrder) -> frozenset[int]:
    """A maximum antichain read off the Konig vertex cover of the matching."""
    n = P.n
    match_right = _max_matching(P)
    match_left = [-1] * n
    for v, u in enumerate(match_right):
        if u != -1:
            match_left[u] = v
    # Alternating BFS from unmatched left vertices.
    reach_left = [match_left[u] == -1 for u in range(n)]
    reach_right = [False] * n
    queue = deque(u for u in range(n) if reach_left[u])
    while queue:
        u = queue.popleft()
        for v in _bits(P.succ[u]):
            if reach_right[v] or match_left[u] == v:
                continue
            reach_right[v] = True
            w = match_right[v]
            if w != -1 and not reach_left[w]:
                reach_left[w] = True
                queue.append(w)
    return frozenset(x + 1 for x in range(n) if reach_left[x] and not reach_right[x])


def weaken(P: PartialOrder, x: int, y: int) -> PartialOrder:
    """Make the voter indifferent between ``x`` and ``y`` and change nothing else.

    Only possible when nothing lies strictly between ``x`` and ``y``; otherwise
    dropping the single pair would break transitivity.
    """
    if not P.prefers(x, y):
        raise NotComparable(f"{x} > {y} does not hold")
    between = [z + 1 for z in _bits(P.succ[x - 1]) if P.succ[z] >> (y - 1) & 1]
    if between:
        raise NotRemovable(f"{x} > {between[0]} > {y}; the pair is implied")
    succ = list(P.succ)
    succ[x - 1] &= ~(1 << (y - 1))
    return PartialOrder(P.n, tuple(succ))


# --- JSON ------------------------------------------------------------------


def poset_to_obj(P: PartialOrder) -> dict:
    """Chain form when the order is a union of disjoint chains, cover form otherwise."""
    if P.is_chain_union():
        return {"n": P.n, "chains": [list(c) for c in min_chain_decomposition(P).chains]}
    return {"n": P.n, "pairs": [list(p) for p in P.cover_pairs()]}


def poset_from_obj(obj: dict, n: int | None = None) -> PartialOrder:
    if not isinstance(obj, dict):
        raise ParseError("poset must be a JSON object")
    n = obj.get("n", n)
    if not isinstance(n, int) or n < 1:
        raise ParseError('poset needs a positive integer "n"')
    try:
        if "chains" in obj:
            return poset_from_chains(n, [list(c) for c in obj["chains"]])
        if "pairs" in obj:
            return poset_from_cover_pairs(n, [tuple(p) for p in obj["pairs"]])
    except (TypeError, ValueError) as exc:
        raise ParseError(f"malformed poset: {exc}") from exc
    raise ParseError('poset needs "chains" or "pairs"')


def parse_poset(text: str | bytes) -> PartialOrder:
    try:
        return poset_from_obj(json.loads(text))
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
