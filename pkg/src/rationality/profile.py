"""Voter profiles and the pairwise rationality constraints.

A profile ``V`` is consistent with ``M`` when for every ordered pair ``i != j``::

    strong_fraction(V, i, j) <= p_ij <= weak_fraction(V, i, j)
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .core import PreferenceMatrix
from .errors import DimensionMismatch, InvariantError, ParseError
from .poset import (
    PartialOrder,
    antichain,
    min_chain_decomposition,
    poset_from_chains,
    poset_from_obj,
    poset_to_obj,
    width,
)


@dataclass(frozen=True)
class VoterProfile:
    """Ordered multiset of voters over the same candidates ``1..n``."""

    n: int
    voters: tuple[PartialOrder, ...]

    def __post_init__(self):
        if not self.voters:
            raise InvariantError("a profile needs at least one voter")
        for v in self.voters:
            if v.n != self.n:
                raise InvariantError(f"voter over {v.n} candidates in a profile over {self.n}")

    @classmethod
    def of(cls, *voters: PartialOrder) -> VoterProfile:
        return cls(voters[0].n, tuple(voters))

    @classmethod
    def from_chains(cls, n: int, voters: Sequence[Sequence[Sequence[int]]]) -> VoterProfile:
        return cls(n, tuple(poset_from_chains(n, chains) for chains in voters))

    def __len__(self):
        return len(self.voters)


@dataclass(frozen=True)
class Violation:
    i: int
    j: int
    strong_fraction: Fraction
    p_ij: Fraction
    weak_fraction: Fraction
    side: str  # "upper": strong fraction exceeds p_ij; "lower": weak fraction below p_ij


@dataclass(frozen=True)
class ConsistencyReport:
    consistent: bool
    violations: tuple[Violation, ...] = field(default_factory=tuple)

    def to_obj(self) -> dict:
        return {
            "consistent": self.consistent,
            "violations": [
                {
                    "i": v.i,
                    "j": v.j,
                    "strong_fraction": str(v.strong_fraction),
                    "p_ij": str(v.p_ij),
                    "weak_fraction": str(v.weak_fraction),
                    "side": v.side,
                }
                for v in self.violations
            ],
        }


def strong_fraction(V: VoterProfile, i: int, j: int) -> Fraction:
    if i == j:
        raise ValueError("strong_fraction needs two distinct candidates")
    return Fraction(sum(1 for v in V.voters if v.prefers(i, j)), len(V.voters))


def weak_fraction(V: VoterProfile, i: int, j: int) -> Fraction:
    if i == j:
        raise ValueError("weak_fraction needs two distinct candidates")
    return Fraction(sum(1 for v in V.voters if not v.prefers(j, i)), len(V.voters))


def check_consistency(V: VoterProfile, M: PreferenceMatrix) -> ConsistencyReport:
    """List every ordered pair breaking the constraints, not just the first."""
    if V.n != M.n:
        raise DimensionMismatch(f"profile has {V.n} candidates, matrix has {M.n}")
    m = len(V.voters)
    # counts[i][j] = number of voters with i > j
    counts = [[0] * V.n for _ in range(V.n)]
    for voter in V.voters:
        for i, j in voter.relation:
            counts[i - 1][j - 1] += 1
    violations = []
    for i in range(1, V.n + 1):
        for j in range(1, V.n + 1):
            if i == j:
                continue
            strong = Fraction(counts[i - 1][j - 1], m)
            weak = Fraction(m - counts[j - 1][i - 1], m)
            p = M.p(i, j)
            if strong > p:
                violations.append(Violation(i, j, strong, p, weak, "upper"))
            elif p > weak:
                violations.append(Violation(i, j, strong, p, weak, "lower"))
    return ConsistencyReport(not violations, tuple(violations))


def profile_width(V: VoterProfile) -> int:
    return max(width(v) for v in V.voters)


def antichain_profile(n: int) -> VoterProfile:
    """A single voter indifferent between every pair; consistent with any matrix."""
    if n < 1:
        raise ValueError("n must be positive")
    return VoterProfile(n, (antichain(n),))


def normalize_to_chains(V: VoterProfile) -> VoterProfile:
    """Replace each voter by a minimum chain decomposition of its order."""
    return VoterProfile(
        V.n,
        tuple(poset_from_chains(V.n, min_chain_decomposition(v).chains) for v in V.voters),
    )


# --- JSON ------------------------------------------------------------------


def profile_to_obj(V: VoterProfile) -> dict:
    voters = []
    for v in V.voters:
        obj = poset_to_obj(v)
        del obj["n"]
        voters.append(obj)
    return {"n": V.n, "voters": voters}


def serialize_profile(V: VoterProfile) -> str:
    return json.dumps(profile_to_obj(V)) + "\n"


def parse_profile(text: str | bytes) -> VoterProfile:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict) or not isinstance(doc.get("n"), int) or "voters" not in doc:
        raise ParseError('profile JSON needs integer "n" and "voters"')
    voters = doc["voters"]
    if not isinstance(voters, list):
        raise ParseError('"voters" must be a list')
    return VoterProfile(doc["n"], tuple(poset_from_obj(v, doc["n"]) for v in voters))
