"""Rationality numbers of preference matrices.

A preference matrix records, for each pair of candidates, the fraction of
voters preferring one to the other. This package bounds (and for integral
matrices computes exactly) the smallest poset width that lets a set of voters
reproduce the matrix, and emits voter profiles certifying the bound.
"""

from .core import (
    MatrixClass,
    PreferenceMatrix,
    UnanimityGraph,
    VotingGraph,
    classify,
    parse_matrix,
    serialize_matrix,
    unanimity_graph,
    voting_graph,
)
from .integral import Dicoloring, RationalityResult, Tournament, rationality_number
from .poset import PartialOrder, poset_from_chains, poset_from_cover_pairs, width
from .profile import VoterProfile, check_consistency

__all__ = [
    "Dicoloring",
    "MatrixClass",
    "PartialOrder",
    "PreferenceMatrix",
    "RationalityResult",
    "Tournament",
    "UnanimityGraph",
    "VoterProfile",
    "VotingGraph",
    "check_consistency",
    "classify",
    "parse_matrix",
    "poset_from_chains",
    "poset_from_cover_pairs",
    "rationality_number",
    "serialize_matrix",
    "unanimity_graph",
    "voting_graph",
    "width",
]
