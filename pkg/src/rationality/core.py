"""Exact-rational preference matrices and the graphs derived from them.

Candidates are labelled ``1..n`` everywhere in the public API and in every
file format. Entries are :class:`fractions.Fraction`; no floating point is
involved in validation.
"""

from __future__ import annotations

import csv
import enum
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InvariantError, ParseError

Rational = Fraction

ZERO = Fraction(0)
HALF = Fraction(1, 2)
ONE = Fraction(1)


class MatrixClass(str, enum.Enum):
    INTEGRAL = "integral"
    HALF_INTEGRAL = "half-integral"
    GENERAL = "general"


def parse_rational(value) -> Fraction:
    """Parse ``"a/b"``, an integer string, or a decimal string exactly.

    JSON numbers are accepted too; floats go through their shortest decimal
    repr so ``0.5`` becomes exactly ``1/2``.
    """
    if isinstance(value, bool):
        raise ParseError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        value = repr(value)
    if not isinstance(value, str):
        raise ParseError(f"not a rational: {value!r}")
    try:
        return Fraction(value.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"not a rational: {value!r}") from exc


@dataclass(frozen=True)
class PreferenceMatrix:
    """An ``n x n`` matrix with ``p_ii = 0`` and ``p_ij + p_ji = 1``.

    ``entries[i-1][j-1]`` holds ``p_ij``. Use :meth:`p` for 1-based access.
    """

    n: int
    entries: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.n < 1:
            raise InvariantError("a preference matrix needs at least one candidate")
        if len(self.entries) != self.n or any(len(row) != self.n for row in self.entries):
            raise InvariantError(f"matrix is not {self.n}x{self.n}")
        for i in range(self.n):
            if self.entries[i][i] != 0:
                raise InvariantError(f"p_{i + 1}{i + 1} = {self.entries[i][i]} != 0")
            for j in range(self.n):
                v = self.entries[i][j]
                if not 0 <= v <= 1:
                    raise InvariantError(f"p_{i + 1},{j + 1} = {v} outside [0, 1]")
                if i < j and v + self.entries[j][i] != 1:
                    raise InvariantError(
                        f"p_{i + 1},{j + 1} + p_{j + 1},{i + 1} = {v + self.entries[j][i]} != 1"
                    )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> PreferenceMatrix:
        """Build from nested sequences of anything :func:`parse_rational` takes."""
        parsed = tuple(
            tuple(v if isinstance(v, Fraction) else parse_rational(v) for v in row) for row in rows
        )
        return cls(len(parsed), parsed)

    @classmethod
    def from_upper(cls, n: int, upper: dict[tuple[int, int], object]) -> PreferenceMatrix:
        """Build from ``{(i, j): p_ij}`` for ``i < j``; missing pairs default to 1/2."""
        rows = [[ZERO] * n for _ in range(n)]
        for i in range(1, n + 1):
            for j in range(i + 1, n + 1):
                v = upper.get((i, j), HALF)
                v = v if isinstance(v, Fraction) else parse_rational(v)
                rows[i - 1][j - 1] = v
                rows[j - 1][i - 1] = 1 - v
        return cls.from_rows(rows)

    def p(self, i: int, j: int) -> Fraction:
        return self.entries[i - 1][j - 1]

    @property
    def candidates(self) -> range:
        return range(1, self.n + 1)

    def submatrix(self, labels: Sequence[int]) -> PreferenceMatrix:
        """Restriction to ``labels``; the k-th label becomes candidate ``k``."""
        return PreferenceMatrix(
            len(labels), tuple(tuple(self.p(i, j) for j in labels) for i in labels)
        )


@dataclass(frozen=True)
class VotingGraph:
    """Digraph with an arc ``i -> j`` exactly when ``p_ij = 1``."""

    n: int
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self):
        for i, j in self.arcs:
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise InvariantError(f"arc ({i}, {j}) outside 1..{self.n}")
            if i == j:
                raise InvariantError(f"self-loop at {i}")
            if (j, i) in self.arcs:
                raise InvariantError(f"both ({i}, {j}) and ({j}, {i}) present")

    def out_masks(self) -> list[int]:
        """Bit ``j-1`` of entry ``i-1`` is set iff ``i -> j``."""
        masks = [0] * self.n
        for i, j in self.arcs:
            masks[i - 1] |= 1 << (j - 1)
        return masks

    def find_cycle(self) -> tuple[int, ...] | None:
        """Return some directed cycle as a label sequence, or None if acyclic."""
        succ = {v: [] for v in range(1, self.n + 1)}
        for i, j in sorted(self.arcs):
            succ[i].append(j)
        colour = dict.fromkeys(succ, 0)
        parent: dict[int, int] = {}
        for root in succ:
            if colour[root]:
                continue
            stack = [(root, iter(succ[root]))]
            colour[root] = 1
            while stack:
                v, it = stack[-1]
                w = next(it, None)
                if w is None:
                    colour[v] = 2
                    stack.pop()
                elif colour[w] == 0:
                    colour[w] = 1
                    parent[w] = v
                    stack.append((w, iter(succ[w])))
                elif colour[w] == 1:
                    cycle = [v]
                    while cycle[-1] != w:
                        cycle.append(parent[cycle[-1]])
                    return tuple(reversed(cycle))
        return None

    def is_acyclic(self) -> bool:
        return self.find_cycle() is None

    def to_dot(self, name: str = "voting") -> str:
        lines = [f"digraph {name} {{"]
        lines += [f"  {v};" for v in range(1, self.n + 1)]
        lines += [f"  {i} -> {j};" for i, j in sorted(self.arcs)]
        lines.append("}")
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class UnanimityGraph:
    """Undirected graph with an edge ``{i, j}`` where ``p_ij`` is 0 or 1."""

    n: int
    edges: frozenset[frozenset[int]]

    def __post_init__(self):
        for e in self.edges:
            if len(e) != 2:
                raise InvariantError(f"bad edge {set(e)}")
            if not all(1 <= v <= self.n for v in e):
                raise InvariantError(f"edge {sorted(e)} outside 1..{self.n}")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> UnanimityGraph:
        return cls(n, frozenset(frozenset(p) for p in pairs))

    def adjacency(self) -> dict[int, set[int]]:
        adj = {v: set() for v in range(1, self.n + 1)}
        for e in self.edges:
            i, j = sorted(e)
            adj[i].add(j)
            adj[j].add(i)
        return adj

    def has_edge(self, i: int, j: int) -> bool:
        return frozenset((i, j)) in self.edges

    def to_dot(self, name: str = "unanimity") -> str:
        lines = [f"graph {name} {{"]
        lines += [f"  {v};" for v in range(1, self.n + 1)]
        lines += [f"  {i} -- {j};" for i, j in sorted(tuple(sorted(e)) for e in self.edges)]
        lines.append("}")
        return "\n".join(lines) + "\n"


def classify(M: PreferenceMatrix) -> MatrixClass:
    values = {v for row in M.entries for v in row}
    if values <= {ZERO, ONE}:
        return MatrixClass.INTEGRAL
    if values <= {ZERO, HALF, ONE}:
        return MatrixClass.HALF_INTEGRAL
    return MatrixClass.GENERAL


def voting_graph(M: PreferenceMatrix) -> VotingGraph:
    arcs = frozenset(
        (i, j) for i in M.candidates for j in M.candidates if i != j and M.p(i, j) == 1
    )
    return VotingGraph(M.n, arcs)


def unanimity_graph(M: PreferenceMatrix) -> UnanimityGraph:
    # Defined for any matrix: an edge wherever the pair is unanimous.
    pairs = [
        (i, j)
        for i in M.candidates
        for j in range(i + 1, M.n + 1)
        if M.p(i, j) in (ZERO, ONE)
    ]
    return UnanimityGraph.from_pairs(M.n, pairs)


# --- serialization ---------------------------------------------------------


def _matrix_from_rows(rows) -> PreferenceMatrix:
    n = len(rows)
    if n == 0:
        raise InvariantError("empty matrix")
    if any(len(row) != n for row in rows):
        raise InvariantError("matrix is not square")
    return PreferenceMatrix(n, tuple(tuple(parse_rational(v) for v in row) for row in rows))


def parse_matrix(text: bytes | str, format: str = "json") -> PreferenceMatrix:
    """Parse a matrix from JSON (``{"n": .., "entries": [[..]]}``) or headerless CSV."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError("matrix input is not UTF-8") from exc
    if format == "json":
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
        if not isinstance(doc, dict) or "entries" not in doc:
            raise ParseError('matrix JSON needs an "entries" field')
        rows = doc["entries"]
        if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
            raise ParseError('"entries" must be a list of lists')
        M = _matrix_from_rows(rows)
        if "n" in doc and doc["n"] != M.n:
            raise InvariantError(f'"n" is {doc["n"]} but entries are {M.n}x{M.n}')
        return M
    if format == "csv":
        rows = [row for row in csv.reader(io.StringIO(text)) if row and any(c.strip() for c in row)]
        return _matrix_from_rows(rows)
    raise ValueError(f"unknown matrix format {format!r}")


def serialize_matrix(M: PreferenceMatrix, format: str = "json") -> str:
    rows = [[str(v) for v in row] for row in M.entries]
    if format == "json":
        return json.dumps({"n": M.n, "entries": rows}) + "\n"
    if format == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        return buf.getvalue()
    raise ValueError(f"unknown matrix format {format!r}")
