"""Seeded experiment sweeps over random tournaments and k-partite instances.

Each sweep yields one row per seed, in seed order. Rows are plain dicts whose
keys are the CSV header.
"""

from __future__ import annotations

import csv
import io
import math
from typing import Iterable

from .core import voting_graph
from .halfint import random_lower_bound_instance, verify_triangle_property
from .integral import (
    DEFAULT_EXACT_LIMIT,
    check_dicoloring,
    dichromatic_number_exact,
    greedy_dicoloring,
    max_acyclic_subset,
    random_tournament,
)

TOURNAMENT_COLUMNS = [
    "n",
    "seed",
    "exact_k",
    "greedy_k",
    "max_acyclic",
    "bound_3n_log",
    "bound_n_over_2logn1",
    "bound_2logn1",
]
TRIANGLE_COLUMNS = ["n", "k", "s", "outcome", "samples", "seed"]


def _fmt(x: float) -> str:
    return f"{x:.4f}"


def tournament_row(n: int, seed: int, exact_limit: int = DEFAULT_EXACT_LIMIT, want_acyclic: bool = True) -> dict:
    T = random_tournament(n, seed)
    greedy = greedy_dicoloring(T)
    check_dicoloring(T, greedy)
    exact = "-"
    if n <= exact_limit:
        k, witness = dichromatic_number_exact(T, exact_limit)
        check_dicoloring(T, witness)
        exact = k
    acyclic = "-"
    if want_acyclic and n <= exact_limit:
        acyclic = max_acyclic_subset(T, exact_limit).size
    log_n = math.log2(n) if n > 1 else 0.0
    return {
        "n": n,
        "seed": seed,
        "exact_k": exact,
        "greedy_k": greedy.k,
        "max_acyclic": acyclic,
        "bound_3n_log": _fmt(3 * n / log_n) if n > 1 else "-",
        "bound_n_over_2logn1": _fmt(n / (2 * log_n + 1)),
        "bound_2logn1": _fmt(2 * log_n + 1),
    }


def greedy_bound_experiment(n: int, seeds: Iterable[int], exact_limit: int = DEFAULT_EXACT_LIMIT) -> list[dict]:
    return [tournament_row(n, s, exact_limit, want_acyclic=False) for s in seeds]


def max_acyclic_experiment(n: int, seeds: Iterable[int], exact_limit: int = DEFAULT_EXACT_LIMIT) -> list[dict]:
    return [tournament_row(n, s, exact_limit, want_acyclic=True) for s in seeds]


def triangle_property_experiment(n: int, k: int, s: int, seeds: Iterable[int], budget: int) -> list[dict]:
    rows = []
    for seed in seeds:
        M = random_lower_bound_instance(n, k, seed)
        if s > n:
            # no subset of that size exists
            outcome, samples = "vacuous", 0
        else:
            check = verify_triangle_property(voting_graph(M), s, budget, seed=seed)
            outcome, samples = check.outcome, check.samples
        rows.append({"n": n, "k": k, "s": s, "outcome": outcome, "samples": samples, "seed": seed})
    return rows


def rows_to_csv(rows: list[dict], columns: list[str]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=columns, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()
