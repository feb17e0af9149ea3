"""Command-line front end.

Exit codes: 0 success / consistent, 1 inconsistent profile, 2 usage, I/O or
parse errors. Reports go to stdout; JSON, CSV and DOT are only written to the
path given with ``--output``.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import experiments
from .core import classify, parse_matrix, serialize_matrix, unanimity_graph, voting_graph
from .errors import RationalityError
from .halfint import random_lower_bound_instance
from .integral import DEFAULT_EXACT_LIMIT, rationality_number, random_tournament
from .profile import check_consistency, parse_profile, profile_width, serialize_profile


class UsageError(Exception):
    pass


def parse_seeds(text: str) -> list[int]:
    """``"7"``, ``"1,3,5"`` or an inclusive range ``"1..20"``."""
    seeds = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            lo, hi = part.split("..", 1)
            seeds.extend(range(int(lo), int(hi) + 1))
        elif part:
            seeds.append(int(part))
    if not seeds or any(s < 0 for s in seeds):
        raise ValueError(f"bad seed list {text!r}")
    return seeds


def _read_matrix(path: str):
    data = Path(path).read_bytes()
    fmt = "csv" if path.lower().endswith(".csv") else "json"
    return parse_matrix(data, fmt)


def _write(path: str, text: str) -> None:
    Path(path).write_text(text, encoding="utf-8")


def cmd_analyze(args) -> int:
    M = _read_matrix(args.input)
    if args.exact_limit < 0:
        raise UsageError("--exact-limit must be non-negative")
    cls = classify(M)
    D, G = voting_graph(M), unanimity_graph(M)
    result = rationality_number(M, exact_limit=args.exact_limit)
    voters = len(result.certificate)
    noun = "voter" if voters == 1 else "voters"
    if result.exact:
        headline = f"class={cls.value} alpha={result.upper}"
    else:
        headline = f"class={cls.value} alpha in [{result.lower},{result.upper}]"
    print(f"{headline} certificate={voters} {noun}")
    print(f"candidates={M.n} voting_arcs={len(D.arcs)} unanimity_edges={len(G.edges)}")
    if result.cycle:
        print("directed cycle: " + " -> ".join(map(str, result.cycle + result.cycle[:1])))
    else:
        print("voting graph acyclic")
    print(f"certificate width={profile_width(result.certificate)}")
    for note in result.notes:
        print(f"note: {note}")
    print(f"log base={result.log_base}")
    if args.output:
        if args.format == "dot":
            _write(args.output, D.to_dot() + G.to_dot())
        elif args.format == "json":
            _write(args.output, serialize_profile(result.certificate))
        else:
            raise UsageError("analyze writes --format json (certificate) or dot (graphs)")
    return 0


def cmd_verify(args) -> int:
    M = _read_matrix(args.input)
    V = parse_profile(Path(args.profile).read_bytes())
    report = check_consistency(V, M)
    print("consistent" if report.consistent else "inconsistent")
    for v in report.violations:
        print(
            f"violation ({v.i},{v.j}) side={v.side} strong={v.strong_fraction} "
            f"p={v.p_ij} weak={v.weak_fraction}"
        )
    print(f"voters={len(V)} width={profile_width(V)}")
    return 0 if report.consistent else 1


def cmd_generate(args) -> int:
    if args.n is None or args.n < 1:
        raise UsageError("--n must be a positive integer")
    if args.seed < 0:
        raise UsageError("--seed must be non-negative")
    if args.kind == "tournament":
        M = random_tournament(args.n, args.seed).to_matrix()
    else:
        if args.k is None:
            raise UsageError("kpartite needs --k")
        M = random_lower_bound_instance(args.n, args.k, args.seed)
    fmt = args.format or "json"
    if fmt not in ("json", "csv"):
        raise UsageError("generate writes --format json or csv")
    _write(args.output, serialize_matrix(M, fmt))
    print(f"wrote {args.kind} matrix n={M.n} class={classify(M).value} unanimous_pairs={len(unanimity_graph(M).edges)}")
    return 0


def cmd_experiment(args) -> int:
    seeds = parse_seeds(args.seeds)
    if args.n is None or args.n < 1:
        raise UsageError("--n must be a positive integer")
    if args.name == "greedy-bound":
        rows = experiments.greedy_bound_experiment(args.n, seeds, args.exact_limit)
        columns = experiments.TOURNAMENT_COLUMNS
    elif args.name == "max-acyclic":
        rows = experiments.max_acyclic_experiment(args.n, seeds, args.exact_limit)
        columns = experiments.TOURNAMENT_COLUMNS
    else:
        if args.k is None or args.s is None:
            raise UsageError("triangle-property needs --k and --s")
        if args.s < 3 or args.budget < 1:
            raise UsageError("--s must be >= 3 and --budget positive")
        rows = experiments.triangle_property_experiment(args.n, args.k, args.s, seeds, args.budget)
        columns = experiments.TRIANGLE_COLUMNS
    print("  ".join(columns))
    for row in rows:
        print("  ".join(str(row[c]) for c in columns))
    if args.output:
        _write(args.output, experiments.rows_to_csv(rows, columns))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rationality",
        description="Rationality numbers of preference matrices: analysis, verification, experiments.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="classify a matrix and bound its rationality number")
    p.add_argument("--input", required=True, help="matrix file (.json or .csv)")
    p.add_argument("--output", help="where to write the certificate profile (or DOT graphs)")
    p.add_argument("--format", choices=["json", "csv", "dot"], default="json")
    p.add_argument("--exact-limit", type=int, default=DEFAULT_EXACT_LIMIT)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("verify", help="check a voter profile against a matrix")
    p.add_argument("--input", required=True, help="matrix file (.json or .csv)")
    p.add_argument("--profile", required=True, help="profile JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generate", help="write a random instance")
    p.add_argument("kind", choices=["tournament", "kpartite"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output", required=True)
    p.add_argument("--format", choices=["json", "csv", "dot"])
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("experiment", help="run a seeded sweep and emit CSV rows")
    p.add_argument("name", choices=["greedy-bound", "max-acyclic", "triangle-property"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--s", type=int)
    p.add_argument("--seeds", default="1..20", help='e.g. "1..20" or "1,2,3"')
    p.add_argument("--budget", type=int, default=100_000)
    p.add_argument("--exact-limit", type=int, default=DEFAULT_EXACT_LIMIT)
    p.add_argument("--output", help="CSV destination")
    p.set_defaults(func=cmd_experiment)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (RationalityError, UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
