"""Command-line front end.

    tokengraphs build    --family cycle --n 7 --k 2 --dot out.dot
    tokengraphs aut      --family grid --rows 2 --cols 3 --k 2
    tokengraphs verify   --claim thm-cycle --n 3..12
    tokengraphs distance --n 7 --k 3 --u 1,2,3 --v 5,6,7 --oracle

Exit codes: 0 success, 1 a theorem-level claim was refuted (or an oracle
disagreed), 2 bad input, 3 capacity exceeded.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Sequence

from . import theorems
from .errors import CapacityError, ContractViolation, ParameterError, TokenGraphError
from .formats import from_edge_list, from_graph6, to_dot, to_graph6
from .graph import FAMILIES, FamilySpec, Graph, make_family, path_graph
from .path_metrics import bfs_distance, sorted_tuple, token_path_distance
from .search import SearchConfig, automorphism_report
from .tokens import build_token_graph, mask_of

EXIT_REFUTED, EXIT_INPUT, EXIT_CAPACITY = 1, 2, 3

FAMILY_HELP = (
    "graph family: path P_n, cycle C_n, star K_{1,n-1} (--n counts all vertices, "
    "the centre is vertex 1), fan A_{1,n} = K_1 + P_n and wheel W_{1,n} = K_1 + C_n "
    "(--n is the rim, the hub is vertex n+1), complete K_n, grid G_{rows,cols}"
)


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # exit 2 like every other input error
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def parse_range(text: str) -> list[int]:
    """``"3..12"`` (inclusive), ``"5"`` or ``"3,5,8"``."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
            if hi < lo:
                raise ParameterError(f"empty range {text!r}")
            return list(range(lo, hi + 1))
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ParameterError(f"bad range {text!r}; use a..b, a or a,b,c") from None


def parse_labels(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ParameterError(f"bad vertex list {text!r}; use comma-separated 1-based labels") from None


def _add_graph_input(p: argparse.ArgumentParser) -> None:
    src = p.add_argument_group("base graph (one of --family, --graph6, --edges)")
    src.add_argument("--family", choices=FAMILIES, help=FAMILY_HELP)
    src.add_argument("--n", type=int, help="family size parameter (see --family)")
    src.add_argument("--rows", type=int, help="grid rows")
    src.add_argument("--cols", type=int, help="grid columns")
    src.add_argument("--graph6", metavar="TEXT|FILE", help="graph6 string, or a file holding one")
    src.add_argument("--edges", metavar="FILE", help="edge list file, 1-based labels")
    p.add_argument("--k", type=int, help="number of tokens; omit to use the base graph itself")


def _read_text(value: str) -> str:
    if os.path.isfile(value):
        with open(value, encoding="ascii") as fh:
            return fh.read()
    return value


def load_base(args: argparse.Namespace) -> tuple[Graph, str]:
    chosen = [x for x in ("family", "graph6", "edges") if getattr(args, x)]
    if len(chosen) != 1:
        raise ParameterError("give exactly one of --family, --graph6, --edges")
    if args.family:
        if args.family == "grid":
            if args.rows is None or args.cols is None:
                raise ParameterError("grid needs --rows and --cols")
            spec = FamilySpec("grid", (args.rows, args.cols))
        else:
            if args.n is None:
                raise ParameterError(f"{args.family} needs --n")
            spec = FamilySpec(args.family, (args.n,))
        return make_family(spec), spec.label()
    if args.graph6:
        return from_graph6(_read_text(args.graph6)), "graph6 input"
    try:
        with open(args.edges, encoding="utf-8") as fh:
            return from_edge_list(fh.read(), args.n), args.edges
    except OSError as exc:
        raise ParameterError(f"cannot read {args.edges}: {exc}") from None


def _write(path: str, text: str) -> None:
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise ParameterError(f"cannot write {path}: {exc}") from None


def _emit(text: str, out: str | None) -> None:
    if out:
        _write(out, text)
    else:
        sys.stdout.write(text)


# -- subcommands ------------------------------------------------------------


def cmd_build(args: argparse.Namespace) -> int:
    base, name = load_base(args)
    if args.k is None:
        graph, labels = base, None
        title = name
    else:
        tg = build_token_graph(base, args.k)
        graph, labels = tg.graph, tg.label
        title = f"F_{args.k}({name})"
    if args.dot:
        _write(args.dot, to_dot(graph, name="F" if args.k else "G", labels=labels))
    if args.graph6_out:
        _write(args.graph6_out, to_graph6(graph) + "\n")
    summary = {
        "graph": title,
        "vertices": graph.n,
        "edges": graph.num_edges,
        "degree_histogram": {str(d): c for d, c in graph.degree_histogram().items()},
    }
    sys.stdout.write(json.dumps(summary, indent=2, sort_keys=True) + "\n")
    return 0


def cmd_aut(args: argparse.Namespace) -> int:
    base, _ = load_base(args)
    cfg = SearchConfig(parallel=args.parallel, verify=args.verify)
    if args.k is None:
        report = automorphism_report(base, cfg)
    else:
        tg = build_token_graph(base, args.k)
        report = automorphism_report(tg.graph, cfg, labels=[tg.label(r) for r in range(tg.order)])
    _emit(report.to_json(args.timing) + "\n", args.out)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.all == bool(args.claim):
        raise ParameterError("give exactly one of --claim and --all")
    if args.max_size < 1 or args.jobs < 1:
        raise ParameterError("--max-size and --jobs must be positive")
    if args.all:
        verdicts = theorems.run_all(args.max_size, args.time_limit, args.jobs)
    else:
        if args.claim not in theorems.CLAIM_IDS:
            raise ParameterError(f"unknown claim {args.claim!r}; choose from {', '.join(theorems.CLAIM_IDS)}")
        ns = parse_range(args.n) if args.n else None
        ks = parse_range(args.k) if args.k else None
        try:
            verdicts = theorems.run_claim(args.claim, ns, ks, args.family, args.max_size,
                                          args.time_limit, args.jobs)
        except ValueError as exc:
            if isinstance(exc, TokenGraphError):
                raise
            raise ParameterError(str(exc)) from None
    report = theorems.report_json(verdicts, args.timing)
    if args.out:
        _write(args.out, report)
    if args.json and not args.out:
        sys.stdout.write(report)
    else:
        sys.stdout.write(theorems.summary_table(verdicts))
    return EXIT_REFUTED if theorems.any_theorem_refuted(verdicts) else 0


def cmd_distance(args: argparse.Namespace) -> int:
    u, v = parse_labels(args.u), parse_labels(args.v)
    if len(u) != len(v):
        raise ParameterError(f"token counts differ: {len(u)} vs {len(v)}")
    k = args.k if args.k is not None else len(u)
    if k != len(u):
        raise ParameterError(f"--k {k} but the vertices have {len(u)} labels")
    n = args.n if args.n is not None else max(u + v, default=0)
    a, b = sorted_tuple(u, n), sorted_tuple(v, n)
    if k < 1:
        raise ParameterError("need at least one token")
    d = token_path_distance(a, b, n)
    sys.stdout.write(f"{d}\n")
    if args.oracle:
        tg = build_token_graph(path_graph(n), k)
        got = bfs_distance(tg, tg.rank(mask_of(x - 1 for x in a)), tg.rank(mask_of(x - 1 for x in b)))
        if got != d:
            sys.stdout.write(f"oracle-disagree bfs={got}\n")
            return EXIT_REFUTED
        sys.stdout.write("oracle-agree\n")
    return 0


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tokengraphs", description="Token graphs F_k(G) and their automorphism groups.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("build", help="construct F_k(G); print sizes and the degree histogram")
    _add_graph_input(p)
    p.add_argument("--dot", metavar="FILE", help="write DOT with subset labels")
    p.add_argument("--graph6-out", metavar="FILE", help="write graph6")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("aut", help="automorphism group of G or F_k(G) as JSON")
    _add_graph_input(p)
    p.add_argument("--timing", action="store_true", help="include wall-clock seconds")
    p.add_argument("--verify", action="store_true", help="re-count by plain backtracking")
    p.add_argument("--parallel", action="store_true", help="search top-level branches in worker processes")
    p.add_argument("--out", metavar="FILE", help="write the JSON report here")
    p.set_defaults(func=cmd_aut)

    p = sub.add_parser("verify", help="run the claim checks")
    p.add_argument("--claim", help="one of: " + ", ".join(theorems.CLAIM_IDS))
    p.add_argument("--all", action="store_true", help="run every claim over its default sweep")
    p.add_argument("--n", help="size range, e.g. 3..12 (family index; star counts all vertices "
                               "in thm-star but leaves in conj-star)")
    p.add_argument("--k", help="token range, e.g. 3 or 3..5")
    p.add_argument("--family", choices=FAMILIES, help="family for thm-induced / obs-degree")
    p.add_argument("--max-size", type=int, default=2000, help="skip token graphs with more vertices")
    p.add_argument("--time-limit", type=float, default=None, help="seconds per conjecture search")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    p.add_argument("--out", metavar="FILE", help="write the JSON verdict report here")
    p.add_argument("--json", action="store_true", help="print JSON instead of the table")
    p.add_argument("--timing", action="store_true", help="include per-check runtimes in JSON")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("distance", help="distance between two vertices of F_k(P_n)")
    p.add_argument("--n", type=int, help="path order (default: largest label)")
    p.add_argument("--k", type=int, help="tokens (default: number of labels)")
    p.add_argument("--u", required=True, help="1-based labels, e.g. 1,2,3")
    p.add_argument("--v", required=True, help="1-based labels, e.g. 5,6,7")
    p.add_argument("--oracle", action="store_true", help="also run BFS on F_k(P_n) and compare")
    p.set_defaults(func=cmd_distance)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (ParameterError, ContractViolation) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT if isinstance(exc, ParameterError) else EXIT_REFUTED


if __name__ == "__main__":
    sys.exit(main())
