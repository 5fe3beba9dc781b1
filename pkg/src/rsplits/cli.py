"""Command-line interface.

Exit codes follow one contract: 0 means true/success, 1 means a queried
property is false or a required hypothesis fails, 2 means a parse or
usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional

from .bitset import VertexSet
from .closure import close_degenerate, close_full
from .graph import cut_rank, is_r_rank_connected, parse_graph
from .hypergraph import (
    ClosedHypergraph,
    Hypergraph,
    format_closed,
    format_hypergraph,
    parse_closed,
    parse_hypergraph,
)
from .limits import TooLargeError
from .ortho import (
    FamilyParams,
    build_family,
    crossfree_size_bounds,
    find_crossing_pair,
    is_orthogonal,
    is_orthogonal_oracle,
)
from .splits import enumerate_r_splits, essential_representation, verify_representation
from .verification import PROFILES, run_verification_suite


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ValueError(f"cannot read {path}: {exc}") from None


def _usage_error(message: str) -> int:
    print(f"error: {message}", file=sys.stderr)
    return 2


def _write_out(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _emit(payload: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _load_graph(path: str):
    return parse_graph(_read(path))


def _load_hypergraph(path: str) -> Hypergraph:
    return parse_hypergraph(_read(path))


def _load_closed(path: str, r: int) -> ClosedHypergraph:
    closed = parse_closed(_read(path))
    if closed.r != r:
        raise ValueError(f"file declares r={closed.r}, command asked for r={r}")
    return closed


def cmd_rank(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    x = VertexSet.parse(g.n, args.set)
    rank = cut_rank(g, x)
    _emit({"command": "rank", "n": g.n, "set": str(x), "rank": rank}, args.json, [str(rank)])
    return 0


def cmd_splits(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    family = enumerate_r_splits(g, args.r, threads=args.threads)
    _write_out(format_closed(family), args.output)
    return 0


def cmd_connected(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    verdict = is_r_rank_connected(g, args.r)
    _emit(
        {"command": "connected", "n": g.n, "r": args.r, "r_rank_connected": verdict},
        args.json,
        ["r-rank connected" if verdict else "not r-rank connected"],
    )
    return 0 if verdict else 1


def cmd_essential(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    if not is_r_rank_connected(g, args.r):
        print(f"error: graph is not {args.r}-rank connected", file=sys.stderr)
        return 1
    family = enumerate_r_splits(g, args.r, threads=args.threads)
    _write_out(format_hypergraph(essential_representation(family)), args.output)
    return 0


def cmd_closure(args: argparse.Namespace) -> int:
    h = _load_hypergraph(args.hypergraph)
    close = close_degenerate if args.degenerate else close_full
    _write_out(format_closed(close(h, args.r)), args.output)
    return 0


def cmd_member(args: argparse.Namespace) -> int:
    closed = _load_closed(args.hypergraph, args.r)
    x = VertexSet.parse(closed.n, args.set)
    verdict = closed.contains(x)
    _emit(
        {"command": "member", "n": closed.n, "r": args.r, "set": str(x), "member": verdict},
        args.json,
        ["member" if verdict else "not a member"],
    )
    return 0 if verdict else 1


def cmd_ortho(args: argparse.Namespace) -> int:
    a = VertexSet.parse(args.n, args.set_a)
    b = VertexSet.parse(args.n, args.set_b)
    if args.oracle:
        verdict = is_orthogonal_oracle(a, b, args.r)
    else:
        verdict = is_orthogonal(a, b, args.r)
    _emit(
        {
            "command": "ortho",
            "n": args.n,
            "r": args.r,
            "a": str(a),
            "b": str(b),
            "mode": "definition" if args.oracle else "formula",
            "orthogonal": verdict,
        },
        args.json,
        ["orthogonal" if verdict else "crossing"],
    )
    return 0 if verdict else 1


def cmd_crossfree(args: argparse.Namespace) -> int:
    h = _load_hypergraph(args.hypergraph)
    crossing = find_crossing_pair(h, args.r)
    payload = {
        "command": "crossfree",
        "n": h.n,
        "r": args.r,
        "cross_free": crossing is None,
        "crossing_pair": None if crossing is None else [str(crossing[0]), str(crossing[1])],
    }
    if crossing is None:
        _emit(payload, args.json, ["cross-free"])
        return 0
    _emit(payload, args.json, [f"crossing pair: {crossing[0]} {crossing[1]}"])
    return 1


def cmd_family(args: argparse.Namespace) -> int:
    family = build_family(FamilyParams(args.r, args.k))
    _write_out(format_hypergraph(family), args.output)
    return 0


def cmd_bounds(args: argparse.Namespace) -> int:
    h = _load_hypergraph(args.hypergraph)
    crossing = find_crossing_pair(h, args.r)
    if crossing is not None:
        print(
            f"error: input is not {args.r}-cross-free: {crossing[0]} and {crossing[1]} cross",
            file=sys.stderr,
        )
        return 1
    report = crossfree_size_bounds(h, args.r)
    lines = [
        f"middle edges        {report.middle_edges}",
        f"closure middles     {report.closure_middles}",
        f"closure total       {report.closure_total}",
        f"closure cap         {report.closure_cap}",
        f"chain {report.middle_edges} <= {report.closure_middles} <= {2 * report.middle_edges}: "
        + ("holds" if report.chain_holds else "VIOLATED"),
        f"cap {report.closure_total} <= {report.closure_cap}: "
        + ("holds" if report.cap_holds else "VIOLATED"),
    ]
    _emit({"command": "bounds", **report.to_dict()}, args.json, lines)
    return 0 if report.passed else 1


def cmd_verify(args: argparse.Namespace) -> int:
    if args.graph is not None:
        g = _load_graph(args.graph)
        r = args.r if args.r is not None else 1
        if not is_r_rank_connected(g, r):
            print(f"error: graph is not {r}-rank connected", file=sys.stderr)
            return 1
        report = verify_representation(g, r, threads=args.threads)
        lines = [
            f"splits (middles)    {report.middle_count}",
            f"essential members   {report.essential_count}",
            f"essential bound     {report.essential_bound}",
            f"closure round trip  {'ok' if report.closure_matches else 'MISMATCH'}",
            "PASS" if report.passed else "FAIL",
        ]
        _emit({"command": "verify", **report.to_dict()}, args.json, lines)
        return 0 if report.passed else 1
    suite = run_verification_suite(seed=args.seed, profile=args.profile)
    _emit(
        {"command": "verify", **suite.to_dict()},
        args.json,
        suite.format_lines().splitlines(),
    )
    return 0 if suite.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rsplit",
        description=(
            "Cut-rank and r-split machinery: enumerate low-rank cuts of a graph, "
            "close hyperedge families under the complement and union rules, extract "
            "essential generators, and test r-orthogonality."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(func=func)
        p.add_argument("--json", action="store_true", help="emit the result as one JSON object")
        return p

    p = add("rank", cmd_rank, "rank of the cut at a vertex set")
    p.add_argument("-g", "--graph", required=True, help="graph file")
    p.add_argument("-X", dest="set", required=True, help="vertex set, e.g. 1,3,7 ('-' for empty)")

    p = add("splits", cmd_splits, "enumerate all r-splits as a closed family")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-o", "--output", help="write here instead of stdout")
    p.add_argument("--threads", type=int, default=1)

    p = add("connected", cmd_connected, "test r-rank connectivity (exit 0/1)")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("-r", type=int, required=True)

    p = add("essential", cmd_essential, "essential members of the r-split family")
    p.add_argument("-g", "--graph", required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-o", "--output")
    p.add_argument("--threads", type=int, default=1)

    p = add("closure", cmd_closure, "close a family under the rules (K2 optional)")
    p.add_argument("-H", "--hypergraph", required=True, help="hypergraph file")
    p.add_argument("-r", type=int, required=True)
    p.add_argument("--degenerate", action="store_true", help="complement rule only, no unions")
    p.add_argument("-o", "--output")

    p = add("member", cmd_member, "membership in a closed family (exit 0/1)")
    p.add_argument("-H", "--hypergraph", required=True, help="closed-hypergraph file")
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-X", dest="set", required=True)

    p = add("ortho", cmd_ortho, "r-orthogonality of two vertex sets (exit 0/1)")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-A", dest="set_a", required=True)
    p.add_argument("-B", dest="set_b", required=True)
    p.add_argument("--oracle", action="store_true", help="decide via pair closures, not the formula")

    p = add("crossfree", cmd_crossfree, "test whether a family is r-cross-free (exit 0/1)")
    p.add_argument("-H", "--hypergraph", required=True)
    p.add_argument("-r", type=int, required=True)

    p = add(
        "family",
        cmd_family,
        "the colored value-sum family with k^r edges over n = k(r+1) vertices; "
        "value v of color c is vertex (c-1)*k + v + 1",
    )
    p.add_argument("-r", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p.add_argument("-o", "--output")

    p = add("bounds", cmd_bounds, "size bounds of a cross-free family and its closure")
    p.add_argument("-H", "--hypergraph", required=True)
    p.add_argument("-r", type=int, required=True)

    p = add("verify", cmd_verify, "round-trip check for a graph, or the full property suite")
    p.add_argument("-g", "--graph", help="check reconstruction of this graph's r-splits")
    p.add_argument("-r", type=int, help="rank parameter (default 1 with -g)")
    p.add_argument("--seed", type=int, default=2024)
    p.add_argument("--profile", choices=PROFILES, default="quick")
    p.add_argument("--threads", type=int, default=1)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TooLargeError as exc:
        return _usage_error(str(exc))
    except ValueError as exc:
        return _usage_error(str(exc))


if __name__ == "__main__":
    sys.exit(main())
