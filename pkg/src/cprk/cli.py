"""Command line entry point: ``cprk {exact,table,verify,draw,oracle}``.

Exit codes: 0 success, 1 I/O failure or verification mismatch, 2 usage or
parse error, 3 resource limit or overflow.
"""

from __future__ import annotations

import argparse
import logging
import sys
import time
from pathlib import Path
from typing import List, Optional, Sequence

from .errors import CountOverflowError, GraphParseError, InvalidInputError, ResourceLimitError
from .graphio import read_graph
from .model import CompleteBipartiteSpec, complete_bipartite_graph
from .optimizer import cpr_exact
from .oracle import OracleConfig, brute_force_chromatic_cpr, brute_force_cpr, brute_force_outerplanar
from .records import OutputRecord, render
from .svg import render_svg

log = logging.getLogger("cprk")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


def timed_record(m: int, n: int, K: int, workers: int = 1) -> OutputRecord:
    t0 = time.perf_counter()
    result = cpr_exact(m, n, K, workers=workers)
    return OutputRecord.from_result(result, (time.perf_counter() - t0) * 1000.0)


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
    else:
        print(text)


def cmd_exact(args: argparse.Namespace) -> int:
    record = timed_record(args.m, args.n, args.K, args.workers)
    _emit(render([record], args.format, single=True), args.out)
    return EXIT_OK


def table_records(m_max: int, n_max: int, K_max: int, workers: int = 1) -> List[OutputRecord]:
    rows = []
    for m in range(1, m_max + 1):
        for n in range(1, n_max + 1):
            for K in range(2, min(K_max, m + n) + 1):
                rows.append(timed_record(m, n, K, workers))
    return rows


def cmd_table(args: argparse.Namespace) -> int:
    if min(args.m_max, args.n_max) < 1 or args.K_max < 2:
        raise UsageError("need --m-max >= 1, --n-max >= 1, --K-max >= 2")
    rows = table_records(args.m_max, args.n_max, args.K_max, args.workers)
    _emit(render(rows, args.format), args.out)
    return EXIT_OK


def verify_range(m_max: int, n_max: int, K_max: int, budget: int) -> tuple:
    """Compare optimizer and oracle everywhere in range.

    Returns ``(checked, mismatches)`` where each mismatch is a description.
    """
    config = OracleConfig(max_vertices=budget)
    checked, mismatches = 0, []
    for m in range(1, m_max + 1):
        for n in range(1, n_max + 1):
            graph = complete_bipartite_graph(m, n)
            for K in range(2, min(K_max, m + n) + 1):
                result = cpr_exact(m, n, K)
                oracle = brute_force_cpr(graph, K, config)
                checked += 1
                if result.value != oracle.value:
                    mismatches.append(
                        f"m={m} n={n} K={K}: optimizer {result.value} != oracle {oracle.value} "
                        f"(oracle order {oracle.order})"
                    )
                if result.lower_bound.exact > result.value:
                    mismatches.append(
                        f"m={m} n={n} K={K}: bound {result.lower_bound} exceeds value {result.value}"
                    )
    return checked, mismatches


def cmd_verify(args: argparse.Namespace) -> int:
    if min(args.m_max, args.n_max) < 1 or args.K_max < 2:
        raise UsageError("need --m-max >= 1, --n-max >= 1, --K-max >= 2")
    if args.m_max + args.n_max > args.budget:
        raise ResourceLimitError(
            f"K_{{{args.m_max},{args.n_max}}} exceeds the oracle budget of {args.budget} vertices"
        )
    checked, mismatches = verify_range(args.m_max, args.n_max, args.K_max, args.budget)
    for line in mismatches:
        print("MISMATCH " + line)
    print(f"checked {checked} instances, {len(mismatches)} mismatches")
    if mismatches:
        return EXIT_FAIL
    print("all instances match")
    return EXIT_OK


def cmd_draw(args: argparse.Namespace) -> int:
    spec = CompleteBipartiteSpec(args.m, args.n)
    result = cpr_exact(args.m, args.n, args.K)
    svg = render_svg(spec, result.witness, args.K, result.value)
    Path(args.out).write_text(svg, encoding="utf-8")
    print(f"wrote {args.out}: {result.value} crossings, witness {result.witness}")
    return EXIT_OK


def _parse_kmn(text: str) -> tuple:
    try:
        m, n = (int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"--kmn expects 'm,n', got {text!r}") from None
    return m, n


def cmd_oracle(args: argparse.Namespace) -> int:
    config = OracleConfig(max_vertices=args.budget)
    if args.kmn:
        graph = complete_bipartite_graph(*_parse_kmn(args.kmn))
    else:
        graph = read_graph(args.graph)
    if args.k is None:
        count = brute_force_outerplanar(graph, config)
    elif graph.partition is not None:
        count = brute_force_cpr(graph, args.k, config)
    else:
        count = brute_force_chromatic_cpr(graph, args.k, config)
    print(count.value)
    print("order: " + " ".join(map(str, count.order)))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cprk", description="Circular k-partite crossing numbers of K_{m,n}."
    )
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("exact", help="exact cpr_K(K_{m,n}) with bound and witness")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--K", type=int, required=True)
    p.add_argument("--format", choices=("text", "json", "csv"), default="text")
    p.add_argument("--out")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_exact)

    p = sub.add_parser("table", help="sweep of exact values")
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--K-max", type=int, required=True)
    p.add_argument("--format", choices=("text", "json", "csv"), default="csv")
    p.add_argument("--out")
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="cross-check the optimizer against brute force")
    p.add_argument("--m-max", type=int, required=True)
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--K-max", type=int, required=True)
    p.add_argument("--budget", type=int, default=OracleConfig().max_vertices)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("draw", help="SVG of an optimal drawing")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--K", type=int, required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_draw)

    p = sub.add_parser("oracle", help="brute-force minimum for small graphs")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph", help="graph file: 'p q', q edge lines, optional 'part u label'")
    src.add_argument("--kmn", help="complete bipartite graph as 'm,n'")
    p.add_argument("--k", type=int, help="number of arcs; omit for the outerplanar minimum")
    p.add_argument("--budget", type=int, default=OracleConfig().max_vertices)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except GraphParseError as exc:
        print(f"cprk: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, InvalidInputError) as exc:
        print(f"cprk: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ResourceLimitError, CountOverflowError) as exc:
        print(f"cprk: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except OSError as exc:
        print(f"cprk: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
